// Shared helpers and independent oracles for the test suites.
#pragma once

#include <ostream>
#include <random>
#include <vector>

#include "qverify/qverify.hpp"

namespace qverify {
inline void PrintTo(const LaurentPoly& p, std::ostream* os) { *os << p.to_string(); }
inline void PrintTo(const RatFunc& f, std::ostream* os) { *os << f.to_string(); }
} // namespace qverify

namespace qtest {

using namespace qverify;

inline LaurentPoly P(std::string_view s) { return LaurentPoly::parse(s); }
inline RatFunc R(std::string_view s) { return RatFunc::parse(s); }
inline Monomial var(Variable v) { return Monomial::variable(v); }
inline Monomial mono(std::int64_t c, int eq, int ea = 0, int eb = 0) { return {BigRat(c), ExpVec{eq, ea, eb}}; }

/// Small random Laurent polynomial: up to `terms` terms, exponents in [-2, 3].
inline LaurentPoly random_poly(std::mt19937_64& rng, int terms = 4)
{
    std::uniform_int_distribution<int> count(0, terms), ex(-2, 3), coef(-5, 5), den(1, 3);
    std::vector<Term> ts;
    for (int i = count(rng); i > 0; --i) {
        ExpVec e{ex(rng), ex(rng), ex(rng)};
        BigRat c = BigRat(coef(rng)) / BigRat(den(rng));
        ts.push_back(Term{e, c});
    }
    return LaurentPoly::from_terms(std::move(ts));
}

inline LaurentPoly random_nonzero_poly(std::mt19937_64& rng, int terms = 4)
{
    for (;;) {
        LaurentPoly p = random_poly(rng, terms);
        if (!p.is_zero())
            return p;
    }
}

inline RatFunc random_ratfunc(std::mt19937_64& rng)
{
    return RatFunc(random_poly(rng, 3), random_nonzero_poly(rng, 3));
}

inline FieldPoint random_point(std::mt19937_64& rng, std::uint64_t p = mersenne61)
{
    std::uniform_int_distribution<std::uint64_t> d(1, p - 1);
    FieldPoint pt;
    pt.prime = p;
    pt.q = d(rng);
    pt.a = d(rng);
    pt.b = d(rng);
    return pt;
}

// Exact evaluation over Q at a rational point, written directly on the term
// list; shares nothing with the symbolic engine beyond BigRat.
struct QPoint {
    BigRat q{2}, a{3}, b{5};
    BigRat value(Variable v) const { return v == Variable::q ? q : v == Variable::a ? a : b; }
};

inline BigRat eval_q(const Monomial& m, const QPoint& x)
{
    return m.coef * x.q.pow(m.exp.q) * x.a.pow(m.exp.a) * x.b.pow(m.exp.b);
}

inline BigRat eval_q(const LaurentPoly& p, const QPoint& x)
{
    BigRat acc(0);
    for (const auto& t : p.terms())
        acc = acc + eval_q(Monomial{t.coef, t.exp}, x);
    return acc;
}

inline BigRat eval_q(const RatFunc& f, const QPoint& x) { return eval_q(f.num(), x) / eval_q(f.den(), x); }

/// (x; y)_m over Q from the product definition, any integer m.
inline BigRat naive_poch(BigRat x, BigRat y, std::int64_t m)
{
    BigRat acc(1);
    if (m >= 0) {
        for (std::int64_t i = 0; i < m; ++i)
            acc = acc * (BigRat(1) - x * y.pow(i));
        return acc;
    }
    for (std::int64_t i = 1; i <= -m; ++i)
        acc = acc * (BigRat(1) - x * y.pow(-i));
    return BigRat(1) / acc;
}

/// k-th summand of a basic hypergeometric series over Q, each Pochhammer
/// product computed from scratch.
inline BigRat naive_term(const std::vector<BigRat>& up, const std::vector<BigRat>& lo, BigRat base, BigRat z,
                         std::int64_t k)
{
    if (k < 0)
        return BigRat(0);
    BigRat num = z.pow(k), den = naive_poch(base, base, k);
    for (const auto& u : up)
        num = num * naive_poch(u, base, k);
    for (const auto& l : lo)
        den = den * naive_poch(l, base, k);
    return num / den;
}

/// Catalan numbers by the convolution recurrence C_{m+1} = sum C_i C_{m-i}.
inline std::vector<BigInt> catalan_by_convolution(int upto)
{
    std::vector<BigInt> c{BigInt(1)};
    for (int m = 0; m < upto; ++m) {
        BigInt s = 0;
        for (int i = 0; i <= m; ++i)
            s += c[i] * c[m - i];
        c.push_back(s);
    }
    return c;
}

} // namespace qtest
