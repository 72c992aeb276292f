#ifndef QVERIFY_QSERIES_HPP
#define QVERIFY_QSERIES_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "field_ops.hpp"

namespace qverify {

/// c0 + cn*n + ck*k.
struct AffineInt {
    std::int64_t c0 = 0;
    std::int64_t cn = 0;
    std::int64_t ck = 0;

    static AffineInt constant(std::int64_t c) { return {c, 0, 0}; }

    std::int64_t at(std::int64_t n, std::int64_t k = 0) const { return c0 + cn * n + ck * k; }
    bool is_constant() const noexcept { return cn == 0 && ck == 0; }

    friend AffineInt operator+(AffineInt x, AffineInt y) { return {x.c0 + y.c0, x.cn + y.cn, x.ck + y.ck}; }
    friend AffineInt operator-(AffineInt x, AffineInt y) { return {x.c0 - y.c0, x.cn - y.cn, x.ck - y.ck}; }
    friend AffineInt operator*(AffineInt x, std::int64_t s) { return {x.c0 * s, x.cn * s, x.ck * s}; }
    AffineInt operator-() const { return {-c0, -cn, -ck}; }

    friend bool operator==(const AffineInt&, const AffineInt&) = default;
};

/// ±q^(affine) * a^e * b^f.
struct AffineParam {
    int sign = 1;
    AffineInt q_exp;
    std::int32_t a_exp = 0;
    std::int32_t b_exp = 0;

    Monomial at(std::int64_t n, std::int64_t k = 0) const
    {
        return {BigRat(sign), ExpVec{static_cast<std::int32_t>(q_exp.at(n, k)), a_exp, b_exp}};
    }

    friend bool operator==(const AffineParam&, const AffineParam&) = default;
};

/// Terminating basic hypergeometric series
///   sum_{k=0}^{N} (u_1,...,u_r; q^s)_k / (q^s, l_1,...,l_{r-1}; q^s)_k * z^k.
/// The (q^s; q^s)_k factor is implicit and never listed in `lower`.
struct PhiSpec {
    std::vector<AffineParam> upper;
    std::vector<AffineParam> lower;
    int step = 1;
    AffineParam argument;
    AffineInt length;
};

// Generic routines shared by the RatFunc API and the expression evaluator.
// `base` is the image of q^s, so substituted series are handled uniformly.

/// (x; base)_m for any integer m; m < 0 uses (x;p)_m = 1 / prod_{i=1}^{|m|} (1 - x p^{-i}).
template <FieldOps Ops>
typename Ops::value_type pochhammer(const Ops& ops, const Monomial& x, const Monomial& base, std::int64_t m)
{
    auto acc = ops.constant(BigRat(1));
    if (m >= 0) {
        Monomial factor = x;
        for (std::int64_t i = 0; i < m; ++i) {
            acc = ops.mul(acc, ops.one_minus(factor));
            factor = factor * base;
        }
        return acc;
    }
    Monomial step = base.inverse();
    Monomial factor = x * step;
    for (std::int64_t i = 1; i <= -m; ++i) {
        acc = ops.mul(acc, ops.one_minus(factor));
        factor = factor * step;
    }
    return ops.div(ops.constant(BigRat(1)), acc, ZeroDivisor::negative_pochhammer);
}

/// k-th summand computed from scratch; zero for k < 0.
template <FieldOps Ops>
typename Ops::value_type series_term(const Ops& ops, std::span<const Monomial> upper, std::span<const Monomial> lower,
                                     const Monomial& base, const typename Ops::value_type& z, std::int64_t k)
{
    if (k < 0)
        return ops.constant(BigRat(0));
    auto num = ops.pow(z, k);
    for (const auto& u : upper)
        num = ops.mul(num, pochhammer(ops, u, base, k));
    auto den = pochhammer(ops, base, base, k);
    for (const auto& l : lower)
        den = ops.mul(den, pochhammer(ops, l, base, k));
    return ops.div(num, den, ZeroDivisor::series_denominator, static_cast<std::size_t>(k));
}

/// Sum of the summands k = 0..length, each obtained from the previous one by
/// multiplying in the new Pochhammer factors.
template <FieldOps Ops>
typename Ops::value_type series_sum(const Ops& ops, std::span<const Monomial> upper, std::span<const Monomial> lower,
                                    const Monomial& base, const typename Ops::value_type& z, std::int64_t length)
{
    auto one = ops.constant(BigRat(1));
    auto total = one;
    auto num = one;
    auto den = one;
    Monomial shift{BigRat(1), {}}; // base^(k-1)
    for (std::int64_t k = 1; k <= length; ++k) {
        for (const auto& u : upper)
            num = ops.mul(num, ops.one_minus(u * shift));
        for (const auto& l : lower)
            den = ops.mul(den, ops.one_minus(l * shift));
        shift = shift * base;
        den = ops.mul(den, ops.one_minus(shift));
        num = ops.mul(num, z);
        total = ops.add(total, ops.div(num, den, ZeroDivisor::series_denominator, static_cast<std::size_t>(k)));
    }
    return total;
}

/// 𝒞_m(1, x) = x^{2m} (-1/x; x^2)_m / (x^2; x^2)_m with x the image of q.
template <FieldOps Ops>
typename Ops::value_type q_catalan(const Ops& ops, const Monomial& x, std::int64_t m)
{
    Monomial base = x.pow(2);
    auto num = ops.mul(ops.monomial(x.pow(2 * m)), pochhammer(ops, -x.inverse(), base, m));
    return ops.div(num, pochhammer(ops, base, base, m));
}

inline Monomial q_power(std::int64_t e) { return {BigRat(1), ExpVec::of(Variable::q, static_cast<std::int32_t>(e))}; }

// RatFunc-level API.

inline RatFunc pochhammer(const Monomial& x, int step, std::int64_t m)
{
    return pochhammer(SymbolicOps{}, x, q_power(step), m).to_ratfunc();
}

/// (x; q^s)_m for a general rational function x.
inline RatFunc pochhammer(const RatFunc& x, int step, std::int64_t m)
{
    RatFunc base(LaurentPoly(q_power(step)));
    RatFunc acc(LaurentPoly(1));
    if (m >= 0) {
        RatFunc factor = x;
        for (std::int64_t i = 0; i < m; ++i) {
            acc = acc * (RatFunc(LaurentPoly(1)) - factor);
            factor = factor * base;
        }
        return acc;
    }
    RatFunc inv = base.recip();
    RatFunc factor = x * inv;
    for (std::int64_t i = 1; i <= -m; ++i) {
        RatFunc f = RatFunc(LaurentPoly(1)) - factor;
        if (f.is_zero())
            throw ZeroFactorInNegativeLength();
        acc = acc * f;
        factor = factor * inv;
    }
    return acc.recip();
}

inline RatFunc pochhammer_multi(std::span<const Monomial> xs, int step, std::int64_t m)
{
    SymbolicOps ops;
    FactoredFunc acc(BigRat(1));
    for (const auto& x : xs)
        acc = acc * pochhammer(ops, x, q_power(step), m);
    return acc.to_ratfunc();
}

namespace detail {

inline std::vector<Monomial> instantiate(const std::vector<AffineParam>& ps, std::int64_t n, std::int64_t k = 0)
{
    std::vector<Monomial> out;
    out.reserve(ps.size());
    for (const auto& p : ps)
        out.push_back(p.at(n, k));
    return out;
}

} // namespace detail

/// True when some upper parameter instantiates to q^{-s N}, N = length(n) >= 0.
inline bool terminates(const PhiSpec& spec, std::int64_t n)
{
    std::int64_t length = spec.length.at(n);
    if (length < 0)
        return false;
    Monomial target = q_power(-spec.step * length);
    for (const auto& u : spec.upper)
        if (u.at(n) == target)
            return true;
    return false;
}

inline FactoredFunc phi_factored(const PhiSpec& spec, std::int64_t n)
{
    if (!terminates(spec, n))
        throw NonTerminatingSeries("series has no upper parameter q^(-s*N) for N = " +
                                   std::to_string(spec.length.at(n)));
    SymbolicOps ops;
    auto upper = detail::instantiate(spec.upper, n);
    auto lower = detail::instantiate(spec.lower, n);
    return series_sum(ops, upper, lower, q_power(spec.step), ops.monomial(spec.argument.at(n)), spec.length.at(n));
}

inline RatFunc phi(const PhiSpec& spec, std::int64_t n) { return phi_factored(spec, n).to_ratfunc(); }

inline RatFunc phi_term(const PhiSpec& spec, std::int64_t n, std::int64_t k)
{
    SymbolicOps ops;
    auto upper = detail::instantiate(spec.upper, n);
    auto lower = detail::instantiate(spec.lower, n);
    return series_term(ops, upper, lower, q_power(spec.step), ops.monomial(spec.argument.at(n)), k).to_ratfunc();
}

/// 𝒞_m(1, q), or 𝒞_m(1, -q) when negate_q (substitution q -> -q applied afterwards).
inline RatFunc q_catalan(std::int64_t m, bool negate_q)
{
    if (m < 0)
        throw Error("q-Catalan index must be non-negative");
    RatFunc value = q_catalan(SymbolicOps{}, Monomial::variable(Variable::q), m).to_ratfunc();
    if (!negate_q)
        return value;
    SubstMap flip;
    flip[Variable::q] = -Monomial::variable(Variable::q);
    return value.substitute(flip);
}

/// C_m = binom(2m, m) / (m + 1).
inline BigInt catalan(std::int64_t m)
{
    if (m < 0)
        throw Error("Catalan index must be non-negative");
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(2 * m), static_cast<unsigned long>(m));
    return r / (m + 1);
}

} // namespace qverify

#endif
