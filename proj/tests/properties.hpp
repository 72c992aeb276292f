// Randomized algebraic property suites. Each returns a tally so the same code
// backs the unit tests and the acceptance run.
#pragma once

#include <functional>
#include <sstream>
#include <string>

#include "support.hpp"

namespace qtest {

struct Tally {
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string first_failure;

    void check(bool ok, const std::function<std::string()>& what)
    {
        ++cases;
        if (ok)
            return;
        if (failures++ == 0)
            first_failure = what();
    }
    bool ok(std::size_t min_cases = 1000) const { return failures == 0 && cases >= min_cases; }
    std::string summary() const
    {
        std::ostringstream os;
        os << name << ": " << cases << " cases, " << failures << " failures";
        if (failures)
            os << " (first: " << first_failure << ")";
        return os.str();
    }
};

inline constexpr std::uint64_t property_seed = 20240517;
inline constexpr int property_cases = 1000;

inline Monomial random_monomial(std::mt19937_64& rng, int lo = -2, int hi = 3)
{
    std::uniform_int_distribution<int> ex(lo, hi), coef(1, 4), sign(0, 1);
    BigRat c(coef(rng));
    if (sign(rng))
        c = -c;
    return {c, ExpVec{ex(rng), ex(rng), ex(rng)}};
}

inline SubstMap random_subst(std::mt19937_64& rng)
{
    SubstMap m;
    for (Variable v : all_variables)
        m[v] = random_monomial(rng, -2, 2);
    return m;
}

inline Tally ring_laws(std::uint64_t seed = property_seed)
{
    Tally t{"ring laws"};
    std::mt19937_64 rng(seed);
    const LaurentPoly zero, one(1);
    for (int i = 0; i < property_cases; ++i) {
        LaurentPoly x = random_poly(rng), y = random_poly(rng), z = random_poly(rng);
        auto what = [&] { return x.to_string() + " | " + y.to_string() + " | " + z.to_string(); };
        t.check((x + y) + z == x + (y + z), what);
        t.check((x * y) * z == x * (y * z), what);
        t.check(x + y == y + x, what);
        t.check(x * y == y * x, what);
        t.check(x * (y + z) == x * y + x * z, what);
        t.check(x + zero == x && x * one == x, what);
        t.check((x - x).is_zero() && x + (-x) == zero, what);
    }
    return t;
}

inline Tally evaluation_homomorphism(std::uint64_t seed = property_seed)
{
    Tally t{"evaluation homomorphism"};
    std::mt19937_64 rng(seed);
    PrimeField f(mersenne61);
    for (int i = 0; i < property_cases; ++i) {
        LaurentPoly x = random_poly(rng), y = random_poly(rng);
        FieldPoint pt = random_point(rng);
        auto what = [&] { return x.to_string() + " | " + y.to_string() + " at " + pt.to_string(); };
        std::uint64_t ex = poly_eval_mod(x, pt), ey = poly_eval_mod(y, pt);
        t.check(poly_eval_mod(x * y, pt) == f.mul(ex, ey), what);
        t.check(poly_eval_mod(x + y, pt) == f.add(ex, ey), what);
    }
    return t;
}

inline Tally substitution_homomorphism(std::uint64_t seed = property_seed)
{
    Tally t{"substitution homomorphism"};
    std::mt19937_64 rng(seed);
    for (int i = 0; i < property_cases; ++i) {
        LaurentPoly x = random_poly(rng, 3), y = random_poly(rng, 3);
        SubstMap m = random_subst(rng);
        auto what = [&] { return x.to_string() + " | " + y.to_string(); };
        t.check((x * y).substitute(m) == x.substitute(m) * y.substitute(m), what);
        t.check((x + y).substitute(m) == x.substitute(m) + y.substitute(m), what);
    }
    return t;
}

/// Arguments never of the form q^j, so no factor vanishes at negative length.
inline Monomial random_poch_argument(std::mt19937_64& rng)
{
    for (;;) {
        Monomial m = random_monomial(rng, -2, 2);
        if (m.exp.a != 0 || m.exp.b != 0 || !m.coef.is_one())
            return m;
    }
}

inline Tally pochhammer_recurrence(std::uint64_t seed = property_seed)
{
    Tally t{"pochhammer recurrence"};
    std::vector<Monomial> xs{var(Variable::a), var(Variable::b), var(Variable::a) * var(Variable::b), mono(-1, 1)};
    auto one = [&](const Monomial& x, int s, int m) {
        RatFunc lhs = pochhammer(x, s, m);
        RatFunc rhs = pochhammer(x, s, m - 1) * RatFunc(LaurentPoly(1) - LaurentPoly(x * q_power(s * (m - 1))));
        t.check(rf_equal(lhs, rhs), [&] {
            return "x=" + LaurentPoly(x).to_string() + " s=" + std::to_string(s) + " m=" + std::to_string(m);
        });
    };
    for (const auto& x : xs)
        for (int s = 1; s <= 3; ++s)
            for (int m = -5; m <= 8; ++m)
                one(x, s, m);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> step(1, 3), len(-5, 8);
    for (int i = 0; i < property_cases; ++i) {
        Monomial x = random_poch_argument(rng);
        int s = step(rng), m = len(rng);
        one(x, s, m);
    }
    return t;
}

inline Tally pochhammer_splitting(std::uint64_t seed = property_seed)
{
    Tally t{"pochhammer splitting"};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> step(1, 3), len(-3, 5);
    for (int i = 0; i < property_cases; ++i) {
        Monomial x = random_poch_argument(rng);
        int s = step(rng), m = len(rng), r = len(rng);
        // (x; q^s)_{m+r} = (x; q^s)_m (x q^{sm}; q^s)_r
        RatFunc lhs = pochhammer(x, s, m + r);
        RatFunc rhs = pochhammer(x, s, m) * pochhammer(x * q_power(s * m), s, r);
        t.check(rf_equal(lhs, rhs), [&] {
            return "x=" + LaurentPoly(x).to_string() + " s=" + std::to_string(s) + " m=" + std::to_string(m) +
                   " r=" + std::to_string(r);
        });
    }
    return t;
}

inline RatFunc rescaled(const RatFunc& f, const LaurentPoly& h) { return RatFunc(f.num() * h, f.den() * h); }

inline Tally rf_equal_equivalence(std::uint64_t seed = property_seed)
{
    Tally t{"rf_equal equivalence"};
    std::mt19937_64 rng(seed);
    for (int i = 0; i < property_cases; ++i) {
        RatFunc f = random_ratfunc(rng), g = random_ratfunc(rng);
        LaurentPoly h1 = random_nonzero_poly(rng, 3), h2 = random_nonzero_poly(rng, 3);
        RatFunc f1 = rescaled(f, h1), f2 = rescaled(f1, h2);
        auto what = [&] { return f.to_string() + " | " + g.to_string() + " | " + h1.to_string(); };
        t.check(rf_equal(f, f), what);
        t.check(rf_equal(f, f1) && rf_equal(f1, f), what);
        t.check(rf_equal(f1, f2) && rf_equal(f, f2), what);
        t.check(rf_equal(f, g) == rf_equal(g, f), what);
        t.check(rf_equal(f, g) == rf_equal(f1, rescaled(g, h2)), what);
    }
    return t;
}

/// Equal pairs agree at 50 random points; unequal pairs are told apart by one
/// of 50 points.
inline Tally oracle_consistency(std::uint64_t seed = property_seed)
{
    Tally t{"modular oracle consistency"};
    std::mt19937_64 rng(seed);
    auto eval = [](const RatFunc& f, const FieldPoint& pt) -> std::optional<std::uint64_t> {
        try {
            return rf_eval_mod(f, pt);
        } catch (const Pole&) {
            return std::nullopt;
        }
    };
    for (int i = 0; i < property_cases; ++i) {
        RatFunc f = random_ratfunc(rng), g = random_ratfunc(rng);
        RatFunc f1 = rescaled(f, random_nonzero_poly(rng, 3));
        bool agree = true, distinguished = false;
        for (int j = 0; j < 50; ++j) {
            FieldPoint pt = random_point(rng);
            auto x = eval(f, pt), y = eval(f1, pt), z = eval(g, pt);
            if (x && y && *x != *y)
                agree = false;
            if (x && z && *x != *z)
                distinguished = true;
        }
        t.check(agree, [&] { return "equal pair disagrees: " + f.to_string(); });
        if (!rf_equal(f, g))
            t.check(distinguished, [&] { return "no point separates " + f.to_string() + " and " + g.to_string(); });
    }
    return t;
}

inline Tally serialization(std::uint64_t seed = property_seed)
{
    Tally t{"serialization"};
    std::mt19937_64 rng(seed);
    std::vector<RatFunc> seen;
    for (int i = 0; i < 100; ++i) {
        RatFunc f = random_ratfunc(rng);
        t.check(rf_equal(R(f.to_string()), f) && R(f.to_string()) == f, [&] { return f.to_string(); });
        seen.push_back(f);
        // the same value reached another way must print the same
        seen.push_back(rescaled(f, LaurentPoly(Monomial{BigRat(-3), ExpVec{1, 0, 2}})));
    }
    std::uniform_int_distribution<int> small(0, 2);
    for (int i = 0; i < 400; ++i) {
        LaurentPoly n(small(rng)), d(1 + small(rng));
        seen.push_back(RatFunc(n * P("1 + q"), d));
    }
    for (std::size_t i = 0; i < seen.size(); ++i)
        for (std::size_t j = i + 1; j < seen.size() && j < i + 8; ++j) {
            bool same_text = seen[i].to_string() == seen[j].to_string();
            bool same_rep = seen[i].num() == seen[j].num() && seen[i].den() == seen[j].den();
            t.check(same_text == same_rep, [&] { return seen[i].to_string() + " vs " + seen[j].to_string(); });
        }
    return t;
}

} // namespace qtest
