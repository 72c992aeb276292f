#ifndef QVERIFY_FACTORED_HPP
#define QVERIFY_FACTORED_HPP

#include <map>
#include <string>
#include <utility>

#include "ratfunc.hpp"

namespace qverify {

/// Rational function kept as unit * prod(factor^multiplicity).
///
/// The unit is a monomial c*q^i*a^j*b^k; each factor is a primitive polynomial
/// (see split_content) with at least two terms, and a negative multiplicity
/// places it in the denominator. Factors are not required to be irreducible:
/// the form only records products as they were built, which makes
/// multiplication a merge of factor maps and lets addition use the factorwise
/// lcm of denominators instead of a polynomial GCD.
class FactoredFunc {
public:
    using FactorMap = std::map<LaurentPoly, int>;

    FactoredFunc() : unit_{BigRat(0), {}} {}
    FactoredFunc(const BigRat& c) : unit_{c, {}} {}      // NOLINT(google-explicit-constructor)
    FactoredFunc(const Monomial& m) : unit_(m) {}         // NOLINT(google-explicit-constructor)
    FactoredFunc(const LaurentPoly& p) { *this = from_poly(p); } // NOLINT(google-explicit-constructor)

    static FactoredFunc from_poly(const LaurentPoly& p)
    {
        FactoredFunc r;
        if (p.is_zero())
            return r;
        if (p.is_monomial()) {
            r.unit_ = p.as_monomial();
            return r;
        }
        auto split = split_content(p);
        r.unit_ = split.unit;
        r.factors_.emplace(std::move(split.primitive), 1);
        return r;
    }

    /// 1 - m.
    static FactoredFunc one_minus(const Monomial& m)
    {
        if (m.exp.is_zero())
            return FactoredFunc(BigRat(1) - m.coef);
        return from_poly(LaurentPoly(1) - LaurentPoly(m));
    }

    bool is_zero() const noexcept { return unit_.coef.is_zero(); }
    const Monomial& unit() const noexcept { return unit_; }
    const FactorMap& factors() const noexcept { return factors_; }

    FactoredFunc operator-() const
    {
        FactoredFunc r = *this;
        r.unit_.coef = -r.unit_.coef;
        return r;
    }

    friend FactoredFunc operator*(const FactoredFunc& x, const FactoredFunc& y)
    {
        if (x.is_zero() || y.is_zero())
            return {};
        FactoredFunc r;
        r.unit_ = x.unit_ * y.unit_;
        r.factors_ = x.factors_;
        for (const auto& [f, m] : y.factors_)
            r.bump(f, m);
        return r;
    }

    FactoredFunc inverse() const
    {
        if (is_zero())
            throw DivisionByZeroFunction();
        FactoredFunc r;
        r.unit_ = unit_.inverse();
        for (const auto& [f, m] : factors_)
            r.factors_.emplace(f, -m);
        return r;
    }

    friend FactoredFunc operator/(const FactoredFunc& x, const FactoredFunc& y) { return x * y.inverse(); }

    FactoredFunc pow(std::int64_t e) const
    {
        if (e == 0)
            return FactoredFunc(BigRat(1));
        if (is_zero()) {
            if (e < 0)
                throw DivisionByZeroFunction();
            return {};
        }
        FactoredFunc r;
        r.unit_ = unit_.pow(e);
        for (const auto& [f, m] : factors_)
            r.factors_.emplace(f, static_cast<int>(m * e));
        return r;
    }

    /// Sum over the factorwise lcm of the denominators; common numerator
    /// factors are kept factored.
    friend FactoredFunc operator+(const FactoredFunc& x, const FactoredFunc& y)
    {
        if (x.is_zero())
            return y;
        if (y.is_zero())
            return x;
        FactoredFunc common(BigRat(1));
        LaurentPoly xs(x.unit_);
        LaurentPoly ys(y.unit_);
        auto i = x.factors_.begin();
        auto j = y.factors_.begin();
        auto expand = [](LaurentPoly& acc, const LaurentPoly& f, int times) {
            for (int t = 0; t < times; ++t)
                acc = acc * f;
        };
        while (i != x.factors_.end() || j != y.factors_.end()) {
            const LaurentPoly* key;
            int mx = 0;
            int my = 0;
            if (j == y.factors_.end() || (i != x.factors_.end() && i->first < j->first)) {
                key = &i->first;
                mx = i->second;
                ++i;
            } else if (i == x.factors_.end() || j->first < i->first) {
                key = &j->first;
                my = j->second;
                ++j;
            } else {
                key = &i->first;
                mx = i->second;
                my = j->second;
                ++i;
                ++j;
            }
            int c = std::min(mx, my);
            if (c != 0)
                common.factors_.emplace(*key, c);
            expand(xs, *key, mx - c);
            expand(ys, *key, my - c);
        }
        LaurentPoly s = xs + ys;
        if (s.is_zero())
            return {};
        return common * from_poly(s);
    }

    friend FactoredFunc operator-(const FactoredFunc& x, const FactoredFunc& y) { return x + (-y); }

    /// Exact equality: the difference has a zero numerator.
    friend bool equal(const FactoredFunc& x, const FactoredFunc& y) { return (x - y).is_zero(); }

    /// Structural equality of the factored forms.
    friend bool operator==(const FactoredFunc&, const FactoredFunc&) = default;

    LaurentPoly numerator() const
    {
        LaurentPoly r(unit_);
        for (const auto& [f, m] : factors_)
            for (int t = 0; t < m; ++t)
                r = r * f;
        return r;
    }

    LaurentPoly denominator() const
    {
        LaurentPoly r(1);
        for (const auto& [f, m] : factors_)
            for (int t = 0; t < -m; ++t)
                r = r * f;
        return r;
    }

    RatFunc to_ratfunc() const { return is_zero() ? RatFunc() : RatFunc(numerator(), denominator()); }

    static FactoredFunc from_ratfunc(const RatFunc& f) { return from_poly(f.num()) / from_poly(f.den()); }

    /// Image under a monomial substitution; factors are re-normalized and merged.
    FactoredFunc substitute(const SubstMap& map) const
    {
        if (is_zero())
            return {};
        FactoredFunc r(map.apply(unit_));
        for (const auto& [f, m] : factors_)
            r = r * from_poly(f.substitute(map)).pow(m);
        return r;
    }

    std::string to_string() const
    {
        std::string s = LaurentPoly(unit_).to_string();
        for (const auto& [f, m] : factors_)
            s += " * (" + f.to_string() + ")^" + std::to_string(m);
        return s;
    }

private:
    void bump(const LaurentPoly& f, int m)
    {
        auto [it, inserted] = factors_.try_emplace(f, m);
        if (!inserted) {
            it->second += m;
            if (it->second == 0)
                factors_.erase(it);
        }
    }

    Monomial unit_;
    FactorMap factors_;
};

bool equal(const FactoredFunc& x, const FactoredFunc& y);

} // namespace qverify

#endif
