#ifndef QVERIFY_RATFUNC_HPP
#define QVERIFY_RATFUNC_HPP

#include <string>
#include <string_view>
#include <utility>

#include "laurent.hpp"
#include "modular.hpp"

namespace qverify {

/// Quotient of two Laurent polynomials.
///
/// Normal form (no polynomial GCD is ever taken): numerator and denominator are
/// shifted so that, per variable, the smaller of their minimum exponents is
/// zero, and the canonical-leading coefficient of the denominator is one. Zero
/// is 0/1.
class RatFunc {
public:
    RatFunc() : den_(1) {}
    RatFunc(LaurentPoly num) : num_(std::move(num)), den_(1) { normalize(); } // NOLINT(google-explicit-constructor)
    RatFunc(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den))
    {
        if (den_.is_zero())
            throw DivisionByZeroFunction();
        normalize();
    }

    const LaurentPoly& num() const noexcept { return num_; }
    const LaurentPoly& den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }

    RatFunc operator-() const { return RatFunc(-num_, den_); }

    friend RatFunc operator+(const RatFunc& f, const RatFunc& g)
    {
        if (f.den_ == g.den_)
            return RatFunc(f.num_ + g.num_, f.den_);
        return RatFunc(f.num_ * g.den_ + g.num_ * f.den_, f.den_ * g.den_);
    }
    friend RatFunc operator-(const RatFunc& f, const RatFunc& g) { return f + (-g); }
    friend RatFunc operator*(const RatFunc& f, const RatFunc& g) { return RatFunc(f.num_ * g.num_, f.den_ * g.den_); }
    friend RatFunc operator/(const RatFunc& f, const RatFunc& g)
    {
        if (g.is_zero())
            throw DivisionByZeroFunction();
        return RatFunc(f.num_ * g.den_, f.den_ * g.num_);
    }

    RatFunc recip() const
    {
        if (is_zero())
            throw DivisionByZeroFunction();
        return RatFunc(den_, num_);
    }

    RatFunc pow(std::int64_t e) const
    {
        if (e < 0)
            return recip().pow(-e);
        return RatFunc(num_.pow(static_cast<std::uint64_t>(e)), den_.pow(static_cast<std::uint64_t>(e)));
    }

    RatFunc substitute(const SubstMap& map) const { return RatFunc(num_.substitute(map), den_.substitute(map)); }

    /// Structural equality of normalized representatives. Use rf_equal for
    /// equality of the functions themselves.
    friend bool operator==(const RatFunc&, const RatFunc&) = default;

    std::string to_string() const { return wrap(num_) + "/" + wrap(den_); }

    static RatFunc parse(std::string_view text);

private:
    static std::string wrap(const LaurentPoly& p)
    {
        if (p.is_constant() && p.constant_coefficient().is_integer())
            return p.to_string();
        return "(" + p.to_string() + ")";
    }

    void normalize()
    {
        if (num_.is_zero()) {
            den_ = LaurentPoly(1);
            return;
        }
        // shift first: the leading term is taken in the shifted denominator
        ExpVec shift = min(num_.min_exponents(), den_.min_exponents());
        Monomial unshift{BigRat(1), -shift};
        num_ = num_ * unshift;
        den_ = den_ * unshift;
        BigRat lead = den_.leading_term().coef;
        if (!lead.is_one()) {
            Monomial scale{lead.reciprocal(), ExpVec{}};
            num_ = num_ * scale;
            den_ = den_ * scale;
        }
    }

    LaurentPoly num_;
    LaurentPoly den_;
};

/// Exact equality of rational functions by cross-multiplication.
inline bool rf_equal(const RatFunc& f, const RatFunc& g)
{
    if (f == g)
        return true;
    return f.num() * g.den() == g.num() * f.den();
}

/// Image in F_p; throws Pole when the denominator vanishes at pt.
inline std::uint64_t rf_eval_mod(const RatFunc& f, const FieldPoint& pt)
{
    PointEvaluator eval(pt);
    std::uint64_t den = eval.polynomial(f.den());
    if (den == 0)
        throw Pole();
    return eval.field().mul(eval.polynomial(f.num()), eval.field().inv(den));
}

inline RatFunc RatFunc::parse(std::string_view text)
{
    // "(num)/(den)" or "c/(den)" or "c/c"; the numerator may be a bare integer.
    auto strip = [](std::string_view s) {
        while (!s.empty() && s.front() == ' ')
            s.remove_prefix(1);
        while (!s.empty() && s.back() == ' ')
            s.remove_suffix(1);
        return s;
    };
    std::string_view s = strip(text);
    auto take_operand = [&](std::string_view& rest) -> std::string_view {
        rest = strip(rest);
        if (!rest.empty() && rest.front() == '(') {
            auto close = rest.find(')');
            if (close == std::string_view::npos)
                throw Error("rational function parse error: unbalanced parenthesis");
            auto inner = rest.substr(1, close - 1);
            rest.remove_prefix(close + 1);
            return inner;
        }
        auto slash = rest.find('/');
        auto operand = rest.substr(0, slash);
        rest.remove_prefix(slash == std::string_view::npos ? rest.size() : slash);
        return operand;
    };
    std::string_view rest = s;
    LaurentPoly num = LaurentPoly::parse(take_operand(rest));
    rest = strip(rest);
    if (rest.empty())
        return RatFunc(num);
    if (rest.front() != '/')
        throw Error("rational function parse error: expected '/'");
    rest.remove_prefix(1);
    LaurentPoly den = LaurentPoly::parse(take_operand(rest));
    if (!strip(rest).empty())
        throw Error("rational function parse error: trailing characters");
    return RatFunc(num, den);
}

} // namespace qverify

#endif
