#ifndef QVERIFY_MODULAR_HPP
#define QVERIFY_MODULAR_HPP

#include <cstdint>
#include <string>

#include "laurent.hpp"

namespace qverify {

inline constexpr std::uint64_t mersenne61 = (std::uint64_t(1) << 61) - 1;

namespace detail {

inline std::uint64_t mulmod(std::uint64_t x, std::uint64_t y, std::uint64_t p)
{
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * y) % p);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t p)
{
    std::uint64_t r = 1 % p;
    base %= p;
    while (e) {
        if (e & 1)
            r = mulmod(r, base, p);
        base = mulmod(base, base, p);
        e >>= 1;
    }
    return r;
}

} // namespace detail

/// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0)
            return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = detail::powmod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = detail::mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

/// Arithmetic in F_p for a prime p < 2^63.
class PrimeField {
public:
    explicit PrimeField(std::uint64_t p) : p_(p)
    {
        if (p < 3 || p >= (std::uint64_t(1) << 63))
            throw Error("prime out of supported range: " + std::to_string(p));
    }

    std::uint64_t prime() const noexcept { return p_; }

    std::uint64_t add(std::uint64_t x, std::uint64_t y) const noexcept
    {
        std::uint64_t s = x + y;
        return s >= p_ ? s - p_ : s;
    }
    std::uint64_t sub(std::uint64_t x, std::uint64_t y) const noexcept { return x >= y ? x - y : x + p_ - y; }
    std::uint64_t neg(std::uint64_t x) const noexcept { return x == 0 ? 0 : p_ - x; }
    std::uint64_t mul(std::uint64_t x, std::uint64_t y) const noexcept { return detail::mulmod(x, y, p_); }

    /// Multiplicative inverse; throws Pole on zero.
    std::uint64_t inv(std::uint64_t x) const
    {
        if (x == 0)
            throw Pole();
        return detail::powmod(x, p_ - 2, p_);
    }

    std::uint64_t pow(std::uint64_t x, std::int64_t e) const
    {
        if (e < 0)
            return detail::powmod(inv(x), static_cast<std::uint64_t>(-e), p_);
        return detail::powmod(x, static_cast<std::uint64_t>(e), p_);
    }

    std::uint64_t from_int(const BigInt& v) const
    {
        static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
        return mpz_fdiv_ui(v.get_mpz_t(), p_);
    }

    std::uint64_t from_int(std::int64_t v) const
    {
        std::int64_t r = v % static_cast<std::int64_t>(p_);
        return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(p_) : r);
    }

    /// Image of a rational; throws CoefficientDenominatorDivisibleByP.
    std::uint64_t from_rational(const BigRat& c) const
    {
        if (c.is_small() && c.is_integer())
            return from_int(c.numerator().get_si());
        std::uint64_t num = from_int(c.numerator());
        std::uint64_t den = c.is_integer() ? 1 : from_int(c.denominator());
        if (den == 0)
            throw CoefficientDenominatorDivisibleByP();
        return den == 1 ? num : mul(num, inv(den));
    }

private:
    std::uint64_t p_;
};

/// A point of (F_p^*)^3 at which q, a, b are specialised.
struct FieldPoint {
    std::uint64_t prime = mersenne61;
    std::uint64_t q = 1;
    std::uint64_t a = 1;
    std::uint64_t b = 1;

    std::uint64_t value(Variable v) const
    {
        switch (v) {
        case Variable::a: return a;
        case Variable::b: return b;
        default: return q;
        }
    }

    void validate() const
    {
        for (Variable v : all_variables) {
            std::uint64_t x = value(v);
            if (x == 0 || x >= prime)
                throw Error(std::string("field point coordinate ") + variable_name(v) + " must lie in [1, p-1]");
        }
    }

    std::string to_string() const
    {
        return "p=" + std::to_string(prime) + " q=" + std::to_string(q) + " a=" + std::to_string(a) +
               " b=" + std::to_string(b);
    }

    friend bool operator==(const FieldPoint&, const FieldPoint&) = default;
};

/// Evaluates monomials at a fixed point, caching the inverses of the coordinates.
class PointEvaluator {
public:
    explicit PointEvaluator(const FieldPoint& pt) : field_(pt.prime), point_(pt)
    {
        pt.validate();
        for (Variable v : all_variables) {
            auto i = static_cast<std::size_t>(v);
            value_[i] = pt.value(v);
            inverse_[i] = field_.inv(value_[i]);
        }
    }

    const PrimeField& field() const noexcept { return field_; }
    const FieldPoint& point() const noexcept { return point_; }

    std::uint64_t power(Variable v, std::int64_t e) const
    {
        auto i = static_cast<std::size_t>(v);
        if (e >= 0)
            return detail::powmod(value_[i], static_cast<std::uint64_t>(e), field_.prime());
        return detail::powmod(inverse_[i], static_cast<std::uint64_t>(-e), field_.prime());
    }

    std::uint64_t monomial(const ExpVec& e) const
    {
        return field_.mul(field_.mul(power(Variable::q, e.q), power(Variable::a, e.a)), power(Variable::b, e.b));
    }

    std::uint64_t monomial(const Monomial& m) const { return field_.mul(field_.from_rational(m.coef), monomial(m.exp)); }

    std::uint64_t polynomial(const LaurentPoly& p) const
    {
        std::uint64_t acc = 0;
        for (const auto& t : p.terms())
            acc = field_.add(acc, field_.mul(field_.from_rational(t.coef), monomial(t.exp)));
        return acc;
    }

private:
    PrimeField field_;
    FieldPoint point_;
    std::array<std::uint64_t, 3> value_{};
    std::array<std::uint64_t, 3> inverse_{};
};

/// Image of a Laurent polynomial under evaluation at pt.
inline std::uint64_t poly_eval_mod(const LaurentPoly& p, const FieldPoint& pt)
{
    return PointEvaluator(pt).polynomial(p);
}

} // namespace qverify

#endif
