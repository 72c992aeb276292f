#ifndef QVERIFY_BIGRAT_HPP
#define QVERIFY_BIGRAT_HPP

#include <compare>
#include <cstdint>
#include <limits>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "errors.hpp"

namespace qverify {

using BigInt = mpz_class;

namespace detail {

using i128 = __int128;
using u128 = unsigned __int128;

inline u128 abs128(i128 v) { return v < 0 ? u128(0) - u128(v) : u128(v); }

inline u128 gcd128(u128 x, u128 y)
{
    while (y != 0) {
        u128 t = x % y;
        x = y;
        y = t;
    }
    return x;
}

inline bool fits_small(i128 v)
{
    return v > i128(std::numeric_limits<std::int64_t>::min()) && v <= i128(std::numeric_limits<std::int64_t>::max());
}

inline BigInt to_mpz(i128 v)
{
    const bool neg = v < 0;
    u128 mag = abs128(v);
    BigInt hi(static_cast<unsigned long>(static_cast<std::uint64_t>(mag >> 64)));
    BigInt lo(static_cast<unsigned long>(static_cast<std::uint64_t>(mag)));
    BigInt r = (hi << 64) + lo;
    return neg ? BigInt(-r) : r;
}

} // namespace detail

/// Exact rational number: a pair of machine integers while the value fits,
/// a shared immutable GMP rational otherwise.
///
/// Invariant: gcd(|num|, den) = 1, den >= 1, zero is 0/1. A value is stored in
/// the small form whenever it fits, so the representation is canonical.
class BigRat {
public:
    BigRat() = default;
    BigRat(std::int64_t v) // NOLINT(google-explicit-constructor)
    {
        if (v == std::numeric_limits<std::int64_t>::min())
            set_big(mpq_class(detail::to_mpz(v)));
        else
            num_ = v;
    }
    BigRat(int v) : num_(v) {} // NOLINT(google-explicit-constructor)
    BigRat(std::int64_t num, std::int64_t den) { assign(detail::i128(num), detail::i128(den)); }
    explicit BigRat(const BigInt& v) { set_big(mpq_class(v)); }
    explicit BigRat(const mpq_class& v)
    {
        mpq_class c(v);
        c.canonicalize();
        set_big(std::move(c));
    }

    /// Parses "p", "-p" or "p/q".
    static BigRat parse(std::string_view text)
    {
        std::string s(text);
        mpq_class v;
        if (s.empty() || v.set_str(s, 10) != 0)
            throw Error("invalid rational literal '" + s + "'");
        if (v.get_den() == 0)
            throw Error("zero denominator in rational literal '" + s + "'");
        return BigRat(v);
    }

    bool is_small() const noexcept { return !big_; }
    bool is_zero() const noexcept { return !big_ && num_ == 0; }
    bool is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }
    bool is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }
    int sign() const { return big_ ? sgn(*big_) : (num_ > 0) - (num_ < 0); }

    BigInt numerator() const { return big_ ? BigInt(big_->get_num()) : BigInt(static_cast<long>(num_)); }
    BigInt denominator() const { return big_ ? BigInt(big_->get_den()) : BigInt(static_cast<long>(den_)); }
    mpq_class to_mpq() const
    {
        if (big_)
            return *big_;
        mpq_class r(static_cast<long>(num_), static_cast<unsigned long>(den_));
        return r;
    }

    std::string to_string() const
    {
        if (big_)
            return big_->get_str();
        return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
    }

    BigRat operator-() const
    {
        if (big_)
            return BigRat(mpq_class(-*big_));
        BigRat r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    BigRat reciprocal() const
    {
        if (is_zero())
            throw DivisionByZeroFunction("reciprocal of zero");
        if (big_)
            return BigRat(mpq_class(1 / *big_));
        BigRat r;
        r.assign(den_, num_);
        return r;
    }

    friend BigRat operator+(const BigRat& x, const BigRat& y)
    {
        if (x.is_small() && y.is_small()) {
            BigRat r;
            if (x.den_ == 1 && y.den_ == 1) {
                r.assign_integer(detail::i128(x.num_) + y.num_);
            } else {
                r.assign(detail::i128(x.num_) * y.den_ + detail::i128(y.num_) * x.den_, detail::i128(x.den_) * y.den_);
            }
            return r;
        }
        return BigRat(mpq_class(x.to_mpq() + y.to_mpq()));
    }

    friend BigRat operator-(const BigRat& x, const BigRat& y)
    {
        if (x.is_small() && y.is_small()) {
            BigRat r;
            if (x.den_ == 1 && y.den_ == 1) {
                r.assign_integer(detail::i128(x.num_) - y.num_);
            } else {
                r.assign(detail::i128(x.num_) * y.den_ - detail::i128(y.num_) * x.den_, detail::i128(x.den_) * y.den_);
            }
            return r;
        }
        return BigRat(mpq_class(x.to_mpq() - y.to_mpq()));
    }

    friend BigRat operator*(const BigRat& x, const BigRat& y)
    {
        if (x.is_small() && y.is_small()) {
            BigRat r;
            if (x.den_ == 1 && y.den_ == 1)
                r.assign_integer(detail::i128(x.num_) * y.num_);
            else
                r.assign(detail::i128(x.num_) * y.num_, detail::i128(x.den_) * y.den_);
            return r;
        }
        return BigRat(mpq_class(x.to_mpq() * y.to_mpq()));
    }

    friend BigRat operator/(const BigRat& x, const BigRat& y)
    {
        if (y.is_zero())
            throw DivisionByZeroFunction("rational division by zero");
        if (x.is_small() && y.is_small()) {
            BigRat r;
            r.assign(detail::i128(x.num_) * y.den_, detail::i128(x.den_) * y.num_);
            return r;
        }
        return BigRat(mpq_class(x.to_mpq() / y.to_mpq()));
    }

    BigRat& operator+=(const BigRat& y) { return *this = *this + y; }
    BigRat& operator-=(const BigRat& y) { return *this = *this - y; }
    BigRat& operator*=(const BigRat& y) { return *this = *this * y; }
    BigRat& operator/=(const BigRat& y) { return *this = *this / y; }

    /// Integer power; negative exponents invert.
    BigRat pow(std::int64_t e) const
    {
        if (e < 0)
            return reciprocal().pow(-e);
        BigRat result(1);
        BigRat base = *this;
        while (e > 0) {
            if (e & 1)
                result *= base;
            e >>= 1;
            if (e)
                base *= base;
        }
        return result;
    }

    friend bool operator==(const BigRat& x, const BigRat& y)
    {
        if (x.is_small() != y.is_small())
            return false; // canonical storage
        if (x.is_small())
            return x.num_ == y.num_ && x.den_ == y.den_;
        return *x.big_ == *y.big_;
    }

    friend std::strong_ordering operator<=>(const BigRat& x, const BigRat& y)
    {
        if (x.is_small() && y.is_small()) {
            detail::i128 l = detail::i128(x.num_) * y.den_;
            detail::i128 r = detail::i128(y.num_) * x.den_;
            return l <=> r;
        }
        int c = cmp(x.to_mpq(), y.to_mpq());
        return c <=> 0;
    }

    friend std::ostream& operator<<(std::ostream& os, const BigRat& v) { return os << v.to_string(); }

private:
    void set_big(mpq_class v)
    {
        if (v.get_den() == 1 && v.get_num().fits_slong_p()) {
            long n = v.get_num().get_si();
            if (n != std::numeric_limits<long>::min()) {
                num_ = n;
                den_ = 1;
                big_.reset();
                return;
            }
        }
        if (v.get_num().fits_slong_p() && v.get_den().fits_slong_p() &&
            v.get_num().get_si() != std::numeric_limits<long>::min()) {
            num_ = v.get_num().get_si();
            den_ = v.get_den().get_si();
            big_.reset();
            return;
        }
        big_ = std::make_shared<const mpq_class>(std::move(v));
    }

    void assign_integer(detail::i128 v)
    {
        if (detail::fits_small(v)) {
            num_ = static_cast<std::int64_t>(v);
            den_ = 1;
        } else {
            big_ = std::make_shared<const mpq_class>(detail::to_mpz(v));
        }
    }

    void assign(detail::i128 n, detail::i128 d)
    {
        if (d == 0)
            throw DivisionByZeroFunction("rational with zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        if (n == 0) {
            num_ = 0;
            den_ = 1;
            return;
        }
        detail::u128 g = detail::gcd128(detail::abs128(n), detail::u128(d));
        if (g > 1) {
            n /= detail::i128(g);
            d /= detail::i128(g);
        }
        if (detail::fits_small(n) && detail::fits_small(d)) {
            num_ = static_cast<std::int64_t>(n);
            den_ = static_cast<std::int64_t>(d);
        } else {
            mpq_class v{detail::to_mpz(n), detail::to_mpz(d)};
            big_ = std::make_shared<const mpq_class>(std::move(v));
        }
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::shared_ptr<const mpq_class> big_;
};

} // namespace qverify

#endif
