#ifndef QVERIFY_FIELD_OPS_HPP
#define QVERIFY_FIELD_OPS_HPP

#include <concepts>
#include <cstdint>
#include <string>

#include "factored.hpp"
#include "modular.hpp"

namespace qverify {

/// Why a divisor vanished; symbolic evaluation reports it, modular evaluation
/// treats every case as a pole at the sampled point.
enum class ZeroDivisor { division, negative_pochhammer, series_denominator };

/// Arithmetic back end of the evaluator: exact rational functions or values in F_p.
template <class Ops>
concept FieldOps = requires(const Ops& ops, const typename Ops::value_type& x, const Monomial& m, const BigRat& c,
                            std::int64_t e, ZeroDivisor why, std::size_t k) {
    { ops.constant(c) } -> std::same_as<typename Ops::value_type>;
    { ops.monomial(m) } -> std::same_as<typename Ops::value_type>;
    { ops.one_minus(m) } -> std::same_as<typename Ops::value_type>;
    { ops.add(x, x) } -> std::same_as<typename Ops::value_type>;
    { ops.sub(x, x) } -> std::same_as<typename Ops::value_type>;
    { ops.mul(x, x) } -> std::same_as<typename Ops::value_type>;
    { ops.neg(x) } -> std::same_as<typename Ops::value_type>;
    { ops.div(x, x, why, k) } -> std::same_as<typename Ops::value_type>;
    { ops.pow(x, e) } -> std::same_as<typename Ops::value_type>;
    { ops.is_zero(x) } -> std::same_as<bool>;
    { ops.equal(x, x) } -> std::same_as<bool>;
};

/// Exact arithmetic over Q(q, a, b) in factored form.
struct SymbolicOps {
    using value_type = FactoredFunc;

    value_type constant(const BigRat& c) const { return FactoredFunc(c); }
    value_type monomial(const Monomial& m) const { return FactoredFunc(m); }
    value_type one_minus(const Monomial& m) const { return FactoredFunc::one_minus(m); }
    value_type add(const value_type& x, const value_type& y) const { return x + y; }
    value_type sub(const value_type& x, const value_type& y) const { return x - y; }
    value_type mul(const value_type& x, const value_type& y) const { return x * y; }
    value_type neg(const value_type& x) const { return -x; }

    value_type div(const value_type& x, const value_type& y, ZeroDivisor why = ZeroDivisor::division,
                   std::size_t k = 0) const
    {
        if (y.is_zero()) {
            switch (why) {
            case ZeroDivisor::negative_pochhammer: throw ZeroFactorInNegativeLength();
            case ZeroDivisor::series_denominator: throw VanishingDenominatorFactor(k);
            default: throw DivisionByZeroFunction();
            }
        }
        return x / y;
    }

    value_type pow(const value_type& x, std::int64_t e) const { return x.pow(e); }
    bool is_zero(const value_type& x) const { return x.is_zero(); }
    bool equal(const value_type& x, const value_type& y) const { return qverify::equal(x, y); }
};

/// Evaluation homomorphism into F_p at a fixed point; vanishing divisors raise Pole.
class ModularOps {
public:
    using value_type = std::uint64_t;

    explicit ModularOps(const FieldPoint& pt) : eval_(pt) {}

    const PrimeField& field() const noexcept { return eval_.field(); }
    const FieldPoint& point() const noexcept { return eval_.point(); }

    value_type constant(const BigRat& c) const { return field().from_rational(c); }
    value_type monomial(const Monomial& m) const { return eval_.monomial(m); }
    value_type one_minus(const Monomial& m) const { return field().sub(1, eval_.monomial(m)); }
    value_type add(value_type x, value_type y) const { return field().add(x, y); }
    value_type sub(value_type x, value_type y) const { return field().sub(x, y); }
    value_type mul(value_type x, value_type y) const { return field().mul(x, y); }
    value_type neg(value_type x) const { return field().neg(x); }
    value_type div(value_type x, value_type y, ZeroDivisor = ZeroDivisor::division, std::size_t = 0) const
    {
        return field().mul(x, field().inv(y));
    }
    value_type pow(value_type x, std::int64_t e) const { return field().pow(x, e); }
    bool is_zero(value_type x) const { return x == 0; }
    bool equal(value_type x, value_type y) const { return x == y; }

private:
    PointEvaluator eval_;
};

static_assert(FieldOps<SymbolicOps>);
static_assert(FieldOps<ModularOps>);

} // namespace qverify

#endif
