#ifndef QVERIFY_EVAL_HPP
#define QVERIFY_EVAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ast.hpp"

namespace qverify {

/// Values of n, the k slot, and the images of q, a, b.
struct Scope {
    std::int64_t n = 0;
    std::int64_t k = 0;
    SubstMap images;
};

/// Exact rationals; only valid for expressions free of q, a, b.
struct RationalOps {
    using value_type = BigRat;

    value_type constant(const BigRat& c) const { return c; }
    value_type monomial(const Monomial& m) const
    {
        if (!m.exp.is_zero())
            throw NotAMonomial("integer expression depends on q, a or b");
        return m.coef;
    }
    value_type one_minus(const Monomial& m) const { return BigRat(1) - monomial(m); }
    value_type add(const value_type& x, const value_type& y) const { return x + y; }
    value_type sub(const value_type& x, const value_type& y) const { return x - y; }
    value_type mul(const value_type& x, const value_type& y) const { return x * y; }
    value_type neg(const value_type& x) const { return -x; }
    value_type div(const value_type& x, const value_type& y, ZeroDivisor = ZeroDivisor::division,
                   std::size_t = 0) const
    {
        if (y.is_zero())
            throw DivisionByZeroFunction("division by zero");
        return x / y;
    }
    value_type pow(const value_type& x, std::int64_t e) const
    {
        if (e < 0 && x.is_zero())
            throw DivisionByZeroFunction("division by zero");
        return x.pow(e);
    }
    bool is_zero(const value_type& x) const { return x.is_zero(); }
    bool equal(const value_type& x, const value_type& y) const { return x == y; }
};

static_assert(FieldOps<RationalOps>);

/// Image of a monomial expression under the scope's substitution.
inline Monomial eval_monomial(const ExprPtr& e, const Scope& s)
{
    using namespace node;
    if (auto p = e->as<Const>())
        return {p->value, {}};
    if (auto p = e->as<Var>())
        return s.images[p->v];
    if (auto p = e->as<Neg>())
        return -eval_monomial(p->arg, s);
    if (auto p = e->as<Power>()) {
        Monomial m = eval_monomial(p->base, s);
        std::int64_t x = p->exp.at(s.n, s.k);
        if (x < 0 && m.coef.is_zero())
            throw DivisionByZeroFunction();
        return m.pow(x);
    }
    if (auto p = e->as<Binary>()) {
        if (p->op == BinOp::mul)
            return eval_monomial(p->lhs, s) * eval_monomial(p->rhs, s);
        if (p->op == BinOp::div) {
            Monomial d = eval_monomial(p->rhs, s);
            if (d.coef.is_zero())
                throw DivisionByZeroFunction();
            return eval_monomial(p->lhs, s) / d;
        }
    }
    throw NotAMonomial("expected a monomial, got " + to_dsl(e));
}

/// Scope seen by the body of an at(...) node.
inline Scope rebind(const Bindings& b, const Scope& outer)
{
    Scope inner = outer;
    if (b.n)
        inner.n = b.n->at(outer.n, outer.k);
    if (b.k)
        inner.k = b.k->at(outer.n, outer.k);
    for (Variable v : all_variables)
        if (const auto& x = b.vars[static_cast<std::size_t>(v)])
            inner.images[v] = eval_monomial(x, outer);
    return inner;
}

/// Evaluates expressions with any FieldOps back end.
template <FieldOps Ops>
class Evaluator {
public:
    using value_type = typename Ops::value_type;

    explicit Evaluator(Ops ops) : ops_(std::move(ops)) {}

    const Ops& ops() const noexcept { return ops_; }

    value_type operator()(const ExprPtr& e, const Scope& s) const { return eval(e, s); }

    value_type eval(const ExprPtr& e, const Scope& s) const
    {
        using namespace node;
        return std::visit(
            [&](const auto& p) -> value_type {
                using T = std::decay_t<decltype(p)>;
                if constexpr (std::is_same_v<T, Const>) {
                    return ops_.constant(p.value);
                } else if constexpr (std::is_same_v<T, Var>) {
                    return ops_.monomial(s.images[p.v]);
                } else if constexpr (std::is_same_v<T, Neg>) {
                    return ops_.neg(eval(p.arg, s));
                } else if constexpr (std::is_same_v<T, Binary>) {
                    value_type x = eval(p.lhs, s);
                    value_type y = eval(p.rhs, s);
                    switch (p.op) {
                    case BinOp::add: return ops_.add(x, y);
                    case BinOp::sub: return ops_.sub(x, y);
                    case BinOp::mul: return ops_.mul(x, y);
                    default: return ops_.div(x, y, ZeroDivisor::division, 0);
                    }
                } else if constexpr (std::is_same_v<T, Power>) {
                    return ops_.pow(eval(p.base, s), p.exp.at(s.n, s.k));
                } else if constexpr (std::is_same_v<T, Poch>) {
                    return pochhammer(ops_, eval_monomial(p.arg, s), base(p.step, s), p.length.at(s.n, s.k));
                } else if constexpr (std::is_same_v<T, Phi>) {
                    return phi(p, s);
                } else if constexpr (std::is_same_v<T, SeriesTerm>) {
                    auto up = monomials(p.params.upper, s);
                    auto lo = monomials(p.params.lower, s);
                    return series_term(ops_, up, lo, base(p.params.step, s),
                                       ops_.monomial(eval_monomial(p.params.argument, s)), p.index.at(s.n, s.k));
                } else if constexpr (std::is_same_v<T, QCatalan>) {
                    std::int64_t m = p.index.at(s.n, s.k);
                    if (m < 0)
                        throw Error("q-Catalan index " + std::to_string(m) + " is negative");
                    Monomial x = s.images[Variable::q];
                    return q_catalan(ops_, p.negate_q ? -x : x, m);
                } else if constexpr (std::is_same_v<T, Catalan>) {
                    std::int64_t m = p.index.at(s.n, s.k);
                    if (m < 0)
                        throw Error("Catalan index " + std::to_string(m) + " is negative");
                    return ops_.constant(BigRat(catalan(m)));
                } else if constexpr (std::is_same_v<T, Sum>) {
                    value_type total = ops_.constant(BigRat(0));
                    Scope inner = s;
                    std::int64_t hi = p.hi.at(s.n, s.k);
                    for (std::int64_t j = p.lo.at(s.n, s.k); j <= hi; ++j) {
                        inner.k = j;
                        total = ops_.add(total, eval(p.body, inner));
                    }
                    return total;
                } else {
                    return eval(p.body, rebind(p.bind, s));
                }
            },
            e->node);
    }

private:
    Ops ops_;

    static Monomial base(int step, const Scope& s) { return s.images[Variable::q].pow(step); }

    static std::vector<Monomial> monomials(const std::vector<ExprPtr>& xs, const Scope& s)
    {
        std::vector<Monomial> out;
        out.reserve(xs.size());
        for (const auto& x : xs)
            out.push_back(eval_monomial(x, s));
        return out;
    }

    value_type phi(const node::Phi& p, const Scope& s) const
    {
        std::int64_t length = p.length.at(s.n, s.k);
        auto up = monomials(p.params.upper, s);
        auto lo = monomials(p.params.lower, s);
        Monomial b = base(p.params.step, s);
        bool terminating = false;
        if (length >= 0) {
            Monomial stop = b.pow(-length);
            for (const auto& u : up)
                terminating = terminating || u == stop;
        }
        if (!terminating)
            throw NonTerminatingSeries("series " + to_dsl(ex::make(p)) + " does not terminate at length " +
                                       std::to_string(length));
        return series_sum(ops_, up, lo, b, ops_.monomial(eval_monomial(p.params.argument, s)), length);
    }
};

template <FieldOps Ops>
Evaluator(Ops) -> Evaluator<Ops>;

} // namespace qverify

#endif
