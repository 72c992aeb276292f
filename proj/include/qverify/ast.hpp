#ifndef QVERIFY_AST_HPP
#define QVERIFY_AST_HPP

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qseries.hpp"

namespace qverify {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Parameters of a basic hypergeometric term; each entry is a monomial expression.
struct SeriesParams {
    std::vector<ExprPtr> upper;
    std::vector<ExprPtr> lower;
    int step = 1;
    ExprPtr argument;
};

/// Re-binding of n, k and the variables for an `at(...)` node. Affine values
/// and variable images are read in the enclosing scope; empty entries keep
/// the enclosing value.
struct Bindings {
    std::optional<AffineInt> n;
    std::optional<AffineInt> k;
    std::array<ExprPtr, 3> vars{};

    bool empty() const { return !n && !k && !vars[0] && !vars[1] && !vars[2]; }
};

namespace node {

struct Const {
    BigRat value;
};
struct Var {
    Variable v;
};
struct Neg {
    ExprPtr arg;
};

enum class BinOp { add, sub, mul, div };

struct Binary {
    BinOp op;
    ExprPtr lhs;
    ExprPtr rhs;
};
struct Power {
    ExprPtr base;
    AffineInt exp;
};
struct Poch {
    ExprPtr arg;
    int step;
    AffineInt length;
};
/// Summed series k = 0..length.
struct Phi {
    SeriesParams params;
    AffineInt length;
};
/// Single summand of a series; zero at negative index.
struct SeriesTerm {
    SeriesParams params;
    AffineInt index;
};
struct QCatalan {
    AffineInt index;
    bool negate_q;
};
struct Catalan {
    AffineInt index;
};
/// The bound name occupies the k slot inside the body.
struct Sum {
    std::string name;
    AffineInt lo;
    AffineInt hi;
    ExprPtr body;
};
struct At {
    ExprPtr body;
    Bindings bind;
};

} // namespace node

struct Expr {
    using Node = std::variant<node::Const, node::Var, node::Neg, node::Binary, node::Power, node::Poch, node::Phi,
                              node::SeriesTerm, node::QCatalan, node::Catalan, node::Sum, node::At>;
    Node node;

    template <class T>
    const T* as() const { return std::get_if<T>(&node); }
};

namespace ex {

inline ExprPtr make(Expr::Node n) { return std::make_shared<const Expr>(Expr{std::move(n)}); }
inline ExprPtr constant(const BigRat& c) { return make(node::Const{c}); }
inline ExprPtr var(Variable v) { return make(node::Var{v}); }
inline ExprPtr neg(ExprPtr x) { return make(node::Neg{std::move(x)}); }
inline ExprPtr binary(node::BinOp op, ExprPtr x, ExprPtr y) { return make(node::Binary{op, std::move(x), std::move(y)}); }
inline ExprPtr add(ExprPtr x, ExprPtr y) { return binary(node::BinOp::add, std::move(x), std::move(y)); }
inline ExprPtr sub(ExprPtr x, ExprPtr y) { return binary(node::BinOp::sub, std::move(x), std::move(y)); }
inline ExprPtr mul(ExprPtr x, ExprPtr y) { return binary(node::BinOp::mul, std::move(x), std::move(y)); }
inline ExprPtr div(ExprPtr x, ExprPtr y) { return binary(node::BinOp::div, std::move(x), std::move(y)); }
inline ExprPtr pow(ExprPtr x, AffineInt e) { return make(node::Power{std::move(x), e}); }
inline ExprPtr at(ExprPtr body, Bindings b) { return make(node::At{std::move(body), std::move(b)}); }

/// Expression for a fixed monomial, e.g. -b*q^2.
inline ExprPtr monomial(const Monomial& m)
{
    ExprPtr r;
    for (Variable v : all_variables) {
        if (m.exp[v] == 0)
            continue;
        ExprPtr f = var(v);
        if (m.exp[v] != 1)
            f = pow(f, AffineInt::constant(m.exp[v]));
        r = r ? mul(r, f) : f;
    }
    BigRat c = m.coef;
    bool negative = c.sign() < 0;
    if (negative)
        c = -c;
    if (!r)
        return constant(m.coef);
    if (!c.is_one())
        r = mul(constant(c), r);
    return negative ? neg(r) : r;
}

} // namespace ex

bool equal(const ExprPtr& x, const ExprPtr& y);

namespace detail {

inline bool equal_list(const std::vector<ExprPtr>& x, const std::vector<ExprPtr>& y)
{
    if (x.size() != y.size())
        return false;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!equal(x[i], y[i]))
            return false;
    return true;
}

inline bool equal_params(const SeriesParams& x, const SeriesParams& y)
{
    return x.step == y.step && equal_list(x.upper, y.upper) && equal_list(x.lower, y.lower) &&
           equal(x.argument, y.argument);
}

inline bool equal_bindings(const Bindings& x, const Bindings& y)
{
    if (x.n != y.n || x.k != y.k)
        return false;
    for (std::size_t i = 0; i < 3; ++i)
        if (!equal(x.vars[i], y.vars[i]))
            return false;
    return true;
}

} // namespace detail

/// Structural equality of expression trees.
inline bool equal(const ExprPtr& x, const ExprPtr& y)
{
    if (x == y)
        return true;
    if (!x || !y || x->node.index() != y->node.index())
        return false;
    using namespace node;
    return std::visit(
        [&](const auto& p) -> bool {
            using T = std::decay_t<decltype(p)>;
            const T& o = std::get<T>(y->node);
            if constexpr (std::is_same_v<T, Const>)
                return p.value == o.value;
            else if constexpr (std::is_same_v<T, Var>)
                return p.v == o.v;
            else if constexpr (std::is_same_v<T, Neg>)
                return equal(p.arg, o.arg);
            else if constexpr (std::is_same_v<T, Binary>)
                return p.op == o.op && equal(p.lhs, o.lhs) && equal(p.rhs, o.rhs);
            else if constexpr (std::is_same_v<T, Power>)
                return p.exp == o.exp && equal(p.base, o.base);
            else if constexpr (std::is_same_v<T, Poch>)
                return p.step == o.step && p.length == o.length && equal(p.arg, o.arg);
            else if constexpr (std::is_same_v<T, Phi>)
                return p.length == o.length && detail::equal_params(p.params, o.params);
            else if constexpr (std::is_same_v<T, SeriesTerm>)
                return p.index == o.index && detail::equal_params(p.params, o.params);
            else if constexpr (std::is_same_v<T, QCatalan>)
                return p.index == o.index && p.negate_q == o.negate_q;
            else if constexpr (std::is_same_v<T, Catalan>)
                return p.index == o.index;
            else if constexpr (std::is_same_v<T, Sum>)
                return p.name == o.name && p.lo == o.lo && p.hi == o.hi && equal(p.body, o.body);
            else
                return detail::equal_bindings(p.bind, o.bind) && equal(p.body, o.body);
        },
        x->node);
}

/// True when the expression is built from constants and variables by
/// negation, products, quotients and powers only.
inline bool is_monomial_expr(const ExprPtr& e)
{
    using namespace node;
    if (e->as<Const>() || e->as<Var>())
        return true;
    if (auto p = e->as<Neg>())
        return is_monomial_expr(p->arg);
    if (auto p = e->as<Power>())
        return is_monomial_expr(p->base);
    if (auto p = e->as<Binary>())
        return (p->op == BinOp::mul || p->op == BinOp::div) && is_monomial_expr(p->lhs) && is_monomial_expr(p->rhs);
    return false;
}

/// Length N of a terminating series, read off an upper parameter q^(-s*N).
inline std::optional<AffineInt> inferred_length(const SeriesParams& p)
{
    for (const auto& u : p.upper) {
        auto pw = u->as<node::Power>();
        if (!pw)
            continue;
        auto v = pw->base->as<node::Var>();
        if (!v || v->v != Variable::q)
            continue;
        AffineInt e = pw->exp;
        if (e.c0 % p.step || e.cn % p.step || e.ck % p.step)
            continue;
        AffineInt len{-e.c0 / p.step, -e.cn / p.step, -e.ck / p.step};
        if (len.cn > 0 || (len.cn == 0 && len.ck == 0 && len.c0 >= 0))
            return len;
    }
    return std::nullopt;
}

/// True when some node depends on q, a or b.
inline bool mentions_variables(const ExprPtr& e)
{
    using namespace node;
    return std::visit(
        [](const auto& p) -> bool {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, Const> || std::is_same_v<T, Catalan>)
                return false;
            else if constexpr (std::is_same_v<T, Neg>)
                return mentions_variables(p.arg);
            else if constexpr (std::is_same_v<T, Binary>)
                return mentions_variables(p.lhs) || mentions_variables(p.rhs);
            else if constexpr (std::is_same_v<T, Power>)
                return mentions_variables(p.base);
            else if constexpr (std::is_same_v<T, Sum>)
                return mentions_variables(p.body);
            else
                return true;
        },
        e->node);
}

// Printing in the DSL surface syntax. Precedence levels: 1 additive,
// 2 multiplicative, 3 unary minus, 4 power, 5 atoms.

namespace detail {

inline std::string affine_term(std::int64_t c, const std::string& name, bool first)
{
    std::string s;
    if (c < 0)
        s = "-";
    else if (!first)
        s = "+";
    std::int64_t m = c < 0 ? -c : c;
    if (m != 1)
        s += std::to_string(m) + "*";
    return s + name;
}

} // namespace detail

inline std::string to_dsl(const AffineInt& a, const std::string& index = "k")
{
    std::string s;
    if (a.cn != 0)
        s += detail::affine_term(a.cn, "n", s.empty());
    if (a.ck != 0)
        s += detail::affine_term(a.ck, index, s.empty());
    if (a.c0 != 0 || s.empty()) {
        if (s.empty() || a.c0 < 0)
            s += std::to_string(a.c0);
        else
            s += "+" + std::to_string(a.c0);
    }
    return s;
}

namespace detail {

inline std::string exponent(const AffineInt& e, const std::string& index)
{
    std::string s = to_dsl(e, index);
    bool simple = e.is_constant() || (e.c0 == 0 && ((e.cn == 0 && (e.ck == 1 || e.ck == -1)) ||
                                                   (e.ck == 0 && (e.cn == 1 || e.cn == -1))));
    return simple ? s : "(" + s + ")";
}

class Printer {
public:
    std::string print(const ExprPtr& e, int min_level = 0)
    {
        auto [text, level] = render(e);
        return level < min_level ? "(" + text + ")" : text;
    }

private:
    std::string index_ = "k";

    std::string list(const std::vector<ExprPtr>& xs)
    {
        std::string s;
        for (std::size_t i = 0; i < xs.size(); ++i)
            s += (i ? ", " : "") + print(xs[i]);
        return s;
    }

    std::string params(const SeriesParams& p)
    {
        return "[" + list(p.upper) + "]; [" + list(p.lower) + "]; " + std::to_string(p.step) + "; " + print(p.argument);
    }

    std::pair<std::string, int> render(const ExprPtr& e)
    {
        using namespace node;
        return std::visit(
            [&](const auto& p) -> std::pair<std::string, int> {
                using T = std::decay_t<decltype(p)>;
                if constexpr (std::is_same_v<T, Const>) {
                    if (p.value.is_integer() && p.value.sign() >= 0)
                        return {p.value.to_string(), 5};
                    return {"(" + p.value.to_string() + ")", 5};
                } else if constexpr (std::is_same_v<T, Var>) {
                    return {variable_string(p.v), 5};
                } else if constexpr (std::is_same_v<T, Neg>) {
                    return {"-" + print(p.arg, 3), 3};
                } else if constexpr (std::is_same_v<T, Binary>) {
                    static constexpr const char* ops[] = {" + ", " - ", "*", "/"};
                    int level = (p.op == BinOp::add || p.op == BinOp::sub) ? 1 : 2;
                    return {print(p.lhs, level) + ops[static_cast<int>(p.op)] + print(p.rhs, level + 1), level};
                } else if constexpr (std::is_same_v<T, Power>) {
                    return {print(p.base, 5) + "^" + exponent(p.exp, index_), 4};
                } else if constexpr (std::is_same_v<T, Poch>) {
                    return {"poch(" + print(p.arg) + "; " + std::to_string(p.step) + "; " + to_dsl(p.length, index_) + ")",
                            5};
                } else if constexpr (std::is_same_v<T, Phi>) {
                    return {"phi(" + params(p.params) + "; " + to_dsl(p.length, index_) + ")", 5};
                } else if constexpr (std::is_same_v<T, SeriesTerm>) {
                    return {"term(" + params(p.params) + "; " + to_dsl(p.index, index_) + ")", 5};
                } else if constexpr (std::is_same_v<T, QCatalan>) {
                    return {"qcat(" + to_dsl(p.index, index_) + (p.negate_q ? ", negq)" : ")"), 5};
                } else if constexpr (std::is_same_v<T, Catalan>) {
                    return {"cat(" + to_dsl(p.index, index_) + ")", 5};
                } else if constexpr (std::is_same_v<T, Sum>) {
                    std::string head = "sum(" + p.name + ", " + to_dsl(p.lo, index_) + ", " + to_dsl(p.hi, index_) + "; ";
                    std::string saved = index_;
                    index_ = p.name;
                    std::string body = print(p.body);
                    index_ = saved;
                    return {head + body + ")", 5};
                } else {
                    std::string s = "at(" + print(p.body) + ";";
                    const char* sep = " ";
                    if (p.bind.n) {
                        s += sep + std::string("n = ") + to_dsl(*p.bind.n, index_);
                        sep = ", ";
                    }
                    if (p.bind.k) {
                        s += sep + index_ + " = " + to_dsl(*p.bind.k, index_);
                        sep = ", ";
                    }
                    for (Variable v : all_variables) {
                        if (const auto& x = p.bind.vars[static_cast<std::size_t>(v)]) {
                            s += sep + std::string(variable_string(v)) + " = " + print(x);
                            sep = ", ";
                        }
                    }
                    return {s + ")", 5};
                }
            },
            e->node);
    }
};

} // namespace detail

inline std::string to_dsl(const ExprPtr& e) { return detail::Printer().print(e); }

} // namespace qverify

#endif
