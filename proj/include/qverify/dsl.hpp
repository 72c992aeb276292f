#ifndef QVERIFY_DSL_HPP
#define QVERIFY_DSL_HPP

#include <cctype>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "eval.hpp"
#include "specs.hpp"

namespace qverify {

namespace dsl {

enum class Tok { ident, integer, punct, end };

struct Token {
    Tok kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

inline std::vector<Token> tokenize(std::string_view src)
{
    std::vector<Token> out;
    std::size_t line = 1;
    std::size_t col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t count) {
        for (std::size_t j = 0; j < count; ++j, ++i) {
            if (src[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (i < src.size()) {
        unsigned char c = static_cast<unsigned char>(src[i]);
        if (c == '#') {
            while (i < src.size() && src[i] != '\n')
                advance(1);
            continue;
        }
        if (std::isspace(c)) {
            advance(1);
            continue;
        }
        std::size_t start = i;
        std::size_t l = line;
        std::size_t cl = col;
        if (std::isalpha(c) || c == '_') {
            while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_'))
                advance(1);
            out.push_back({Tok::ident, std::string(src.substr(start, i - start)), l, cl});
            continue;
        }
        if (std::isdigit(c)) {
            while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i])))
                advance(1);
            out.push_back({Tok::integer, std::string(src.substr(start, i - start)), l, cl});
            continue;
        }
        std::string_view two = src.substr(i, 2);
        if (two == "==" || two == ">=" || two == "->") {
            advance(2);
            out.push_back({Tok::punct, std::string(two), l, cl});
            continue;
        }
        if (std::string_view("+-*/^()[];,=:").find(static_cast<char>(c)) != std::string_view::npos) {
            advance(1);
            out.push_back({Tok::punct, std::string(1, static_cast<char>(c)), l, cl});
            continue;
        }
        throw SyntaxError(l, cl, "unexpected character '" + std::string(1, static_cast<char>(c)) + "'");
    }
    out.push_back({Tok::end, "", line, col});
    return out;
}

inline const std::set<std::string>& reserved_words()
{
    static const std::set<std::string> words{"id",  "family", "cert", "rel",  "ind", "tr",   "let",  "for",
                                             "by",  "with",   "boundary", "target", "poch", "phi", "term",
                                             "qcat", "cat",   "sum",  "at",  "negq", "q",    "a",    "b",
                                             "n",   "k",      "f",    "H"};
    return words;
}

class Parser {
public:
    Parser(std::string_view src, const Catalog* base) : toks_(tokenize(src)), base_(base) {}

    Catalog parse()
    {
        Catalog cat;
        while (peek().kind != Tok::end)
            item(cat);
        return cat;
    }

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    const Catalog* base_;
    std::map<std::string, ExprPtr> lets_;
    std::string index_ = "k";
    bool index_free_ = true; // whether the k slot may be referenced

    const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }

    const Token& next()
    {
        const Token& t = toks_[pos_];
        if (pos_ + 1 < toks_.size())
            ++pos_;
        return t;
    }

    bool is(std::string_view text, std::size_t ahead = 0) const
    {
        const Token& t = peek(ahead);
        return t.kind != Tok::end && t.kind != Tok::integer && t.text == text;
    }

    bool accept(std::string_view text)
    {
        if (!is(text))
            return false;
        next();
        return true;
    }

    [[noreturn]] void fail(const Token& t, const std::string& msg) const
    {
        throw SyntaxError(t.line, t.column, msg + (t.kind == Tok::end ? " at end of input" : ", found '" + t.text + "'"));
    }

    const Token& expect(std::string_view text)
    {
        if (!is(text))
            fail(peek(), "expected '" + std::string(text) + "'");
        return next();
    }

    std::string name()
    {
        if (peek().kind != Tok::ident)
            fail(peek(), "expected a name");
        return next().text;
    }

    std::int64_t integer()
    {
        if (peek().kind != Tok::integer)
            fail(peek(), "expected an integer");
        const Token& t = next();
        if (t.text.size() > 15)
            throw SyntaxError(t.line, t.column, "integer too large: " + t.text);
        return std::stoll(t.text);
    }

    // ---- items

    void item(Catalog& cat)
    {
        const Token& head = peek();
        if (head.kind != Tok::ident)
            fail(head, "expected an item keyword");
        std::string kw = head.text;
        if (kw == "let") {
            next();
            const Token& nt = peek();
            std::string nm = name();
            if (reserved_words().count(nm) || lets_.count(nm))
                throw SyntaxError(nt.line, nt.column, "name '" + nm + "' is reserved or already defined");
            expect("=");
            lets_[nm] = expr();
            expect(";");
            return;
        }
        static const std::set<std::string> kinds{"id", "family", "cert", "rel", "ind", "tr"};
        if (!kinds.count(kw))
            fail(head, "expected an item keyword (id, family, cert, rel, ind, tr, let)");
        next();
        Spec s;
        const Token& nt = peek();
        s.id = name();
        if (cat.find(s.id))
            throw SyntaxError(nt.line, nt.column, "duplicate spec id '" + s.id + "'");
        std::optional<std::int64_t> n_min;
        if (accept("for")) {
            expect("n");
            expect(">=");
            n_min = integer();
        }
        expect(":");
        if (kw == "id" || kw == "family") {
            index_free_ = kw == "family";
            s.lhs = expr();
            expect("==");
            s.rhs = expr();
            index_free_ = true;
            if (kw == "family")
                s.kind = SpecKind::family;
            else if (mentions_variables(s.lhs) || mentions_variables(s.rhs))
                s.kind = SpecKind::identity;
            else
                s.kind = SpecKind::integer;
            s.n_min = n_min.value_or(0);
        } else if (kw == "cert") {
            s.kind = SpecKind::certificate;
            expect("f");
            expect("=");
            s.f = expr();
            expect(",");
            expect("H");
            expect("=");
            s.H = expr();
            while (accept(",")) {
                if (accept("boundary")) {
                    s.boundary = true;
                } else {
                    expect("target");
                    expect("=");
                    s.target = expr();
                }
            }
            s.n_min = n_min.value_or(0);
        } else if (kw == "rel") {
            s.kind = SpecKind::relation;
            s.lhs = expr();
            expect("==");
            s.rhs = expr();
            if (!relation_parts(s.lhs, s.rhs))
                throw SyntaxError(nt.line, nt.column,
                                  "relation must have the form F - at(F; ...) == M * at(F; ...) with F = term(...)");
            s.n_min = n_min.value_or(2);
        } else if (kw == "ind") {
            s.kind = SpecKind::induction;
            const Spec& id = lookup(cat, SpecKind::identity);
            expect("by");
            const Spec& rel = lookup(cat, SpecKind::relation);
            s.base_id = id.id;
            s.relation_id = rel.id;
            s.n_min = n_min.value_or(std::max(id.n_min, rel.n_min));
        } else {
            s.kind = SpecKind::transport;
            const Spec& from = lookup(cat, SpecKind::identity);
            expect("->");
            const Spec& to = lookup(cat, SpecKind::identity);
            s.from_id = from.id;
            s.to_id = to.id;
            expect("with");
            do {
                const Token& vt = peek();
                Variable v = variable(vt);
                expect("=");
                const Token& et = peek();
                ExprPtr e = expr();
                if (!is_monomial_expr(e))
                    throw SyntaxError(et.line, et.column, "substitution image must be a signed monomial");
                s.map[v] = eval_monomial(e, Scope{});
            } while (accept(","));
            s.n_min = n_min.value_or(std::max(from.n_min, to.n_min));
        }
        expect(";");
        if (s.n_min < 0)
            throw SyntaxError(nt.line, nt.column, "n_min must be non-negative");
        cat.specs.push_back(std::move(s));
    }

    const Spec& lookup(const Catalog& cat, SpecKind kind)
    {
        const Token& t = peek();
        std::string nm = name();
        const Spec* s = cat.find(nm);
        if (!s && base_)
            s = base_->find(nm);
        if (!s)
            throw UnknownSymbol(t.line, t.column, "unknown spec id '" + nm + "'");
        bool ok = kind == SpecKind::relation ? s->kind == SpecKind::relation : s->kind == SpecKind::identity;
        if (!ok)
            throw SyntaxError(t.line, t.column,
                              "spec '" + nm + "' is not " + (kind == SpecKind::relation ? "a relation" : "an identity"));
        return *s;
    }

    Variable variable(const Token& t)
    {
        if (t.kind == Tok::ident) {
            for (Variable v : all_variables) {
                if (t.text == variable_string(v)) {
                    next();
                    return v;
                }
            }
        }
        fail(t, "expected q, a or b");
    }

    // ---- affine forms in n and the index

    AffineInt affine()
    {
        AffineInt r = affine_term();
        while (is("+") || is("-")) {
            bool minus = next().text == "-";
            AffineInt t = affine_term();
            r = minus ? r - t : r + t;
        }
        return r;
    }

    AffineInt affine_term()
    {
        bool negate = accept("-");
        AffineInt r = affine_factor();
        while (is("*")) {
            const Token& star = next();
            AffineInt f = affine_factor();
            if (!r.is_constant() && !f.is_constant())
                throw NonAffineExponent(star.line, star.column, "product of two non-constant terms is not affine in n, k");
            r = r.is_constant() ? f * r.c0 : r * f.c0;
        }
        return negate ? -r : r;
    }

    AffineInt affine_factor()
    {
        const Token& t = peek();
        if (t.kind == Tok::integer)
            return AffineInt::constant(integer());
        if (accept("(")) {
            AffineInt r = affine();
            expect(")");
            return r;
        }
        if (t.kind == Tok::ident) {
            if (t.text == "n") {
                next();
                return {0, 1, 0};
            }
            if (t.text == index_ && index_free_) {
                next();
                return {0, 0, 1};
            }
            throw UnknownSymbol(t.line, t.column, "'" + t.text + "' is not n or the summation index");
        }
        fail(t, "expected an affine form in n and " + index_);
    }

    /// After '^': ['-'] (INT | NAME) | '(' affine ')'.
    AffineInt exponent()
    {
        if (is("("))
            return affine_factor();
        bool negate = accept("-");
        const Token& t = peek();
        if (t.kind != Tok::integer && t.kind != Tok::ident)
            fail(t, "expected an exponent");
        AffineInt r = affine_factor();
        return negate ? -r : r;
    }

    // ---- expressions

    ExprPtr expr()
    {
        ExprPtr r = term();
        while (is("+") || is("-")) {
            bool minus = next().text == "-";
            ExprPtr t = term();
            r = minus ? ex::sub(r, t) : ex::add(r, t);
        }
        return r;
    }

    ExprPtr term()
    {
        ExprPtr r = factor();
        while (is("*") || is("/")) {
            bool divide = next().text == "/";
            ExprPtr f = factor();
            if (divide) {
                auto x = r->as<node::Const>();
                auto y = f->as<node::Const>();
                if (x && y && !y->value.is_zero())
                    r = ex::constant(x->value / y->value);
                else
                    r = ex::div(r, f);
            } else {
                r = ex::mul(r, f);
            }
        }
        return r;
    }

    ExprPtr factor()
    {
        if (accept("-")) {
            ExprPtr x = factor();
            if (auto c = x->as<node::Const>())
                return ex::constant(-c->value);
            return ex::neg(x);
        }
        ExprPtr b = base();
        if (accept("^"))
            return ex::pow(b, exponent());
        return b;
    }

    ExprPtr monomial_expr()
    {
        const Token& t = peek();
        ExprPtr e = expr();
        if (!is_monomial_expr(e))
            throw SyntaxError(t.line, t.column, "expected a signed monomial");
        return e;
    }

    std::vector<ExprPtr> monomial_list()
    {
        std::vector<ExprPtr> out;
        expect("[");
        if (accept("]"))
            return out;
        do
            out.push_back(monomial_expr());
        while (accept(","));
        expect("]");
        return out;
    }

    int step()
    {
        const Token& t = peek();
        std::int64_t s = integer();
        if (s <= 0 || s > 64)
            throw SyntaxError(t.line, t.column, "base step must be a positive integer");
        return static_cast<int>(s);
    }

    SeriesParams series_params()
    {
        SeriesParams p;
        p.upper = monomial_list();
        expect(";");
        p.lower = monomial_list();
        expect(";");
        p.step = step();
        expect(";");
        p.argument = monomial_expr();
        return p;
    }

    Bindings bindings()
    {
        Bindings b;
        do {
            const Token& t = peek();
            if (t.kind != Tok::ident)
                fail(t, "expected a binding");
            if (t.text == "n") {
                next();
                expect("=");
                b.n = affine();
            } else if (t.text == index_) {
                next();
                expect("=");
                b.k = affine();
            } else {
                Variable v = variable(t);
                expect("=");
                b.vars[static_cast<std::size_t>(v)] = monomial_expr();
            }
        } while (accept(","));
        return b;
    }

    ExprPtr base()
    {
        const Token& t = peek();
        if (t.kind == Tok::integer) {
            next();
            return ex::constant(BigRat(BigInt(t.text)));
        }
        if (accept("(")) {
            ExprPtr e = expr();
            expect(")");
            return e;
        }
        if (t.kind != Tok::ident)
            fail(t, "expected an expression");
        for (Variable v : all_variables) {
            if (t.text == variable_string(v)) {
                next();
                return ex::var(v);
            }
        }
        if (auto it = lets_.find(t.text); it != lets_.end()) {
            next();
            return it->second;
        }
        const std::string& w = t.text;
        if (w == "poch") {
            next();
            expect("(");
            ExprPtr arg = monomial_expr();
            expect(";");
            int s = step();
            expect(";");
            AffineInt len = affine();
            expect(")");
            return ex::make(node::Poch{arg, s, len});
        }
        if (w == "phi" || w == "term") {
            next();
            expect("(");
            SeriesParams p = series_params();
            std::optional<AffineInt> len;
            if (accept(";"))
                len = affine();
            else if (w == "phi")
                len = inferred_length(p);
            if (!len)
                fail(peek(), w == "phi" ? "cannot infer the series length; expected ';'" : "expected ';'");
            expect(")");
            if (w == "phi")
                return ex::make(node::Phi{std::move(p), *len});
            return ex::make(node::SeriesTerm{std::move(p), *len});
        }
        if (w == "qcat") {
            next();
            expect("(");
            AffineInt idx = affine();
            bool negq = false;
            if (accept(",")) {
                expect("negq");
                negq = true;
            }
            expect(")");
            return ex::make(node::QCatalan{idx, negq});
        }
        if (w == "cat") {
            next();
            expect("(");
            AffineInt idx = affine();
            expect(")");
            return ex::make(node::Catalan{idx});
        }
        if (w == "sum") {
            next();
            expect("(");
            const Token& nt = peek();
            std::string nm = name();
            if (nm != "k" && reserved_words().count(nm))
                throw SyntaxError(nt.line, nt.column, "'" + nm + "' cannot be a summation index");
            expect(",");
            AffineInt lo = affine();
            expect(",");
            AffineInt hi = affine();
            expect(";");
            std::string saved = index_;
            bool saved_free = index_free_;
            index_ = nm;
            index_free_ = true;
            ExprPtr body = expr();
            index_ = saved;
            index_free_ = saved_free;
            expect(")");
            return ex::make(node::Sum{nm, lo, hi, body});
        }
        if (w == "at") {
            next();
            expect("(");
            ExprPtr body = expr();
            expect(";");
            Bindings b = bindings();
            expect(")");
            return ex::at(body, std::move(b));
        }
        if (w == "n" || w == "k" || w == index_)
            throw UnknownSymbol(t.line, t.column, "'" + w + "' may only appear in exponents, lengths and indices");
        throw UnknownSymbol(t.line, t.column, "unknown symbol '" + w + "'");
    }
};

} // namespace dsl

/// Parses catalog DSL text. Items of kind ind and tr may refer to specs of
/// `base` as well as to earlier items of the same text; an item of the text
/// shadows a base spec of the same id.
inline Catalog parse_catalog(std::string_view text, const Catalog* base = nullptr)
{
    return dsl::Parser(text, base).parse();
}

/// DSL text of one spec; parse_catalog of the text reproduces it.
inline std::string serialize(const Spec& s)
{
    std::string head = std::string(s.kind == SpecKind::family        ? "family"
                                   : s.kind == SpecKind::certificate ? "cert"
                                   : s.kind == SpecKind::relation    ? "rel"
                                   : s.kind == SpecKind::induction   ? "ind"
                                   : s.kind == SpecKind::transport   ? "tr"
                                                                     : "id") +
                       " " + s.id + " for n >= " + std::to_string(s.n_min) + " : ";
    switch (s.kind) {
    case SpecKind::certificate: {
        std::string r = head + "f = " + to_dsl(s.f) + ", H = " + to_dsl(s.H);
        if (s.boundary)
            r += ", boundary";
        if (s.target)
            r += ", target = " + to_dsl(s.target);
        return r + " ;";
    }
    case SpecKind::induction:
        return head + s.base_id + " by " + s.relation_id + " ;";
    case SpecKind::transport: {
        std::string r = head + s.from_id + " -> " + s.to_id + " with ";
        const char* sep = "";
        for (Variable v : all_variables) {
            if (s.map[v] == Monomial::variable(v))
                continue;
            r += sep + std::string(variable_string(v)) + " = " + to_dsl(ex::monomial(s.map[v]));
            sep = ", ";
        }
        if (*sep == '\0')
            r += "q = q";
        return r + " ;";
    }
    default:
        return head + to_dsl(s.lhs) + " == " + to_dsl(s.rhs) + " ;";
    }
}

inline std::string serialize(const Catalog& c)
{
    std::string out;
    for (const auto& s : c.specs)
        out += serialize(s) + "\n";
    return out;
}

} // namespace qverify

#endif
