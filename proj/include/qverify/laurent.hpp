#ifndef QVERIFY_LAURENT_HPP
#define QVERIFY_LAURENT_HPP

#include <algorithm>
#include <array>
#include <cctype>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bigrat.hpp"

namespace qverify {

enum class Variable : std::uint8_t { q = 0, a = 1, b = 2 };

inline constexpr std::array<Variable, 3> all_variables{Variable::q, Variable::a, Variable::b};

inline constexpr char variable_name(Variable v)
{
    switch (v) {
    case Variable::q: return 'q';
    case Variable::a: return 'a';
    case Variable::b: return 'b';
    }
    return '?';
}

inline std::string variable_string(Variable v) { return std::string(1, variable_name(v)); }

/// Exponents of q, a, b in a Laurent monomial.
///
/// The defaulted comparison is lexicographic on (q, a, b); it is compatible with
/// multiplication and is the storage order of LaurentPoly. The canonical
/// (presentation) order is CanonicalLess.
struct ExpVec {
    std::int32_t q = 0;
    std::int32_t a = 0;
    std::int32_t b = 0;

    static ExpVec of(Variable v, std::int32_t e = 1)
    {
        ExpVec r;
        r[v] = e;
        return r;
    }

    std::int32_t& operator[](Variable v)
    {
        switch (v) {
        case Variable::a: return a;
        case Variable::b: return b;
        default: return q;
        }
    }
    std::int32_t operator[](Variable v) const
    {
        switch (v) {
        case Variable::a: return a;
        case Variable::b: return b;
        default: return q;
        }
    }

    bool is_zero() const noexcept { return q == 0 && a == 0 && b == 0; }
    std::int64_t abs_degree() const noexcept { return std::abs(std::int64_t(q)) + std::abs(std::int64_t(a)) + std::abs(std::int64_t(b)); }

    friend ExpVec operator+(ExpVec x, ExpVec y) { return {x.q + y.q, x.a + y.a, x.b + y.b}; }
    friend ExpVec operator-(ExpVec x, ExpVec y) { return {x.q - y.q, x.a - y.a, x.b - y.b}; }
    friend ExpVec operator*(ExpVec x, std::int64_t s)
    {
        return {static_cast<std::int32_t>(x.q * s), static_cast<std::int32_t>(x.a * s), static_cast<std::int32_t>(x.b * s)};
    }
    ExpVec operator-() const { return {-q, -a, -b}; }

    friend bool operator==(const ExpVec&, const ExpVec&) = default;
    friend auto operator<=>(const ExpVec&, const ExpVec&) = default;
};

inline ExpVec min(ExpVec x, ExpVec y) { return {std::min(x.q, y.q), std::min(x.a, y.a), std::min(x.b, y.b)}; }

/// Graded order on (|e_q|+|e_a|+|e_b|, e_q, e_a, e_b): the canonical order used
/// for leading terms and text output.
struct CanonicalLess {
    bool operator()(const ExpVec& x, const ExpVec& y) const noexcept
    {
        auto dx = x.abs_degree();
        auto dy = y.abs_degree();
        if (dx != dy)
            return dx < dy;
        return x < y;
    }
};

struct ExpVecHash {
    std::size_t operator()(const ExpVec& e) const noexcept
    {
        std::uint64_t h = std::uint32_t(e.q);
        h = h * 0x9E3779B97F4A7C15ULL ^ std::uint32_t(e.a);
        h = h * 0x9E3779B97F4A7C15ULL ^ std::uint32_t(e.b);
        return static_cast<std::size_t>(h ^ (h >> 29));
    }
};

/// c * q^i * a^j * b^k with c a nonzero rational (zero is allowed only as a
/// transient value; LaurentPoly never stores it).
struct Monomial {
    BigRat coef{1};
    ExpVec exp{};

    static Monomial variable(Variable v) { return {BigRat(1), ExpVec::of(v)}; }

    bool is_one() const { return coef.is_one() && exp.is_zero(); }

    Monomial pow(std::int64_t e) const { return {coef.pow(e), exp * e}; }
    Monomial inverse() const { return {coef.reciprocal(), -exp}; }

    friend Monomial operator*(const Monomial& x, const Monomial& y) { return {x.coef * y.coef, x.exp + y.exp}; }
    friend Monomial operator/(const Monomial& x, const Monomial& y) { return {x.coef / y.coef, x.exp - y.exp}; }
    Monomial operator-() const { return {-coef, exp}; }

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

struct Term {
    ExpVec exp;
    BigRat coef;
    friend bool operator==(const Term&, const Term&) = default;
};

/// Images of q, a, b under a monomial substitution (a ring homomorphism of the
/// Laurent ring). The default value is the identity.
struct SubstMap {
    std::array<Monomial, 3> image{Monomial::variable(Variable::q), Monomial::variable(Variable::a),
                                  Monomial::variable(Variable::b)};

    const Monomial& operator[](Variable v) const { return image[static_cast<std::size_t>(v)]; }
    Monomial& operator[](Variable v) { return image[static_cast<std::size_t>(v)]; }

    bool is_identity() const { return *this == SubstMap{}; }

    /// Image of a monomial.
    Monomial apply(const Monomial& m) const
    {
        Monomial r{m.coef, {}};
        for (Variable v : all_variables) {
            if (m.exp[v] != 0)
                r = r * image[static_cast<std::size_t>(v)].pow(m.exp[v]);
        }
        return r;
    }

    /// (this ∘ inner): apply inner first, then this.
    SubstMap compose(const SubstMap& inner) const
    {
        SubstMap r;
        for (Variable v : all_variables)
            r[v] = apply(inner[v]);
        return r;
    }

    friend bool operator==(const SubstMap&, const SubstMap&) = default;
};

/// Sparse Laurent polynomial in q, a, b with exact rational coefficients.
///
/// Terms are kept strictly increasing in the lexicographic ExpVec order with no
/// zero coefficients, so structurally equal term lists mean equal polynomials.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(const BigRat& c) // NOLINT(google-explicit-constructor)
    {
        if (!c.is_zero())
            terms_.push_back({ExpVec{}, c});
    }
    LaurentPoly(std::int64_t c) : LaurentPoly(BigRat(c)) {} // NOLINT(google-explicit-constructor)
    LaurentPoly(int c) : LaurentPoly(BigRat(c)) {}          // NOLINT(google-explicit-constructor)
    LaurentPoly(const Monomial& m)                          // NOLINT(google-explicit-constructor)
    {
        if (!m.coef.is_zero())
            terms_.push_back({m.exp, m.coef});
    }

    static LaurentPoly variable(Variable v) { return LaurentPoly(Monomial::variable(v)); }

    /// Builds a polynomial from arbitrary terms; duplicates are combined.
    static LaurentPoly from_terms(std::vector<Term> terms)
    {
        std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return x.exp < y.exp; });
        LaurentPoly r;
        r.terms_.reserve(terms.size());
        for (auto& t : terms) {
            if (!r.terms_.empty() && r.terms_.back().exp == t.exp) {
                r.terms_.back().coef += t.coef;
                if (r.terms_.back().coef.is_zero())
                    r.terms_.pop_back();
            } else if (!t.coef.is_zero()) {
                r.terms_.push_back(std::move(t));
            }
        }
        return r;
    }

    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_monomial() const noexcept { return terms_.size() == 1; }
    bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].exp.is_zero()); }

    /// Coefficient of the constant term (zero if absent).
    BigRat constant_coefficient() const
    {
        for (const auto& t : terms_)
            if (t.exp.is_zero())
                return t.coef;
        return BigRat(0);
    }

    /// Terms in storage (lexicographic) order.
    std::span<const Term> terms() const noexcept { return terms_; }

    /// Terms in canonical graded order (see CanonicalLess).
    std::vector<Term> canonical_terms() const
    {
        std::vector<Term> r(terms_.begin(), terms_.end());
        std::sort(r.begin(), r.end(), [](const Term& x, const Term& y) { return CanonicalLess{}(x.exp, y.exp); });
        return r;
    }

    /// Largest term in the canonical order. Precondition: nonzero.
    const Term& leading_term() const
    {
        const Term* best = &terms_.front();
        for (const auto& t : terms_)
            if (CanonicalLess{}(best->exp, t.exp))
                best = &t;
        return *best;
    }

    /// Componentwise minimum exponent. Precondition: nonzero.
    ExpVec min_exponents() const
    {
        ExpVec m = terms_.front().exp;
        for (const auto& t : terms_)
            m = min(m, t.exp);
        return m;
    }

    Monomial as_monomial() const { return {terms_.front().coef, terms_.front().exp}; }

    LaurentPoly operator-() const
    {
        LaurentPoly r = *this;
        for (auto& t : r.terms_)
            t.coef = -t.coef;
        return r;
    }

    friend LaurentPoly operator+(const LaurentPoly& x, const LaurentPoly& y) { return merge(x, y, false); }
    friend LaurentPoly operator-(const LaurentPoly& x, const LaurentPoly& y) { return merge(x, y, true); }

    LaurentPoly& operator+=(const LaurentPoly& y) { return *this = *this + y; }
    LaurentPoly& operator-=(const LaurentPoly& y) { return *this = *this - y; }
    LaurentPoly& operator*=(const LaurentPoly& y) { return *this = *this * y; }

    LaurentPoly operator*(const Monomial& m) const
    {
        if (m.coef.is_zero())
            return {};
        LaurentPoly r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_)
            r.terms_.push_back({t.exp + m.exp, t.coef * m.coef});
        return r;
    }

    friend LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y)
    {
        if (x.is_zero() || y.is_zero())
            return {};
        const LaurentPoly& small = x.size() <= y.size() ? x : y;
        const LaurentPoly& large = x.size() <= y.size() ? y : x;
        if (small.size() <= 8) {
            // shifting preserves the storage order, so partial products merge linearly
            LaurentPoly acc = large * small.as_monomial();
            for (std::size_t i = 1; i < small.size(); ++i) {
                const Term& t = small.terms_[i];
                acc = merge(acc, large * Monomial{t.coef, t.exp}, false);
            }
            return acc;
        }
        std::unordered_map<ExpVec, BigRat, ExpVecHash> acc;
        acc.reserve(x.size() * 4);
        for (const auto& s : small.terms_)
            for (const auto& l : large.terms_) {
                auto [it, inserted] = acc.try_emplace(s.exp + l.exp, s.coef * l.coef);
                if (!inserted)
                    it->second += s.coef * l.coef;
            }
        std::vector<Term> out;
        out.reserve(acc.size());
        for (auto& [e, c] : acc)
            if (!c.is_zero())
                out.push_back({e, std::move(c)});
        std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) { return a.exp < b.exp; });
        LaurentPoly r;
        r.terms_ = std::move(out);
        return r;
    }

    LaurentPoly pow(std::uint64_t e) const
    {
        LaurentPoly result(1);
        LaurentPoly base = *this;
        while (e > 0) {
            if (e & 1)
                result *= base;
            e >>= 1;
            if (e)
                base *= base;
        }
        return result;
    }

    /// Ring homomorphism induced by a monomial substitution.
    LaurentPoly substitute(const SubstMap& map) const
    {
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (const auto& t : terms_) {
            Monomial m = map.apply(Monomial{t.coef, t.exp});
            out.push_back({m.exp, m.coef});
        }
        return from_terms(std::move(out));
    }

    /// Canonical text, constant-first: monomials `c*q^i*a^j*b^k` joined by ` + ` / ` - `.
    std::string to_string() const
    {
        if (terms_.empty())
            return "0";
        std::string out;
        bool first = true;
        for (const auto& t : canonical_terms()) {
            bool negative = t.coef.sign() < 0;
            BigRat mag = negative ? -t.coef : t.coef;
            if (first)
                out += negative ? "-" : "";
            else
                out += negative ? " - " : " + ";
            first = false;
            std::string vars;
            for (Variable v : all_variables) {
                auto e = t.exp[v];
                if (e == 0)
                    continue;
                if (!vars.empty())
                    vars += '*';
                vars += variable_name(v);
                if (e != 1)
                    vars += "^" + std::to_string(e);
            }
            if (vars.empty())
                out += mag.to_string();
            else if (mag.is_one())
                out += vars;
            else
                out += mag.to_string() + "*" + vars;
        }
        return out;
    }

    /// Parses the canonical text form (and any sum of such monomials).
    static LaurentPoly parse(std::string_view text);

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    /// Total order used only for associative containers keyed by polynomials.
    friend bool operator<(const LaurentPoly& x, const LaurentPoly& y)
    {
        return std::lexicographical_compare(x.terms_.begin(), x.terms_.end(), y.terms_.begin(), y.terms_.end(),
                                            [](const Term& s, const Term& t) {
                                                if (s.exp != t.exp)
                                                    return s.exp < t.exp;
                                                return s.coef < t.coef;
                                            });
    }

private:
    static LaurentPoly merge(const LaurentPoly& x, const LaurentPoly& y, bool subtract)
    {
        LaurentPoly r;
        r.terms_.reserve(x.size() + y.size());
        auto i = x.terms_.begin();
        auto j = y.terms_.begin();
        while (i != x.terms_.end() || j != y.terms_.end()) {
            if (j == y.terms_.end() || (i != x.terms_.end() && i->exp < j->exp)) {
                r.terms_.push_back(*i++);
            } else if (i == x.terms_.end() || j->exp < i->exp) {
                r.terms_.push_back({j->exp, subtract ? -j->coef : j->coef});
                ++j;
            } else {
                BigRat c = subtract ? i->coef - j->coef : i->coef + j->coef;
                if (!c.is_zero())
                    r.terms_.push_back({i->exp, std::move(c)});
                ++i;
                ++j;
            }
        }
        return r;
    }

    std::vector<Term> terms_;
};

/// Content-normal form of a nonzero polynomial: p = unit * primitive, where
/// unit is a monomial and primitive has componentwise minimum exponent zero and
/// canonical-leading coefficient one.
struct ContentSplit {
    Monomial unit;
    LaurentPoly primitive;
};

inline ContentSplit split_content(const LaurentPoly& p)
{
    ExpVec shift = p.min_exponents();
    LaurentPoly shifted = p * Monomial{BigRat(1), -shift};
    BigRat lead = shifted.leading_term().coef;
    LaurentPoly primitive = shifted * Monomial{lead.reciprocal(), ExpVec{}};
    return {Monomial{lead, shift}, std::move(primitive)};
}

inline LaurentPoly LaurentPoly::parse(std::string_view text)
{
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    };
    auto fail = [&](const std::string& msg) -> Error {
        return Error("polynomial parse error at offset " + std::to_string(pos) + ": " + msg);
    };
    auto read_int = [&]() -> std::string {
        std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+'))
            ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
            throw fail("expected integer");
        return std::string(text.substr(start, pos - start));
    };

    std::vector<Term> terms;
    skip_ws();
    bool negative = false;
    if (pos < text.size() && text[pos] == '-') {
        negative = true;
        ++pos;
    }
    while (true) {
        skip_ws();
        Term t{ExpVec{}, BigRat(1)};
        bool have_factor = false;
        while (true) {
            skip_ws();
            if (pos >= text.size())
                throw fail("unexpected end of input");
            char c = text[pos];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::string num = read_int();
                if (pos < text.size() && text[pos] == '/' && pos + 1 < text.size() &&
                    std::isdigit(static_cast<unsigned char>(text[pos + 1]))) {
                    ++pos;
                    num += "/" + read_int();
                }
                t.coef *= BigRat::parse(num);
            } else if (c == 'q' || c == 'a' || c == 'b') {
                ++pos;
                Variable v = c == 'q' ? Variable::q : c == 'a' ? Variable::a : Variable::b;
                std::int32_t e = 1;
                if (pos < text.size() && text[pos] == '^') {
                    ++pos;
                    e = static_cast<std::int32_t>(std::stol(read_int()));
                }
                t.exp[v] += e;
            } else {
                throw fail(std::string("unexpected character '") + c + "'");
            }
            have_factor = true;
            skip_ws();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                continue;
            }
            break;
        }
        if (!have_factor)
            throw fail("empty term");
        if (negative)
            t.coef = -t.coef;
        terms.push_back(std::move(t));
        skip_ws();
        if (pos >= text.size())
            break;
        if (text[pos] == '+')
            negative = false;
        else if (text[pos] == '-')
            negative = true;
        else
            throw fail(std::string("unexpected character '") + text[pos] + "'");
        ++pos;
    }
    return from_terms(std::move(terms));
}

} // namespace qverify

#endif
