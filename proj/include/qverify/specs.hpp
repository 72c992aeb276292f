#ifndef QVERIFY_SPECS_HPP
#define QVERIFY_SPECS_HPP

#include <algorithm>
#include <optional>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ast.hpp"

namespace qverify {

enum class SpecKind { identity, family, integer, certificate, relation, induction, transport };

inline const char* kind_name(SpecKind k)
{
    switch (k) {
    case SpecKind::identity: return "identity";
    case SpecKind::family: return "family";
    case SpecKind::integer: return "integer";
    case SpecKind::certificate: return "certificate";
    case SpecKind::relation: return "relation";
    case SpecKind::induction: return "induction";
    case SpecKind::transport: return "transport";
    }
    return "?";
}

/// One catalog record. Which fields are used depends on `kind`:
///   identity, family, integer   lhs == rhs (family: for every 0 <= k <= n)
///   certificate                 f, H, boundary flag, target
///   relation                    lhs = F - at(F; shift), rhs = M * at(F; target), F a term(...)
///   induction                   base_id (identity) and relation_id
///   transport                   from_id, to_id, map
struct Spec {
    std::string id;
    SpecKind kind = SpecKind::identity;
    std::int64_t n_min = 0;

    ExprPtr lhs;
    ExprPtr rhs;

    ExprPtr f;
    ExprPtr H;
    ExprPtr target;
    bool boundary = false;

    std::string base_id;
    std::string relation_id;

    std::string from_id;
    std::string to_id;
    SubstMap map;

    std::string notes;

    bool is_identity_like() const
    {
        return kind == SpecKind::identity || kind == SpecKind::family || kind == SpecKind::integer;
    }
};

using IdentitySpec = Spec;
using CertificateSpec = Spec;
using RelationSpec = Spec;

/// Structural equality; notes are ignored.
inline bool same_structure(const Spec& x, const Spec& y)
{
    return x.id == y.id && x.kind == y.kind && x.n_min == y.n_min && equal(x.lhs, y.lhs) && equal(x.rhs, y.rhs) &&
           equal(x.f, y.f) && equal(x.H, y.H) && equal(x.target, y.target) && x.boundary == y.boundary &&
           x.base_id == y.base_id && x.relation_id == y.relation_id && x.from_id == y.from_id &&
           x.to_id == y.to_id && x.map == y.map;
}

/// Pieces of a relation F - at(F; shift) == M * at(F; target).
struct RelationParts {
    ExprPtr term;
    Bindings shift;
    ExprPtr multiplier;
    Bindings target;
};

/// Splits a relation into its parts; nullopt when the shape does not match.
inline std::optional<RelationParts> relation_parts(const ExprPtr& lhs, const ExprPtr& rhs)
{
    using namespace node;
    auto l = lhs ? lhs->as<Binary>() : nullptr;
    auto r = rhs ? rhs->as<Binary>() : nullptr;
    if (!l || !r || l->op != BinOp::sub || r->op != BinOp::mul || !l->lhs->as<SeriesTerm>())
        return std::nullopt;
    auto shifted = l->rhs->as<At>();
    auto target = r->rhs->as<At>();
    if (!shifted || !target || !equal(shifted->body, l->lhs) || !equal(target->body, l->lhs))
        return std::nullopt;
    return RelationParts{l->lhs, shifted->bind, r->lhs, target->bind};
}

inline RelationParts relation_parts(const Spec& s)
{
    auto p = relation_parts(s.lhs, s.rhs);
    if (!p)
        throw Error("spec " + s.id + " is not a relation of the form F - at(F; ...) == M * at(F; ...)");
    return *p;
}

class Catalog {
public:
    std::vector<Spec> specs;

    const Spec* find(std::string_view id) const
    {
        auto it = std::find_if(specs.begin(), specs.end(), [&](const Spec& s) { return s.id == id; });
        return it == specs.end() ? nullptr : &*it;
    }

    const Spec& at(std::string_view id) const
    {
        if (auto s = find(id))
            return *s;
        throw Error("unknown spec id: " + std::string(id));
    }

    std::size_t size() const noexcept { return specs.size(); }
};

inline bool same_structure(const Catalog& x, const Catalog& y)
{
    if (x.size() != y.size())
        return false;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!same_structure(x.specs[i], y.specs[i]))
            return false;
    return true;
}

} // namespace qverify

#endif
