#ifndef QVERIFY_CATALOG_HPP
#define QVERIFY_CATALOG_HPP

#include <map>
#include <string>
#include <utility>

#include "dsl.hpp"

namespace qverify {

/// DSL source of the built-in catalog.
inline const char* builtin_catalog_source()
{
    return R"dsl(# Terminating 4phi3 summations in base q^2, their lemmas, certificates,
# contiguous relations, induction steps and substitution transports.

let A1L = phi([q^(-2*n), a, b, q^(1-2*n)/(a*b)]; [q^(2-2*n)/a, q^(2-2*n)/b, a*b*q]; 2; q^2; n);
let A1R = q^-n*poch(a; 1; n)*poch(b; 1; n)*poch(-q; 1; n)*poch(a*b; 2; n)
          / (poch(a*b; 1; n)*poch(a; 2; n)*poch(b; 2; n));
id A1 for n >= 0 : A1L == A1R;

# a = q^2 case of A1
let F1 = poch(b; 2; k)*poch(q^(-1-2*n)/b; 2; k)/(poch(q^(2-2*n)/b; 2; k)*poch(b*q^3; 2; k))*q^(2*k);
let L1R = q^-n*(1 - q^(n+1))*(1 - b*q)*(1 - b*q^(2*n))/((1 - q)*(1 - b*q^n)*(1 - b*q^(n+1)));
id L1 for n >= 0 : sum(k, 0, n; F1) == L1R;

let A2L = phi([q^(-2*n), a, b, q^(3-2*n)/(a*b)]; [q^(2-2*n)/a, q^(4-2*n)/b, a*b*q]; 2; q^2; n);
let P2 = a*b*q^(2*n-2)*(b - q^2) + a*b*q^(n-1)*(q - 1) + q - b;
let A2R = poch(a; 1; n)*poch(-q; 1; n)*poch(b; 1; n-1)*poch(a*b; 2; n-1)*P2
          / (q^(n+1)*(1 - a*b*q^(2*n-1))*poch(a*b; 1; n-1)*poch(a; 2; n)*poch(b/q^2; 2; n));
id A2 for n >= 0 : A2L == A2R;

# a = q^2 case of A2
let F2 = poch(b; 2; k)*poch(q^(1-2*n)/b; 2; k)/(poch(q^(4-2*n)/b; 2; k)*poch(b*q^3; 2; k))*q^(2*k);
let L2R = (1 - q^(n+1))*(1 - b*q)*(1 - b*q^(2*n-2))*(b*q^(2*n)*(b - q^2) + b*q^(n+1)*(q - 1) + q - b)
          / (q^(n+1)*(1 - q)*(1 - b/q^2)*(1 - b*q^(n-1))*(1 - b*q^n)*(1 - b*q^(2*n+1)));
id L2 for n >= 0 : sum(k, 0, n; F2) == L2R;

let T3L = phi([q^(-2*n), a, b, q^(1-2*n)/(a*b)]; [q^(2-2*n)/a, q^(4-2*n)/b, a*b*q]; 2; q^2; n);
let T3R = poch(a; 1; n)*poch(-q; 1; n)*poch(b; 1; n-1)*poch(a*b; 2; n-1)*P2
          / (b*q^(3*n-1)*(1 - a*q)*poch(a*b; 1; n-1)*poch(a; 2; n)*poch(b/q^2; 2; n))
        - poch(a; 1; n)*poch(b; 1; n)*poch(-q; 1; n)*poch(a*b; 2; n)
          / (b*q^(3*n-2)*(1 - a*q)*poch(a*b; 1; n)*poch(a; 2; n)*poch(b; 2; n-1));
id T3 for n >= 0 : T3L == T3R;

id D1 for n >= 0 : A2L == b*q^(2*n-2)*(1 - a*q)/(1 - a*b*q^(2*n-1))*T3L
                          + (1 - b*q^(2*n-2))/(1 - a*b*q^(2*n-1))*A1L;

family S1 for n >= 0 :
    poch(q^(3-2*n)/(a*b); 2; k)/poch(q^(4-2*n)/b; 2; k)
    == (1 - 1/(a*q))/(1 - q^(1-2*n)/(a*b))*poch(q^(1-2*n)/(a*b); 2; k)/poch(q^(4-2*n)/b; 2; k)
     + (1/(a*q) - q^(1-2*n)/(a*b))/(1 - q^(1-2*n)/(a*b))*poch(q^(1-2*n)/(a*b); 2; k)/poch(q^(2-2*n)/b; 2; k);

let V1R = poch(a; 1; n)*poch(b; 1; n)*poch(-q; 1; n)*poch(a*b; 2; n)
          / (poch(a*b; 1; n)*poch(a; 2; n)*poch(b; 2; n));
id V1 for n >= 0 : phi([q^(-2*n), a, b, q^(1-2*n)/(a*b)]; [q^(2-2*n)/a, q^(2-2*n)/b, a*b*q]; 2; q^4; n) == V1R;

family S2 for n >= 0 :
    poch(q^(3-2*n)/(a*b); 2; k)
    == 1/(1 - q^(1-2*n)/(a*b))*poch(q^(1-2*n)/(a*b); 2; k)
     - q^(1-2*n+2*k)/(a*b)/(1 - q^(1-2*n)/(a*b))*poch(q^(1-2*n)/(a*b); 2; k);

id V2 for n >= 0 :
    phi([q^(-2*n), a, b, q^(3-2*n)/(a*b)]; [q^(2-2*n)/a, q^(2-2*n)/b, a*b*q]; 2; q^2; n)
    == poch(a; 1; n)*poch(b; 1; n)*poch(-q; 1; n)*poch(a*b; 2; n)
       / ((1 - a*b*q^(2*n-1))*poch(a*b; 1; n-1)*poch(a; 2; n)*poch(b; 2; n));

let V3L = phi([q^(-2*n), a, b*q^2, q^(1-2*n)/(a*b)]; [q^(2-2*n)/a, q^(2-2*n)/b, a*b*q^3]; 2; q^2; n);
id V3 for n >= 0 :
    V3L == poch(a; 1; n)*poch(-q; 1; n)*poch(b*q^2; 1; n-1)*poch(a*b*q^2; 2; n-1)
           *(a*b*q^(2*n+1)*(b - 1) + a*b*q^n*(q - 1) + 1 - b*q)
           / (q^n*(1 - a*b*q^(2*n+1))*poch(a*b*q^2; 1; n-1)*poch(a; 2; n)*poch(b; 2; n));

id V4 for n >= 0 :
    phi([q^(-2*n), a, b*q^2, q^(1-2*n)/(a*b)]; [q^(2-2*n)/a, q^(2-2*n)/b, a*b*q^3]; 2; q^4; n)
    == poch(a; 1; n)*poch(-q; 1; n)*poch(b*q^2; 1; n-1)*poch(a*b*q^2; 2; n-1)
       *(a*b*q^(2*n)*(b*q - 1) + b*q^n*(1 - q) + 1 - b)
       / ((1 - a*b*q^(2*n+1))*poch(a*b*q^2; 1; n-1)*poch(a; 2; n)*poch(b; 2; n));

family S3 for n >= 0 : poch(a*q^2; 2; k) == poch(a; 2; k)/(1 - a) - a*poch(a; 2; k)*q^(2*k)/(1 - a);

let V5L = phi([q^(-2*n), a*q^2, b*q^2, q^(1-2*n)/(a*b)]; [q^(2-2*n)/a, q^(2-2*n)/b, a*b*q^3]; 2; q^2; n);
id V5 for n >= 0 :
    V5L == q^-n*poch(a*q; 1; n)*poch(b*q; 1; n)*poch(-q; 1; n)*poch(a*b*q^2; 2; n)
           / ((1 - a*b*q^(2*n+1))*poch(a*b*q^2; 1; n-1)*poch(a; 2; n)*poch(b; 2; n));

family S4 for n >= 0 :
    poch(q^(-2*n); 2; k)/poch(q^2; 2; k)
    == poch(q^(-2*n-2); 2; k)/poch(q^2; 2; k) + q^(-2*n-2)*term([q^(-2*n)]; []; 2; 1; k-1);

let V6L = phi([q^(-2*n), a, b, q^(-1-2*n)/(a*b)]; [q^(-2*n)/a, q^(-2*n)/b, a*b*q]; 2; q^2; n);
id D2 for n >= 0 :
    V6L == phi([q^(-2*n-2), a, b, q^(-1-2*n)/(a*b)]; [q^(-2*n)/a, q^(-2*n)/b, a*b*q]; 2; q^2; n+1)
           + q^(-2*n)*(1 - a)*(1 - b)*(1 - q^(-1-2*n)/(a*b))
             / ((1 - q^(-2*n)/a)*(1 - q^(-2*n)/b)*(1 - a*b*q))*V5L;

id V6 for n >= 0 :
    V6L == poch(a*q; 1; n)*poch(b*q; 1; n)*poch(-q; 1; n)*poch(a*b*q^2; 2; n)
           / (poch(a*b*q; 1; n)*poch(a*q^2; 2; n)*poch(b*q^2; 2; n));

id C1 for n >= 0 : sum(k, 0, n; cat(2*k)*cat(2*n-2*k)) == 4^n*cat(n);

id C2 for n >= 1 :
    sum(k, 0, n; q^(2*k)*qcat(2*k, negq)*qcat(2*n-2*k+1, negq))
    == q^(2*n+2)*(1 - q^(2*n-1))*poch(-q^2; 2; n-1)*qcat(n, negq)/poch(-q; 2; n+1);

let H1 = q^(k-n)*(1 - q^(n-2*k+1))*(1 - b*q)*(1 - b*q^(2*n))*poch(b; 2; k)*poch(b*q^(2*n-2*k+3); 2; k)
         / ((1 - q)*(1 - b*q^n)*(1 - b*q^(n+1))*poch(b*q; 2; k)*poch(b*q^(2*n-2*k+2); 2; k));
cert CERT1 for n >= 0 : f = F1, H = H1, boundary, target = L1R;

let H2 = (1 - q^(n-2*k+1))*(1 - b*q)*(1 - b*q^(2*n-2))
         *(b^2*q^(2*n-1) - b*q^(2*n-2*k+1) + b*q^n*(q - 1) - b*q^(2*k-1) + 1)
         *poch(b/q^2; 2; k)*poch(b*q^(2*n-2*k+3); 2; k)
         / (q^(n-k)*(1 - q)*(1 - b/q^2)*(1 - b*q^(n-1))*(1 - b*q^n)*(1 - b*q^(2*n+1))
            *poch(b*q; 2; k)*poch(b*q^(2*n-2*k); 2; k));
cert CERT2 for n >= 0 : f = F2, H = H2, target = L2R;

let G1 = term([q^(-2*n), a, b, q^(1-2*n)/(a*b)]; [q^(2-2*n)/a, q^(2-2*n)/b, a*b*q]; 2; q^2; k);
let alpha = (b/q^2 - q^(1-2*n)/(a*b))*(1 - a)*(1 - a*q)*(1 - q^(-2*n))*(1 - q^(2-2*n))*q^2
            / ((1 - a*b/q)*(1 - a*b*q)*(1 - q^(2-2*n)/a)*(1 - q^(2-2*n)/b)*(1 - q^(4-2*n)/b));
rel REL1 for n >= 2 : G1 - at(G1; b = b/q^2) == alpha*at(G1; n = n-2, k = k-1, a = a*q^2);

let G2 = term([q^(-2*n), a, b, q^(1-2*n)/(a*b)]; [q^(2-2*n)/a, q^(4-2*n)/b, a*b*q]; 2; q^2; k);
let beta = (a/q^2 - q^(1-2*n)/(a*b))*(1 - b)*(1 - b*q)*(1 - q^(-2*n))*(1 - q^(2-2*n))*q^2
           / ((1 - a*b/q)*(1 - a*b*q)*(1 - q^(2-2*n)/a)*(1 - q^(4-2*n)/a)*(1 - q^(4-2*n)/b));
rel REL2 for n >= 2 : G2 - at(G2; a = a/q^2) == beta*at(G2; n = n-2, k = k-1, b = b*q^2);

ind IND1 for n >= 2 : A1 by REL1;
ind IND2 for n >= 2 : T3 by REL2;

tr TR1 for n >= 0 : A1 -> V1 with q = q^-1, a = a^-1, b = b^-1;
tr TR2 for n >= 0 : V3 -> V4 with q = q^-1, a = a^-1, b = b^-1;
tr TR3 for n >= 0 : A2 -> V3 with b = b*q^2;
)dsl";
}

/// Formula fragment identifying each built-in entry.
inline const std::map<std::string, std::string>& builtin_notes()
{
    static const std::map<std::string, std::string> notes{
        {"A1", "(a,b,-q;q)_n (ab;q^2)_n"},
        {"L1", "(1-q^{n+1})(1-bq)(1-bq^{2n}); a = q^2 case of A1"},
        {"A2", "(abq^{2n-2}(b-q^2)+abq^{n-1}(q-1)+q-b)"},
        {"L2", "(bq^{2n}(b-q^2)+bq^{n+1}(q-1)+q-b); a = q^2 case of A2"},
        {"T3", "bq^{3n-1}(1-aq)(ab;q)_{n-1}; denominator read as (a;q^2)_n"},
        {"D1", "\\frac{bq^{2n-2}(1-aq)}{(1-abq^{2n-1})}"},
        {"S1", "\\frac{(1-1/aq)}{(1-q^{1-2n}/ab)}"},
        {"V1", "argument q^4; (a,b,q) -> (a^{-1},b^{-1},q^{-1}) in A1"},
        {"S2", "(q^{3-2n}/ab;q^2)_k =\\frac{1}{1-q^{1-2n}/ab}"},
        {"V2", "(1-abq^{2n-1})(ab;q)_{n-1} (a,b;q^2)_n"},
        {"V3", "(abq^{2n+1}(b-1)+abq^{n}(q-1)+1-bq)"},
        {"V4", "(abq^{2n}(bq-1)+bq^{n}(1-q)+1-b)"},
        {"S3", "(aq^2;q^2)_k=\\frac{(a;q^2)_k}{1-a}"},
        {"V5", "(aq,bq,-q;q)_n (abq^2;q^2)_{n}"},
        {"S4", "(q^{-2n-2};q^2)_k"},
        {"D2", "q^{-2n}(1-a)(1-b)(1-q^{-1-2n}/ab)"},
        {"V6", "(abq;q)_{n} (aq^2,bq^2;q^2)_{n}"},
        {"C1", "C_{2k} C_{2n-2k}=4^n C_n"},
        {"C2", "\\mathscr{C}_{2k}(1,-q)\\mathscr{C}_{2n-2k+1}(1,-q); fails at n = 0"},
        {"CERT1", "=H_k-H_{k+1} with H_k for L1; H_{n+1} = -H_0"},
        {"CERT2", "=H_{k}-H_{k+1} with H_k for L2"},
        {"REL1", "\\alpha_n F_{k-1}(n-2,aq^2,b,q)"},
        {"REL2", "\\beta_n F_{k-1}(n-2,a,bq^2,q)"},
        {"IND1", "q^{2-n}(aq^2,b,-q;q)_{n-2}"},
        {"IND2", "right side of T3 satisfies the summed REL2"},
        {"TR1", "A1 -> V1 under (a,b,q) -> (a^{-1},b^{-1},q^{-1})"},
        {"TR2", "V3 -> V4 under (a,b,q) -> (a^{-1},b^{-1},q^{-1})"},
        {"TR3", "A2 -> V3 under b -> bq^2"},
    };
    return notes;
}

/// The built-in catalog, parsed once.
inline const Catalog& builtin_catalog()
{
    static const Catalog catalog = [] {
        Catalog c = parse_catalog(builtin_catalog_source());
        for (auto& s : c.specs) {
            auto it = builtin_notes().find(s.id);
            if (it != builtin_notes().end())
                s.notes = it->second;
        }
        return c;
    }();
    return catalog;
}

inline const Spec& lookup(std::string_view id) { return builtin_catalog().at(id); }

/// Both sides of an identity-like spec at (n, k) as rational functions.
inline std::pair<RatFunc, RatFunc> instantiate(const Spec& spec, std::int64_t n, std::int64_t k = 0)
{
    if (!spec.is_identity_like())
        throw Error("spec " + spec.id + " is a " + kind_name(spec.kind) + ", not an identity");
    if (n < spec.n_min)
        throw InstantiationBelowRange(spec.id, n, spec.n_min);
    if (spec.kind == SpecKind::family && (k < 0 || k > n))
        throw Error("family index k = " + std::to_string(k) + " outside 0..n");
    Evaluator ev{SymbolicOps{}};
    Scope s{n, k, {}};
    return {ev(spec.lhs, s).to_ratfunc(), ev(spec.rhs, s).to_ratfunc()};
}

/// Spec whose sides are the images of the original sides under `map`.
inline Spec apply_subst(const Spec& spec, const SubstMap& map)
{
    if (map.is_identity())
        return spec;
    if (!spec.is_identity_like())
        throw Error("substitution applies to identities only");
    Bindings b;
    for (Variable v : all_variables)
        if (map[v] != Monomial::variable(v))
            b.vars[static_cast<std::size_t>(v)] = ex::monomial(map[v]);
    Spec r = spec;
    r.lhs = ex::at(spec.lhs, b);
    r.rhs = ex::at(spec.rhs, b);
    return r;
}

} // namespace qverify

#endif
