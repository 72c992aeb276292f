#ifndef QVERIFY_VERIFIER_HPP
#define QVERIFY_VERIFIER_HPP

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <functional>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "catalog.hpp"

namespace qverify {

enum class Mode { symbolic, modular };
enum class Status { pass, fail, error, skipped };

inline const char* mode_name(Mode m) { return m == Mode::symbolic ? "symbolic" : "modular"; }

inline const char* status_name(Status s)
{
    switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::error: return "error";
    default: return "skipped";
    }
}

struct ModularConfig {
    std::uint64_t prime = mersenne61;
    int trials = 20;
    std::uint64_t seed = 42;
    int max_pole_retries = 100;
};

struct VerifyResult {
    std::string id;
    std::int64_t n = 0;
    std::optional<std::int64_t> k;
    Mode mode = Mode::symbolic;
    Status status = Status::skipped;
    std::optional<std::string> witness;
    double ms = 0;

    friend bool operator==(const VerifyResult&, const VerifyResult&) = default;
};

/// Report order: (id, n, k, mode), a missing k first.
inline bool result_less(const VerifyResult& x, const VerifyResult& y)
{
    auto key = [](const VerifyResult& r) {
        return std::make_tuple(std::cref(r.id), r.n, r.k.has_value(), r.k.value_or(0), std::string(mode_name(r.mode)));
    };
    return key(x) < key(y);
}

/// One equality to check at a fixed (n, k). For transports the left side is
/// mapped through `transport` before comparison.
struct Equation {
    ExprPtr lhs;
    ExprPtr rhs;
    std::int64_t n = 0;
    std::int64_t k = 0;
    std::optional<std::int64_t> report_k;
    std::string label;
    std::optional<SubstMap> transport;
};

namespace detail {

inline Bindings bind_k(AffineInt k)
{
    Bindings b;
    b.k = k;
    return b;
}

inline Bindings without_k(Bindings b)
{
    b.k.reset();
    return b;
}

inline ExprPtr summed(const ExprPtr& term)
{
    const auto* t = term->as<node::SeriesTerm>();
    auto len = inferred_length(t->params);
    if (!len)
        throw NonTerminatingSeries("relation term has no upper parameter q^(-s*N)");
    return ex::make(node::Phi{t->params, *len});
}

} // namespace detail

/// The equalities that make up the check of `spec` at n.
inline std::vector<Equation> equations(const Spec& spec, std::int64_t n, const Catalog& cat = builtin_catalog())
{
    if (n < spec.n_min)
        throw InstantiationBelowRange(spec.id, n, spec.n_min);
    std::vector<Equation> out;
    switch (spec.kind) {
    case SpecKind::identity:
    case SpecKind::integer:
        out.push_back({spec.lhs, spec.rhs, n, 0, std::nullopt, "identity", std::nullopt});
        break;
    case SpecKind::family:
        for (std::int64_t k = 0; k <= n; ++k)
            out.push_back({spec.lhs, spec.rhs, n, k, k, "k=" + std::to_string(k), std::nullopt});
        break;
    case SpecKind::certificate: {
        using detail::bind_k;
        for (std::int64_t k = 0; k <= n; ++k) {
            out.push_back({ex::add(spec.f, ex::at(spec.f, bind_k({0, 1, -1}))),
                           ex::sub(spec.H, ex::at(spec.H, bind_k({1, 0, 1}))), n, k, k,
                           "pairing k=" + std::to_string(k), std::nullopt});
        }
        ExprPtr h0 = ex::at(spec.H, bind_k({0, 0, 0}));
        ExprPtr hlast = ex::at(spec.H, bind_k({1, 1, 0}));
        if (spec.boundary)
            out.push_back({hlast, ex::neg(h0), n, 0, std::nullopt, "boundary", std::nullopt});
        if (spec.target) {
            out.push_back({ex::div(ex::sub(h0, hlast), ex::constant(BigRat(2))), spec.target, n, 0, std::nullopt,
                           "telescoped", std::nullopt});
            out.push_back({ex::make(node::Sum{"k", {0, 0, 0}, {0, 1, 0}, spec.f}), spec.target, n, 0, std::nullopt,
                           "sum", std::nullopt});
        }
        break;
    }
    case SpecKind::relation: {
        for (std::int64_t k = 0; k <= n; ++k)
            out.push_back({spec.lhs, spec.rhs, n, k, k, "k=" + std::to_string(k), std::nullopt});
        RelationParts p = relation_parts(spec);
        ExprPtr s = detail::summed(p.term);
        out.push_back({ex::sub(s, ex::at(s, p.shift)), ex::mul(p.multiplier, ex::at(s, detail::without_k(p.target))),
                       n, 0, std::nullopt, "summed", std::nullopt});
        break;
    }
    case SpecKind::induction: {
        const Spec& id = cat.at(spec.base_id);
        RelationParts p = relation_parts(cat.at(spec.relation_id));
        ExprPtr r = id.rhs;
        out.push_back({ex::div(ex::sub(r, ex::at(r, p.shift)), p.multiplier), ex::at(r, detail::without_k(p.target)),
                       n, 0, std::nullopt, "induction", std::nullopt});
        break;
    }
    case SpecKind::transport: {
        const Spec& from = cat.at(spec.from_id);
        const Spec& to = cat.at(spec.to_id);
        out.push_back({from.lhs, to.lhs, n, 0, std::nullopt, "lhs", spec.map});
        out.push_back({from.rhs, to.rhs, n, 0, std::nullopt, "rhs", spec.map});
        break;
    }
    }
    return out;
}

namespace detail {

inline constexpr std::size_t witness_limit = 2000;

inline std::string truncate(std::string s)
{
    if (s.size() > witness_limit)
        s.resize(witness_limit);
    return s;
}

inline std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t fnv1a(std::string_view s)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

/// Uniform draw from [1, p-1] by rejection.
inline std::uint64_t draw_unit(std::mt19937_64& rng, std::uint64_t p)
{
    std::uint64_t range = p - 1;
    std::uint64_t mask = ~std::uint64_t(0) >> std::countl_zero(range);
    for (;;) {
        std::uint64_t x = rng() & mask;
        if (x < range)
            return x + 1;
    }
}

template <class F>
VerifyResult timed(VerifyResult r, F&& body)
{
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(r);
    } catch (const std::exception& e) {
        r.status = Status::error;
        r.witness = e.what();
    }
    r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

} // namespace detail

/// Generator of the evaluation points used by trial `trial` of (id, n).
inline std::mt19937_64 point_generator(const ModularConfig& cfg, std::string_view id, std::int64_t n, int trial)
{
    std::uint64_t s = detail::splitmix64(cfg.seed);
    s = detail::splitmix64(s ^ detail::fnv1a(id));
    s = detail::splitmix64(s ^ static_cast<std::uint64_t>(n));
    s = detail::splitmix64(s ^ static_cast<std::uint64_t>(trial));
    return std::mt19937_64(s);
}

inline FieldPoint sample_point(std::mt19937_64& rng, std::uint64_t prime)
{
    FieldPoint pt;
    pt.prime = prime;
    pt.q = detail::draw_unit(rng, prime);
    pt.a = detail::draw_unit(rng, prime);
    pt.b = detail::draw_unit(rng, prime);
    return pt;
}

/// Exact check: every equation holds in Q(q, a, b).
inline VerifyResult verify_symbolic(const Spec& spec, std::int64_t n, const Catalog& cat = builtin_catalog())
{
    return detail::timed({spec.id, n, std::nullopt, Mode::symbolic}, [&](VerifyResult& r) {
        auto eqs = equations(spec, n, cat);
        if (spec.kind == SpecKind::integer) {
            Evaluator ev{RationalOps{}};
            for (const auto& e : eqs) {
                Scope s{e.n, e.k, {}};
                BigRat l = ev(e.lhs, s);
                BigRat rr = ev(e.rhs, s);
                if (l != rr) {
                    r.status = Status::fail;
                    r.k = e.report_k;
                    r.witness = detail::truncate(e.label + ": " + (l - rr).to_string());
                    return;
                }
            }
            r.status = Status::pass;
            return;
        }
        Evaluator ev{SymbolicOps{}};
        for (const auto& e : eqs) {
            Scope s{e.n, e.k, {}};
            FactoredFunc l = ev(e.lhs, s);
            if (e.transport)
                l = l.substitute(*e.transport);
            FactoredFunc diff = l - ev(e.rhs, s);
            if (!diff.is_zero()) {
                // factors shared by both sides are cancelled before expanding
                LaurentPoly num = diff.numerator();
                r.status = Status::fail;
                r.k = e.report_k;
                r.witness = detail::truncate(e.label + ": " + (num * Monomial{BigRat(1), -num.min_exponents()}).to_string());
                return;
            }
        }
        r.status = Status::pass;
    });
}

/// Randomized check in F_p: each trial evaluates all equations at one point
/// drawn from a generator seeded by (seed, id, n, trial); a pole discards the
/// whole point.
inline VerifyResult verify_modular(const Spec& spec, std::int64_t n, const ModularConfig& cfg = {},
                                   const Catalog& cat = builtin_catalog())
{
    return detail::timed({spec.id, n, std::nullopt, Mode::modular}, [&](VerifyResult& r) {
        if (!is_prime_u64(cfg.prime) || cfg.prime < 3)
            throw Error("modulus " + std::to_string(cfg.prime) + " is not an odd prime");
        auto eqs = equations(spec, n, cat);
        for (int trial = 0; trial < cfg.trials; ++trial) {
            auto rng = point_generator(cfg, spec.id, n, trial);
            bool done = false;
            for (int attempt = 0; attempt <= cfg.max_pole_retries && !done; ++attempt) {
                FieldPoint pt = sample_point(rng, cfg.prime);
                try {
                    Evaluator ev{ModularOps(pt)};
                    for (const auto& e : eqs) {
                        Scope s{e.n, e.k, {}};
                        Scope ls = s;
                        if (e.transport)
                            ls.images = *e.transport;
                        std::uint64_t l = ev(e.lhs, ls);
                        std::uint64_t rr = ev(e.rhs, s);
                        if (l != rr) {
                            r.status = Status::fail;
                            r.k = e.report_k;
                            r.witness = e.label + ": " + pt.to_string() + " lhs=" + std::to_string(l) +
                                        " rhs=" + std::to_string(rr);
                            return;
                        }
                    }
                    done = true;
                } catch (const Pole&) {
                } catch (const CoefficientDenominatorDivisibleByP&) {
                }
            }
            if (!done) {
                r.status = Status::error;
                r.witness = "PoleRetriesExhausted: trial " + std::to_string(trial) + " hit a pole " +
                            std::to_string(cfg.max_pole_retries + 1) + " times";
                return;
            }
        }
        r.status = Status::pass;
    });
}

inline VerifyResult verify(const Spec& spec, std::int64_t n, Mode mode, const ModularConfig& cfg = {},
                           const Catalog& cat = builtin_catalog())
{
    return mode == Mode::symbolic ? verify_symbolic(spec, n, cat) : verify_modular(spec, n, cfg, cat);
}

namespace detail {

inline VerifyResult check_kind(const Spec& spec, SpecKind kind, std::int64_t n, Mode mode, const ModularConfig& cfg,
                               const Catalog& cat)
{
    if (spec.kind != kind)
        throw Error("spec " + spec.id + " is a " + kind_name(spec.kind) + ", expected " + kind_name(kind));
    return verify(spec, n, mode, cfg, cat);
}

} // namespace detail

/// Pairing for every k, the boundary relation when flagged, and the
/// telescoped and direct sums against the target.
inline VerifyResult check_certificate(const CertificateSpec& cert, std::int64_t n, Mode mode = Mode::symbolic,
                                      const ModularConfig& cfg = {}, const Catalog& cat = builtin_catalog())
{
    return detail::check_kind(cert, SpecKind::certificate, n, mode, cfg, cat);
}

/// Three-term relation for every 0 <= k <= n and its summed form.
inline VerifyResult check_relation(const RelationSpec& rel, std::int64_t n, Mode mode = Mode::symbolic,
                                   const ModularConfig& cfg = {}, const Catalog& cat = builtin_catalog())
{
    return detail::check_kind(rel, SpecKind::relation, n, mode, cfg, cat);
}

/// The identity's right side satisfies the summed relation.
inline VerifyResult check_induction(const Spec& ind, std::int64_t n, Mode mode = Mode::symbolic,
                                    const ModularConfig& cfg = {}, const Catalog& cat = builtin_catalog())
{
    return detail::check_kind(ind, SpecKind::induction, n, mode, cfg, cat);
}

/// Both sides of `from` mapped through the substitution equal those of `to`.
inline VerifyResult check_transport(const Spec& tr, std::int64_t n, Mode mode = Mode::symbolic,
                                    const ModularConfig& cfg = {}, const Catalog& cat = builtin_catalog())
{
    return detail::check_kind(tr, SpecKind::transport, n, mode, cfg, cat);
}

struct Selection {
    std::string id;
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    Mode mode = Mode::symbolic;
};

inline bool aggregate_pass(const std::vector<VerifyResult>& results)
{
    return std::none_of(results.begin(), results.end(),
                        [](const VerifyResult& r) { return r.status == Status::fail || r.status == Status::error; });
}

/// Runs every (id, n, mode) of the selection on `jobs` threads (0: hardware
/// concurrency). `on_result` is called from the calling thread in task order
/// as results become available. The returned list is sorted by result_less.
inline std::vector<VerifyResult> run_suite(const Catalog& cat, const std::vector<Selection>& selection,
                                           const ModularConfig& cfg = {}, unsigned jobs = 0,
                                           const std::function<void(const VerifyResult&)>& on_result = {})
{
    struct Task {
        const Spec* spec;
        std::int64_t n;
        Mode mode;
    };
    std::vector<Task> tasks;
    for (const auto& sel : selection) {
        const Spec& spec = cat.at(sel.id);
        for (std::int64_t n = sel.lo; n <= sel.hi; ++n)
            tasks.push_back({&spec, n, sel.mode});
    }
    std::sort(tasks.begin(), tasks.end(), [](const Task& x, const Task& y) {
        return std::make_tuple(std::cref(x.spec->id), x.n, std::string(mode_name(x.mode))) <
               std::make_tuple(std::cref(y.spec->id), y.n, std::string(mode_name(y.mode)));
    });

    std::vector<std::optional<VerifyResult>> slots(tasks.size());
    std::mutex mu;
    std::condition_variable cv;
    std::atomic<std::size_t> next{0};

    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= tasks.size())
                return;
            VerifyResult r = verify(*tasks[i].spec, tasks[i].n, tasks[i].mode, cfg, cat);
            {
                std::lock_guard lock(mu);
                slots[i] = std::move(r);
            }
            cv.notify_all();
        }
    };

    if (jobs == 0)
        jobs = std::max(1u, std::thread::hardware_concurrency());
    jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(tasks.size(), 1)));
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j)
        pool.emplace_back(worker);

    for (std::size_t i = 0; i < tasks.size(); ++i) {
        std::unique_lock lock(mu);
        cv.wait(lock, [&] { return slots[i].has_value(); });
        if (on_result) {
            VerifyResult r = *slots[i];
            lock.unlock();
            on_result(r);
        }
    }
    for (auto& t : pool)
        t.join();

    std::vector<VerifyResult> out;
    out.reserve(slots.size());
    for (auto& s : slots)
        out.push_back(std::move(*s));
    std::stable_sort(out.begin(), out.end(), result_less);
    return out;
}

} // namespace qverify

#endif
