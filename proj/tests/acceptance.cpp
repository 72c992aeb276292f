// Acceptance run: one line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "cli_runner.hpp"
#include "mutants.hpp"
#include "properties.hpp"

using namespace qtest;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what)
    {
        if (ok)
            return;
        if (pass)
            detail = what;
        pass = false;
    }
};

/// Runs `sel` and records the first non-passing result.
std::size_t run_all(Outcome& o, const std::vector<Selection>& sel, const ModularConfig& cfg = {},
                    const Catalog& cat = builtin_catalog())
{
    auto results = run_suite(cat, sel, cfg);
    for (const auto& r : results) {
        std::string what = r.id + " n=" + std::to_string(r.n) + " " + mode_name(r.mode) + " " +
                           status_name(r.status) + (r.witness ? ": " + *r.witness : "");
        o.require(r.status == Status::pass, what.substr(0, 300));
    }
    return results.size();
}

std::vector<Selection> each(std::initializer_list<const char*> ids, std::int64_t lo, std::int64_t hi,
                            Mode mode = Mode::symbolic)
{
    std::vector<Selection> out;
    for (const char* id : ids)
        out.push_back({id, std::max(lo, lookup(id).n_min), hi, mode});
    return out;
}

Outcome headline()
{
    Outcome o;
    auto t0 = Clock::now();
    for (const char* id : {"A1", "A2", "T3"}) {
        CliRun r = run_cli(std::string("verify --id ") + id + " --n 0..8 --mode symbolic");
        o.require(r.code == 0, std::string(id) + " exit " + std::to_string(r.code));
        o.require(r.out.find(std::string(id) + " n=8 symbolic pass") != std::string::npos, std::string(id) + " n=8 missing");
    }
    double s = seconds_since(t0);
    o.require(s < 120, "took " + std::to_string(s) + " s");
    o.detail = o.pass ? "A1, A2, T3 n=0..8 in " + std::to_string(s) + " s" : o.detail;
    return o;
}

Outcome lemmas_and_variants()
{
    Outcome o;
    std::size_t k_checks = 0;
    std::size_t count =
        run_all(o, each({"L1", "L2", "V1", "V2", "V3", "V4", "V5", "V6", "D1", "D2", "S1", "S2", "S3", "S4"}, 0, 6));
    for (const char* id : {"S1", "S2", "S3", "S4"})
        for (std::int64_t n = 0; n <= 6; ++n)
            k_checks += equations(lookup(id), n).size();
    o.require(k_checks == 4 * 28, "family checks " + std::to_string(k_checks));
    if (o.pass)
        o.detail = std::to_string(count) + " results, " + std::to_string(k_checks) + " family (n, k) pairs";
    return o;
}

Outcome machinery()
{
    Outcome o;
    std::size_t count = run_all(o, each({"CERT1", "CERT2"}, 0, 6));
    count += run_all(o, each({"REL1", "REL2", "IND1", "IND2"}, 2, 8));
    o.require(equations(lookup("CERT1"), 6).back().label == "sum", "certificate parts");
    o.require(equations(lookup("REL1"), 8).back().label == "summed", "relation summed form");
    if (o.pass)
        o.detail = std::to_string(count) + " results";
    return o;
}

Outcome transports()
{
    Outcome o;
    std::size_t count = run_all(o, each({"TR1", "TR2", "TR3"}, 0, 5));
    if (o.pass)
        o.detail = std::to_string(count) + " results";
    return o;
}

Outcome catalan()
{
    Outcome o;
    auto t0 = Clock::now();
    run_all(o, each({"C1"}, 0, 100));
    double s = seconds_since(t0);
    o.require(s < 1.0, "C1 took " + std::to_string(s) + " s");
    run_all(o, each({"C2"}, 1, 12));
    if (o.pass)
        o.detail = "C1 n=0..100 in " + std::to_string(s) + " s, C2 n=1..12";
    return o;
}

Outcome modular_scale()
{
    Outcome o;
    ModularConfig cfg;
    cfg.trials = 20;
    cfg.seed = 42;
    cfg.prime = mersenne61;
    std::vector<Selection> sel;
    for (const char* id : {"A1", "A2", "T3", "V6"})
        for (std::int64_t n : {20, 50, 100, 200})
            sel.push_back({id, n, n, Mode::modular});
    auto t0 = Clock::now();
    std::size_t count = run_all(o, sel, cfg);
    double s = seconds_since(t0);
    o.require(count == 16, "result count");
    o.require(s < 30, "took " + std::to_string(s) + " s");
    if (o.pass)
        o.detail = "16 runs x 20 trials in " + std::to_string(s) + " s";
    return o;
}

Outcome oracle_equivalence()
{
    Outcome o;
    std::vector<Selection> sym, mod;
    for (const auto& s : builtin_catalog().specs) {
        sym.push_back({s.id, s.n_min, 6, Mode::symbolic});
        mod.push_back({s.id, s.n_min, 6, Mode::modular});
    }
    auto rs = run_suite(builtin_catalog(), sym), rm = run_suite(builtin_catalog(), mod);
    o.require(rs.size() == rm.size(), "result counts differ");
    for (std::size_t i = 0; i < std::min(rs.size(), rm.size()); ++i)
        o.require(rs[i].id == rm[i].id && rs[i].n == rm[i].n && rs[i].status == rm[i].status,
                  rs[i].id + " n=" + std::to_string(rs[i].n) + " modes disagree");

    // modular at n = 10 and 30, symbolic at n = 10
    auto mutants = standard_mutants();
    Catalog cat = with_mutants(mutants);
    std::size_t caught = 0;
    for (const auto& m : mutants) {
        bool sym_fail = verify(m.spec, 10, Mode::symbolic, {}, cat).status == Status::fail;
        bool mod_fail = verify(m.spec, 10, Mode::modular, {}, cat).status == Status::fail &&
                        verify(m.spec, 30, Mode::modular, {}, cat).status == Status::fail;
        o.require(sym_fail == mod_fail, m.spec.id + " modes disagree on the mutant");
        caught += sym_fail && mod_fail;
    }
    o.require(caught >= 10, "only " + std::to_string(caught) + " mutants caught");
    if (o.pass)
        o.detail = std::to_string(rs.size()) + " spec/n pairs agree; " + std::to_string(caught) + "/" +
                   std::to_string(mutants.size()) + " mutants fail in both modes";
    return o;
}

Outcome property_suites()
{
    Outcome o;
    std::ostringstream os;
    for (auto suite : {ring_laws, evaluation_homomorphism, substitution_homomorphism, pochhammer_recurrence,
                       pochhammer_splitting, rf_equal_equivalence}) {
        Tally t = suite(property_seed);
        Tally again = suite(property_seed);
        o.require(t.ok(), t.summary());
        o.require(t.cases == again.cases && t.failures == again.failures, t.name + " not deterministic");
        os << (os.tellp() ? ", " : "") << t.name << " " << t.cases;
    }
    if (o.pass)
        o.detail = os.str();
    return o;
}

Outcome dsl_round_trip()
{
    Outcome o;
    const Catalog& cat = builtin_catalog();
    Catalog again = parse_catalog(serialize(cat));
    o.require(same_structure(cat, again), "builtin catalog does not round-trip");
    struct Bad {
        const char* text;
        const char* diagnostic;
    };
    for (Bad b : {Bad{"id X :\n  q^(n*n) == 1;\n", ":2:7: NonAffineExponent"},
                  Bad{"id X : poch(a;;n) == 1;\n", ":1:15: SyntaxError"},
                  Bad{"id X : c == 1;\n", ":1:8: UnknownSymbol"}}) {
        auto path = write_temp("acceptance_bad.dsl", b.text);
        CliRun r = run_cli("parse " + path.string(), true);
        o.require(r.code == 2, std::string("exit ") + std::to_string(r.code) + " for " + b.text);
        o.require(r.out.find(b.diagnostic) != std::string::npos, "missing diagnostic " + std::string(b.diagnostic));
    }
    if (o.pass)
        o.detail = std::to_string(cat.size()) + " specs round-trip; malformed inputs exit 2 with positions";
    return o;
}

Outcome determinism()
{
    Outcome o;
    CliRun one = run_cli("verify --all --format json --jobs 1");
    CliRun many = run_cli("verify --all --format json --jobs 8");
    o.require(one.code == 0 && many.code == 0, "default suite did not pass");
    o.require(!one.out.empty() && one.out == many.out, "reports differ");
    if (o.pass)
        o.detail = std::to_string(one.out.size()) + " identical bytes";
    return o;
}

} // namespace

int main()
{
    struct Criterion {
        int number;
        const char* name;
        Outcome (*run)();
    };
    const Criterion criteria[] = {
        {1, "headline identities", headline},
        {2, "lemmas and variants", lemmas_and_variants},
        {3, "certificates, relations, induction", machinery},
        {4, "transports", transports},
        {5, "catalan corollaries", catalan},
        {6, "modular scale", modular_scale},
        {7, "oracle equivalence and mutants", oracle_equivalence},
        {8, "algebra property suites", property_suites},
        {9, "dsl round-trip and diagnostics", dsl_round_trip},
        {10, "jobs determinism", determinism},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        Outcome o;
        auto t0 = Clock::now();
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        failed += !o.pass;
        std::cout << "criterion " << c.number << " [" << (o.pass ? "PASS" : "FAIL") << "] " << c.name << ": "
                  << o.detail << " (" << std::fixed << std::setprecision(1) << seconds_since(t0) << " s)" << std::endl;
    }
    std::cout << (failed ? "acceptance: FAIL" : "acceptance: PASS") << std::endl;
    return failed ? 1 : 0;
}
