// qverify: command-line front end for the identity catalog and verifier.
//
// Exit codes: 0 all pass, 1 some verification failed, 2 usage or parse
// error, 3 internal error.

#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

#include <CLI11.hpp>

#include "qverify/qverify.hpp"

namespace {

using namespace qverify;

constexpr int exit_pass = 0;
constexpr int exit_fail = 1;
constexpr int exit_usage = 2;
constexpr int exit_internal = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Range {
    std::int64_t lo = 0;
    std::int64_t hi = 0;
};

Range parse_range(const std::string& s)
{
    static const std::regex re(R"(^\s*(-?\d+)\s*(?:\.\.\s*(-?\d+))?\s*$)");
    std::smatch m;
    if (!std::regex_match(s, m, re))
        throw UsageError("--n expects LO..HI, got '" + s + "'");
    Range r;
    r.lo = std::stoll(m[1].str());
    r.hi = m[2].matched ? std::stoll(m[2].str()) : r.lo;
    return r;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw UsageError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Catalog load_catalog(const std::string& extra)
{
    Catalog cat = builtin_catalog();
    if (extra.empty())
        return cat;
    Catalog more;
    try {
        more = parse_catalog(read_file(extra), &cat);
    } catch (const DslError& e) {
        throw UsageError(extra + ":" + e.what());
    }
    for (auto& s : more.specs) {
        if (cat.find(s.id))
            throw UsageError(extra + ": spec id '" + s.id + "' already exists in the built-in catalog");
        cat.specs.push_back(std::move(s));
    }
    return cat;
}

struct RunFlags {
    std::string id;
    bool all = false;
    std::string n;
    std::string mode = "symbolic";
    int trials = 20;
    std::uint64_t seed = 42;
    std::string prime = std::to_string(mersenne61);
    std::string format = "text";
    std::string catalog;
    unsigned jobs = 0;
    bool timing = false;
};

void add_run_flags(CLI::App* cmd, RunFlags& f, bool allow_all)
{
    if (allow_all) {
        auto* id = cmd->add_option("--id", f.id, "spec id");
        auto* all = cmd->add_flag("--all", f.all, "every spec of the catalog");
        id->excludes(all);
        all->excludes(id);
    } else {
        cmd->add_option("--id", f.id, "spec id")->required();
    }
    cmd->add_option("--n", f.n, "range LO..HI (default n_min..6)");
    cmd->add_option("--mode", f.mode, "symbolic or modular")->check(CLI::IsMember({"symbolic", "modular"}));
    cmd->add_option("--trials", f.trials, "modular trials per (id, n)")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", f.seed, "modular seed");
    cmd->add_option("--prime", f.prime, "modular prime, odd, 2^31 <= p < 2^63");
    cmd->add_option("--format", f.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--catalog", f.catalog, "extra DSL catalog file");
    cmd->add_option("--jobs", f.jobs, "worker threads (0: one per core)");
    cmd->add_flag("--timing", f.timing, "report elapsed milliseconds");
}

ModularConfig modular_config(const RunFlags& f)
{
    ModularConfig cfg;
    cfg.trials = f.trials;
    cfg.seed = f.seed;
    std::uint64_t p = 0;
    try {
        std::size_t used = 0;
        p = std::stoull(f.prime, &used);
        if (used != f.prime.size() || f.prime.front() == '-')
            throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw UsageError("--prime expects a decimal integer, got '" + f.prime + "'");
    }
    if (p < (std::uint64_t(1) << 31) || p >= (std::uint64_t(1) << 63) || !is_prime_u64(p))
        throw UsageError("--prime must be an odd prime with 2^31 <= p < 2^63");
    cfg.prime = p;
    return cfg;
}

std::vector<Selection> selections(const Catalog& cat, const RunFlags& f, bool certify)
{
    Mode mode = f.mode == "modular" ? Mode::modular : Mode::symbolic;
    std::optional<Range> range;
    if (!f.n.empty())
        range = parse_range(f.n);
    std::vector<Selection> out;
    if (f.all) {
        for (const auto& s : cat.specs) {
            Range r = range.value_or(Range{s.n_min, 6});
            r.lo = std::max(r.lo, s.n_min);
            if (r.lo <= r.hi)
                out.push_back({s.id, r.lo, r.hi, mode});
        }
        return out;
    }
    if (f.id.empty())
        throw UsageError("one of --id or --all is required");
    const Spec* s = cat.find(f.id);
    if (!s)
        throw UsageError("unknown spec id '" + f.id + "'");
    if (certify && s->is_identity_like())
        throw UsageError("certify expects a cert, rel, ind or tr spec; " + f.id + " is a " + kind_name(s->kind));
    Range r = range.value_or(Range{s->n_min, std::max<std::int64_t>(s->n_min, 6)});
    if (r.hi < r.lo)
        throw UsageError("empty range " + std::to_string(r.lo) + ".." + std::to_string(r.hi));
    if (r.lo < s->n_min)
        throw UsageError(f.id + " is defined for n >= " + std::to_string(s->n_min) + ", range starts at " +
                         std::to_string(r.lo));
    out.push_back({s->id, r.lo, r.hi, mode});
    return out;
}

int cmd_run(const RunFlags& f, bool certify)
{
    Catalog cat = load_catalog(f.catalog);
    ModularConfig cfg = modular_config(f);
    auto sel = selections(cat, f, certify);
    ReportOptions opt{f.timing};
    bool text = f.format == "text";
    auto results = run_suite(cat, sel, cfg, f.jobs, [&](const VerifyResult& r) {
        if (text)
            std::cout << result_line(r, opt) << std::endl;
    });
    if (text)
        std::cout << aggregate_line(results) << "\n";
    else
        std::cout << report_json(results, cfg, opt).dump() << "\n";
    return aggregate_pass(results) ? exit_pass : exit_fail;
}

int cmd_list(const std::string& format)
{
    const Catalog& cat = builtin_catalog();
    if (format == "json") {
        auto j = nlohmann::ordered_json::array();
        for (const auto& s : cat.specs)
            j.push_back(spec_json(s));
        std::cout << j.dump(2) << "\n";
    } else if (format == "dsl") {
        std::cout << serialize(cat);
    } else {
        for (const auto& s : cat.specs) {
            std::string line = s.id;
            line.resize(std::max<std::size_t>(line.size() + 1, 7), ' ');
            std::string kind = kind_name(s.kind);
            kind.resize(12, ' ');
            std::cout << line << kind << "n>=" << s.n_min << "  " << s.notes << "\n";
        }
    }
    return exit_pass;
}

int cmd_parse(const std::string& path)
{
    std::string text = read_file(path);
    Catalog cat;
    try {
        cat = parse_catalog(text, &builtin_catalog());
    } catch (const DslError& e) {
        std::cerr << path << ":" << e.what() << "\n";
        return exit_usage;
    }
    for (const auto& s : cat.specs)
        std::cout << s.id << " " << kind_name(s.kind) << " n>=" << s.n_min << "\n";
    std::cout << cat.size() << " specs\n";
    return exit_pass;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Verify terminating q-series identities symbolically or modulo a prime."};
    app.require_subcommand(1);

    std::string list_format = "text";
    auto* list = app.add_subcommand("list", "list the built-in catalog");
    list->add_option("--format", list_format, "text, json or dsl")->check(CLI::IsMember({"text", "json", "dsl"}));

    RunFlags vflags;
    auto* verify = app.add_subcommand("verify", "verify identities for a range of n");
    add_run_flags(verify, vflags, true);

    RunFlags cflags;
    auto* certify = app.add_subcommand("certify", "check a certificate, relation, induction step or transport");
    add_run_flags(certify, cflags, false);

    std::string parse_path;
    auto* parse = app.add_subcommand("parse", "parse and validate a DSL catalog file");
    parse->add_option("file", parse_path, "DSL file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*list)
            return cmd_list(list_format);
        if (*verify)
            return cmd_run(vflags, false);
        if (*certify)
            return cmd_run(cflags, true);
        return cmd_parse(parse_path);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return exit_internal;
    }
}
