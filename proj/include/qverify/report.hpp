#ifndef QVERIFY_REPORT_HPP
#define QVERIFY_REPORT_HPP

#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "verifier.hpp"

namespace qverify {

struct ReportOptions {
    bool timing = false;
};

inline nlohmann::ordered_json result_json(const VerifyResult& r, const ReportOptions& opt = {})
{
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["n"] = r.n;
    j["k"] = r.k ? nlohmann::ordered_json(*r.k) : nlohmann::ordered_json(nullptr);
    j["mode"] = mode_name(r.mode);
    j["status"] = status_name(r.status);
    j["witness"] = r.witness ? nlohmann::ordered_json(*r.witness) : nlohmann::ordered_json(nullptr);
    j["ms"] = opt.timing ? nlohmann::ordered_json(static_cast<std::int64_t>(r.ms + 0.5)) : nlohmann::ordered_json(nullptr);
    return j;
}

inline nlohmann::ordered_json report_json(const std::vector<VerifyResult>& results, const ModularConfig& cfg,
                                          const ReportOptions& opt = {})
{
    nlohmann::ordered_json j;
    j["version"] = 1;
    j["seed"] = cfg.seed;
    j["prime"] = std::to_string(cfg.prime);
    j["results"] = nlohmann::ordered_json::array();
    for (const auto& r : results)
        j["results"].push_back(result_json(r, opt));
    j["aggregate"] = aggregate_pass(results) ? "pass" : "fail";
    return j;
}

/// One line per result, e.g. "A1 n=3 symbolic pass".
inline std::string result_line(const VerifyResult& r, const ReportOptions& opt = {})
{
    std::string s = r.id + " n=" + std::to_string(r.n);
    if (r.k)
        s += " k=" + std::to_string(*r.k);
    s += std::string(" ") + mode_name(r.mode) + " " + status_name(r.status);
    if (opt.timing) {
        char buf[32];
        std::snprintf(buf, sizeof buf, " %.1fms", r.ms);
        s += buf;
    }
    if (r.witness)
        s += "\n  witness: " + *r.witness;
    return s;
}

inline std::string aggregate_line(const std::vector<VerifyResult>& results)
{
    std::size_t pass = 0, fail = 0, err = 0;
    for (const auto& r : results) {
        pass += r.status == Status::pass;
        fail += r.status == Status::fail;
        err += r.status == Status::error;
    }
    return std::string("aggregate: ") + (aggregate_pass(results) ? "pass" : "fail") + " (" + std::to_string(pass) +
           " pass, " + std::to_string(fail) + " fail, " + std::to_string(err) + " error)";
}

inline nlohmann::ordered_json spec_json(const Spec& s)
{
    nlohmann::ordered_json j;
    j["id"] = s.id;
    j["kind"] = kind_name(s.kind);
    j["n_min"] = s.n_min;
    j["notes"] = s.notes;
    return j;
}

} // namespace qverify

#endif
