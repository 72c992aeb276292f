#include <gtest/gtest.h>

#include <regex>
#include <sstream>

#include <json.hpp>

#include "cli_runner.hpp"
#include "mutants.hpp"

using namespace qtest;
using nlohmann::json;

namespace {

std::vector<std::string> lines_of(const std::string& s)
{
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string line; std::getline(in, line);)
        if (!line.empty())
            out.push_back(line);
    return out;
}

} // namespace

TEST(CliList, Text)
{
    CliRun r = run_cli("list");
    ASSERT_EQ(r.code, 0);
    auto lines = lines_of(r.out);
    EXPECT_EQ(lines.size(), 28u);
    EXPECT_TRUE(std::regex_search(r.out, std::regex(R"(^A1 .* n>=0 )")));
    EXPECT_NE(r.out.find("(a,b,-q;q)_n (ab;q^2)_n"), std::string::npos);
}

TEST(CliList, Json)
{
    CliRun r = run_cli("list --format json");
    ASSERT_EQ(r.code, 0);
    json j = json::parse(r.out);
    ASSERT_TRUE(j.is_array());
    EXPECT_EQ(j.size(), 28u);
    EXPECT_EQ(j[0]["id"], "A1");
    EXPECT_EQ(j[0]["kind"], "identity");
    EXPECT_EQ(j[0]["n_min"], 0);
}

TEST(CliVerify, HeadlineIdentity)
{
    CliRun r = run_cli("verify --id A1 --n 0..8 --mode symbolic");
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("A1 n=8 symbolic pass"), std::string::npos);
    EXPECT_NE(r.out.find("aggregate: pass (9 pass, 0 fail, 0 error)"), std::string::npos);
}

TEST(CliVerify, AllJson)
{
    CliRun r = run_cli("verify --all --n 0..6 --mode symbolic --format json");
    ASSERT_EQ(r.code, 0);
    json j = json::parse(r.out);
    EXPECT_EQ(j["version"], 1);
    EXPECT_EQ(j["seed"], 42);
    EXPECT_EQ(j["prime"], "2305843009213693951");
    EXPECT_EQ(j["aggregate"], "pass");
    EXPECT_GT(j["results"].size(), 100u);
    for (const auto& res : j["results"]) {
        EXPECT_EQ(res["status"], "pass") << res.dump();
        EXPECT_TRUE(res["ms"].is_null());
        EXPECT_TRUE(res["witness"].is_null());
    }
}

TEST(CliVerify, UsageErrors)
{
    CliRun r = run_cli("verify --id A1 --n 0..-1", true);
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.out.find("range"), std::string::npos);
    EXPECT_EQ(run_cli("verify --id NOPE --n 0..2").code, 2);
    EXPECT_EQ(run_cli("verify --id A1 --all").code, 2);
    EXPECT_EQ(run_cli("verify --id A1 --n zero").code, 2);
    EXPECT_EQ(run_cli("verify --id C2 --n 0..3").code, 2);
    EXPECT_EQ(run_cli("verify --id A1 --mode fast").code, 2);
    EXPECT_EQ(run_cli("verify --id A1 --trials 0").code, 2);
    EXPECT_EQ(run_cli("frobnicate").code, 2);
}

TEST(CliVerify, PrimeValidation)
{
    EXPECT_EQ(run_cli("verify --id A1 --n 2 --mode modular --prime 7").code, 2);
    EXPECT_EQ(run_cli("verify --id A1 --n 2 --mode modular --prime 4294967296").code, 2);
    EXPECT_EQ(run_cli("verify --id A1 --n 2 --mode modular --prime 2147483647").code, 2);
    EXPECT_EQ(run_cli("verify --id A1 --n 2 --mode modular --prime 2147483659").code, 0);
}

TEST(CliCertify, Examples)
{
    EXPECT_EQ(run_cli("certify --id CERT1 --n 0..6").code, 0);
    EXPECT_EQ(run_cli("certify --id REL1 --n 2..8").code, 0);
    EXPECT_EQ(run_cli("certify --id TR2 --n 0..3 --mode modular").code, 0);
    EXPECT_EQ(run_cli("certify --id CERT1 --n -1..2").code, 2);
    EXPECT_EQ(run_cli("certify --id A1 --n 0..2").code, 2);
}

TEST(CliParse, WellFormedFile)
{
    auto path = write_temp("good.dsl", "# one identity\nid GEO : sum(j, 0, n; q^j) == (1 - q^(n+1))/(1 - q);\n");
    CliRun r = run_cli("parse " + path.string());
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("GEO identity n>=0"), std::string::npos);
    EXPECT_NE(r.out.find("1 specs"), std::string::npos);
}

TEST(CliParse, NonAffineExponent)
{
    auto path = write_temp("bad.dsl", "id X :\n  q^(n*n) == 1;\n");
    CliRun r = run_cli("parse " + path.string(), true);
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.out.find(":2:7: NonAffineExponent"), std::string::npos) << r.out;
    EXPECT_EQ(run_cli("parse /nonexistent/file.dsl").code, 2);
}

TEST(CliParse, BuiltinSourceRoundTrips)
{
    CliRun dsl = run_cli("list --format dsl");
    ASSERT_EQ(dsl.code, 0);
    auto path = write_temp("builtin.dsl", dsl.out);
    CliRun r = run_cli("parse " + path.string());
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("28 specs"), std::string::npos);
}

TEST(CliCatalog, ExtraFileAndMutantFailure)
{
    Spec bad = mutate(lookup("A1"), Mutation::sign, 0)->spec;
    bad.id = "A1M";
    auto path = write_temp("mutant.dsl", serialize(bad) + "\n");
    CliRun r = run_cli("verify --id A1M --n 1..3 --catalog " + path.string());
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("A1M n=1 symbolic fail"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("  witness: identity: "), std::string::npos);
    EXPECT_EQ(run_cli("verify --id A1M --n 1..3 --mode modular --catalog " + path.string()).code, 1);

    auto dup = write_temp("dup.dsl", "id A1 : 1 == 1;\n");
    EXPECT_EQ(run_cli("verify --id A1 --n 0 --catalog " + dup.string()).code, 2);
}

TEST(CliReport, TextAndJsonAgree)
{
    Spec bad = mutate(lookup("A2"), Mutation::exponent, 0)->spec;
    bad.id = "A2M";
    auto path = write_temp("agree.dsl", serialize(bad) + "\n");
    std::string args = "verify --id A2M --n 0..4 --catalog " + path.string();
    CliRun text = run_cli(args);
    CliRun js = run_cli(args + " --format json");
    EXPECT_EQ(text.code, js.code);
    json j = json::parse(js.out);
    std::string from_json;
    for (const auto& res : j["results"])
        from_json += res["id"].get<std::string>() + " n=" + std::to_string(res["n"].get<int>()) + " " +
                     res["status"].get<std::string>() + "\n";
    std::string from_text;
    std::regex line(R"(^(\S+) n=(\d+)(?: k=\d+)? \S+ (pass|fail|error))");
    for (const auto& l : lines_of(text.out)) {
        std::smatch m;
        if (std::regex_search(l, m, line))
            from_text += m[1].str() + " n=" + m[2].str() + " " + m[3].str() + "\n";
    }
    EXPECT_EQ(from_text, from_json);
}

TEST(CliReport, JobsDoNotChangeTheReport)
{
    CliRun one = run_cli("verify --all --n 0..4 --format json --jobs 1");
    CliRun many = run_cli("verify --all --n 0..4 --format json --jobs 8");
    EXPECT_EQ(one.code, 0);
    EXPECT_EQ(one.out, many.out);
    CliRun mod1 = run_cli("verify --id A1 --n 10..14 --mode modular --format json --jobs 1");
    CliRun mod8 = run_cli("verify --id A1 --n 10..14 --mode modular --format json --jobs 8");
    EXPECT_EQ(mod1.out, mod8.out);
}

TEST(CliReport, TimingFlag)
{
    json j = json::parse(run_cli("verify --id A1 --n 1 --format json --timing").out);
    EXPECT_TRUE(j["results"][0]["ms"].is_number_integer());
}

TEST(CliCatalog, SampleCatalog)
{
    std::string file = std::string(QVERIFY_SAMPLES) + "/user_catalog.dsl";
    CliRun r = run_cli("parse " + file);
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("4 specs"), std::string::npos) << r.out;
    for (const char* id : {"GEO", "QCV", "SPLIT"})
        EXPECT_EQ(run_cli(std::string("verify --id ") + id + " --n 0..6 --catalog " + file).code, 0) << id;
    EXPECT_EQ(run_cli("certify --id MIRROR --n 0..4 --catalog " + file).code, 0);
}
