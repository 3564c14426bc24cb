#include "specht/cli.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace specht;
using specht::cli::json;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "specht-forms");
    std::vector<char*> argv;
    for (auto& a : args) argv.push_back(a.data());
    std::ostringstream out, err;
    int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, EnumerateJson) {
    auto r = run({"enumerate", "--n", "6", "--k", "2", "--p", "2"});
    ASSERT_EQ(r.code, 0);
    auto j = json::parse(r.out);
    EXPECT_EQ(j["count"], 4);
    ASSERT_EQ(j["classes"].size(), 4u);
    for (auto& c : j["classes"]) {
        EXPECT_TRUE(c.contains("hnf"));
        EXPECT_TRUE(c["dual_partner"].is_number());
        EXPECT_EQ(c["loewy"].size(), 4u);
    }
}

TEST(Cli, EnumerateDeterministic) {
    std::vector<std::string> args{"enumerate", "--n", "5", "--k", "2", "--p", "2"};
    auto a = run(args), b = run(args);
    EXPECT_EQ(a.out, b.out);
    auto c = run({"enumerate", "--n", "5", "--k", "2", "--p", "2", "--seed", "99"});
    auto ja = json::parse(a.out), jc = json::parse(c.out);
    EXPECT_EQ(ja["classes"], jc["classes"]);
    EXPECT_EQ(jc["seed"], 99);
}

TEST(Cli, EnumerateText) {
    auto r = run({"enumerate", "--n", "4", "--k", "1", "--p", "2", "--format", "text"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("classes=3"), std::string::npos);
}

TEST(Cli, ExitCodes) {
    auto f = run({"enumerate", "--n", "13", "--k", "3", "--p", "2"});
    EXPECT_EQ(f.code, 3);
    EXPECT_EQ(json::parse(f.out)["error"]["kind"], "feasibility");
    EXPECT_EQ(run({"enumerate", "--n", "6", "--k", "2", "--p", "4"}).code, 2);
    EXPECT_EQ(run({"enumerate", "--n", "6"}).code, 2);
    EXPECT_EQ(run({"verify", "nonsense"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
}

TEST(Cli, VerifyCraig) {
    auto r = run({"verify", "craig", "--n", "8"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("[PASS]"), std::string::npos);
    EXPECT_EQ(r.out.find("[FAIL]"), std::string::npos);
}

TEST(Cli, CensusEmptyAndSmall) {
    auto e = run({"census", "--n-min", "9", "--n-max", "8"});
    EXPECT_EQ(e.code, 0);
    EXPECT_TRUE(json::parse(e.out)["census"].empty());
    auto r = run({"census", "--n-min", "5", "--n-max", "6", "--k-max", "2"});
    ASSERT_EQ(r.code, 0);
    auto j = json::parse(r.out)["census"];
    ASSERT_EQ(j.size(), 4u);
    for (auto& rec : j) EXPECT_EQ(rec["status"], "MATCH");
}
