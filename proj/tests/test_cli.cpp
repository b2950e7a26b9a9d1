#include "parabolic/cli.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace parabolic;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = run_command(args, out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json run_json(std::vector<std::string> args, int expected_code)
{
    args.push_back("--format");
    args.push_back("json");
    const Outcome r = run(args);
    EXPECT_EQ(r.code, expected_code) << r.err;
    return nlohmann::json::parse(r.out);
}

} // namespace

TEST(Cli, ExitCodes)
{
    EXPECT_EQ(run({"verify", "counit", "--degree", "3"}).code, kExitPass);
    EXPECT_EQ(run({"verify", "cocycle", "--b", "1", "--degree", "3"}).code, kExitCheckFailed);
    EXPECT_EQ(run({"eval", "--expr", "E14"}).code, kExitParseError);
    EXPECT_EQ(run({"eval", "--expr", "E12 +"}).code, kExitParseError);
    EXPECT_EQ(run({"eval", "--expr", "exp(E11)"}).code, kExitAlgebraError);
    EXPECT_EQ(run({}).code, kExitUsage);
    EXPECT_EQ(run({"verify", "nonsense"}).code, kExitUsage);
    EXPECT_EQ(run({"verify", "counit", "--degree", "0"}).code, kExitUsage);
    EXPECT_EQ(run({"rmatrix", "--check", "bogus"}).code, kExitUsage);
}

TEST(Cli, ReportSchema)
{
    const nlohmann::json j = run_json({"verify", "counit", "--degree", "3"}, kExitPass);
    ASSERT_TRUE(j.contains("reports"));
    ASSERT_EQ(j["reports"].size(), 1u);
    const auto& r = j["reports"][0];
    EXPECT_EQ(r["name"], "counit");
    EXPECT_EQ(r["status"], "pass");
    EXPECT_EQ(r["degree"], 3);
    EXPECT_TRUE(r["residual"].is_null());
    EXPECT_EQ(r["millis"], 0);
}

TEST(Cli, FailingCocycleReportsItsResidual)
{
    const nlohmann::json j = run_json({"verify", "cocycle", "--b", "1", "--degree", "3"}, kExitCheckFailed);
    ASSERT_EQ(j["reports"].size(), 2u);
    const auto& r = j["reports"][0];
    EXPECT_EQ(r["name"], "cocycle");
    EXPECT_EQ(r["status"], "fail");
    EXPECT_EQ(r["residual"]["order"], 2);
    EXPECT_EQ(r["residual"]["leading"], "-xi*zeta*H13p (x) H13p (x) E12");
    const auto& m = j["reports"][1];
    EXPECT_EQ(m["name"], "cocycle.fundamental");
    EXPECT_TRUE(m["degree"].is_null());
    EXPECT_EQ(m["residual"]["order"], 2);
}

TEST(Cli, RMatrixJson)
{
    const nlohmann::json j = run_json({"rmatrix", "--check", "expansion,qybe,triangular"}, kExitPass);
    ASSERT_EQ(j["matrix"].size(), 9u);
    for (const auto& row : j["matrix"])
        ASSERT_EQ(row.size(), 9u);
    EXPECT_EQ(j["matrix"][0][8], "2/9*x^2");
    EXPECT_EQ(j["matrix"][0][4], "-2/81*x^2*z^2");
    EXPECT_EQ(j["reports"].size(), 3u);
    for (const auto& r : j["reports"])
        EXPECT_EQ(r["status"], "pass") << r["name"];

    const nlohmann::json n = run_json({"rmatrix", "--xi", "1", "--zeta", "0"}, kExitPass);
    EXPECT_EQ(n["matrix"][0][8], "2/9");
    EXPECT_EQ(n["matrix"][0][4], "0");
}

TEST(Cli, SemiclassicalCheckFailsWithSignDetail)
{
    const nlohmann::json j = run_json({"rmatrix", "--check", "semiclassical", "--eta", "1"}, kExitCheckFailed);
    const auto& r = j["reports"][0];
    EXPECT_EQ(r["name"], "rmatrix.semiclassical");
    EXPECT_EQ(r["status"], "fail");
    EXPECT_EQ(r["details"]["first_order_equals_minus_r"], true);
    EXPECT_EQ(r["details"]["first_order_equals_r"], false);
}

TEST(Cli, EvalUniversalAndFundamental)
{
    const nlohmann::json u = run_json({"eval", "--rep", "universal", "--expr", "E23*E12"}, kExitPass);
    EXPECT_EQ(u["value"], "-E13 + E12*E23");
    EXPECT_EQ(u["legs"], 1);
    const nlohmann::json f = run_json({"eval", "--expr", "E12 (x) E23"}, kExitPass);
    EXPECT_EQ(f["legs"], 2);
    EXPECT_EQ(f["value"].size(), 9u);
    EXPECT_EQ(f["value"][1][5], "1");
}

TEST(Cli, OutputIsDeterministic)
{
    const std::vector<std::string> args = {"verify", "coproducts", "--degree", "3", "--format", "json"};
    const Outcome a = run(args), b = run(args);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out);
    const Outcome t1 = run({"limits", "--degree", "3"}), t2 = run({"limits", "--degree", "3"});
    EXPECT_EQ(t1.out, t2.out);
}

TEST(Cli, WritesToFile)
{
    const auto path = std::filesystem::temp_directory_path() / "ptwist_cli_test.json";
    std::filesystem::remove(path);
    const Outcome r = run({"verify", "verma", "--degree", "3", "--format", "json", "--out", path.string()});
    EXPECT_EQ(r.code, kExitPass);
    EXPECT_TRUE(r.out.empty());
    std::ifstream f(path);
    const nlohmann::json j = nlohmann::json::parse(f);
    EXPECT_EQ(j["reports"].size(), 3u);
    std::filesystem::remove(path);
}

TEST(Cli, TextFormat)
{
    const Outcome r = run({"verify", "constraints", "--degree", "3"});
    EXPECT_EQ(r.code, kExitPass);
    EXPECT_EQ(r.out, "PASS constraints  degree=3\n");
}
