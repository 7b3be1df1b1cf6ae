#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "cli.hpp"

using namespace rlshift;

namespace {

struct Outcome {
    int code;
    std::string out, err;
    Json json() const { return Json::parse(out); }
};

Outcome run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name)
{
    const auto dir = std::filesystem::temp_directory_path() / "rlshift-cli-test";
    std::filesystem::create_directories(dir);
    return dir / name;
}

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream f(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

} // namespace

TEST(Cli, ShiftVerifyPasses)
{
    const auto o = run({"shift-verify", "--algebra", "A2", "--window", "3"});
    EXPECT_EQ(o.code, 0) << o.err;
    const Json j = o.json();
    EXPECT_TRUE(j["passed"].get<bool>());
    EXPECT_EQ(j["reports"].size(), 2u);
    EXPECT_EQ(j["run"]["seed"], 0);
}

TEST(Cli, BetaTrace)
{
    const auto o = run({"beta", "--r", "2", "--s", "2", "--lambda", "[0,0]"});
    EXPECT_EQ(o.code, 0) << o.err;
    const Json j = o.json();
    EXPECT_EQ(j.dump().find("A1:2:[0]") != std::string::npos, true);
    EXPECT_NE(j.dump().find("\"a\":[4,3]"), std::string::npos) << j.dump();
    EXPECT_NE(j.dump().find("\"q\":[2,1]"), std::string::npos);
    EXPECT_NE(j.dump().find("\"b\":[4,3]"), std::string::npos);
}

TEST(Cli, DualitySl)
{
    const auto o = run({"duality", "--type", "sl", "--r", "2", "--s", "2", "--n", "4"});
    EXPECT_EQ(o.code, 0) << o.err;
    const Json j = o.json();
    EXPECT_TRUE(j["passed"].get<bool>());
    EXPECT_GT(j["reports"][0]["casesTested"].get<long>(), 0);
}

TEST(Cli, DimWithNumericCheck)
{
    const auto o = run({"dim", "--algebra", "A1", "--level", "2", "--weights", "[[1],[1],[1],[1]]", "--numeric"});
    EXPECT_EQ(o.code, 0) << o.err;
    EXPECT_NE(o.out.find("2"), std::string::npos);
}

TEST(Cli, InformationalCommands)
{
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{"roots", "--algebra", "C2"}, {"chevalley", "--algebra", "A2"}, {"young", "--r", "2", "--s", "3", "--diagram", "[2,1]"},
          {"young", "--r", "3", "--s", "3"}, {"branch", "--r", "2", "--s", "3", "--lambda", "[1]"},
          {"fusion-table", "--algebra", "A1", "--level", "2"}}) {
        const auto o = run(args);
        EXPECT_EQ(o.code, 0) << args[0] << ": " << o.err;
        EXPECT_NO_THROW(o.json()) << args[0];
    }
}

TEST(Cli, VerificationSuites)
{
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{"conj-verify", "--algebra", "B2", "--window", "2"},
          {"multishift-verify", "--algebra", "A1", "--points", "3", "--window", "2"},
          {"current-verify", "--algebra", "A2", "--points", "2", "--max-pole", "2"},
          {"embed-verify", "--embedding", "tensor:2,2", "--window", "1"},
          {"square-verify", "--embedding", "symplectic:1,2", "--window", "1", "--points", "2"},
          {"beta", "--r", "3", "--s", "2"},
          {"invariance", "--algebra", "A1", "--level", "2", "--n", "4"},
          {"duality", "--type", "sp", "--r", "1", "--s", "2", "--n", "4"}}) {
        const auto o = run(args);
        EXPECT_EQ(o.code, 0) << args[0] << ": " << o.err;
    }
}

TEST(Cli, UsageErrorsExitTwo)
{
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"roots", "--algebra", "Q7"}).code, 2);
    EXPECT_EQ(run({"roots", "--algebra", "D2"}).code, 2);
    EXPECT_EQ(run({"shift-verify"}).code, 2);
    EXPECT_EQ(run({"shift-verify", "--algebra", "A2", "--jobs", "0"}).code, 2);
    EXPECT_EQ(run({"dim", "--algebra", "A1", "--level", "2", "--weights", "[[3]]"}).code, 2);
    EXPECT_EQ(run({"dim", "--algebra", "A1", "--level", "2", "--weights", "not json"}).code, 2);
    EXPECT_EQ(run({"invariance", "--algebra", "A1", "--level", "1", "--omegas", "rot1,id,id,id"}).code, 2);
    EXPECT_EQ(run({"embed-verify", "--embedding", "symplectic:1,1"}).code, 2);
    EXPECT_EQ(run({"multishift-verify", "--algebra", "A1", "--points", "2", "--z", "[1,1]"}).code, 2);
    EXPECT_EQ(run({"fusion-table", "--algebra", "A3", "--level", "9", "--max-weights", "10"}).code, 2);
    const auto o = run({"roots", "--algebra", "Q7"});
    EXPECT_FALSE(o.err.empty());
    EXPECT_TRUE(o.out.empty());
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(run({"--help"}).code, 0); }

TEST(Cli, VerificationFailureExitsOne)
{
    Json j = tensor_embedding(2, 2).to_json();
    for (auto& f : j["factors"]) f["dynkinIndex"] = 7;
    const auto path = scratch("bad-embedding.json");
    std::ofstream(path) << j.dump();
    const auto o = run({"embed-verify", "--embedding", path.string(), "--window", "1"});
    EXPECT_EQ(o.code, 1) << o.err;
    EXPECT_FALSE(o.json()["passed"].get<bool>());
}

TEST(Cli, OutputFileAndEnvironmentDirectory)
{
    const auto file = scratch("roots.json");
    std::filesystem::remove(file);
    const auto o = run({"roots", "--algebra", "A1", "--out", file.string()});
    EXPECT_EQ(o.code, 0);
    EXPECT_TRUE(o.out.empty());
    EXPECT_NO_THROW(Json::parse(slurp(file)));

    const auto dir = scratch("env");
    std::filesystem::create_directories(dir);
    ::setenv("RLSHIFT_OUT_DIR", dir.c_str(), 1);
    const auto e = run({"young", "--r", "2", "--s", "2"});
    ::unsetenv("RLSHIFT_OUT_DIR");
    EXPECT_EQ(e.code, 0);
    EXPECT_TRUE(std::filesystem::exists(dir / "young.json"));
}

TEST(Cli, JobsDoNotChangeReports)
{
    for (const std::vector<std::string>& base :
         {std::vector<std::string>{"shift-verify", "--algebra", "C2", "--window", "2"},
          {"fusion-table", "--algebra", "A2", "--level", "2", "--stabilize", "5", "--seed", "99"},
          {"duality", "--type", "sl", "--r", "2", "--s", "2", "--n", "3"}}) {
        auto one = base, three = base;
        one.insert(one.end(), {"--jobs", "1"});
        three.insert(three.end(), {"--jobs", "3"});
        EXPECT_EQ(run(one).out, run(three).out) << base[0];
    }
}

TEST(Cli, SeedIsRecorded)
{
    const auto o = run({"fusion-table", "--algebra", "A1", "--level", "3", "--stabilize", "3", "--seed", "42"});
    EXPECT_EQ(o.code, 0) << o.err;
    EXPECT_EQ(o.json()["run"]["seed"], 42);
}
