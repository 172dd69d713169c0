#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace {

struct Invocation {
    int status;
    std::string out;
    std::string err;
};

Invocation run(std::vector<std::string> args) {
    args.insert(args.begin(), "henselize");
    std::ostringstream out, err;
    int status = henselize::cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

nlohmann::json run_json(std::vector<std::string> args) {
    args.push_back("--format");
    args.push_back("json");
    Invocation r = run(args);
    EXPECT_EQ(r.status, 0) << r.err;
    return nlohmann::json::parse(r.out);
}

} // namespace

TEST(Cli, PolygonText) {
    Invocation r = run({"polygon", "X^2+X+2"});
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("root_valuations: [\"[0]\",\"[1]\"]"), std::string::npos) << r.out;
}

TEST(Cli, SpecializeJson) {
    auto j = run_json({"specialize", "X^2+X+2"});
    EXPECT_EQ(j["q"], "2*Y^2 - Y + 1");
    EXPECT_EQ(j["t"], "X^2 - X + 4/9");
    EXPECT_EQ(j["t_special"], true);
}

TEST(Cli, KBetaCommands) {
    EXPECT_EQ(run_json({"kbeta", "iszero", "--f", "X^2+3X+2", "--q", "X+2"})["is_zero"], true);
    EXPECT_EQ(run_json({"kbeta", "val", "--f", "X^2+X+2", "--q", "X"})["valuation"], "[1]");
    EXPECT_EQ(run_json({"kbeta", "invert", "--f", "X^2+X+2", "--q", "X"})["product_is_one"], true);
    EXPECT_EQ(run_json({"--instance", "tadic", "kbeta", "describe", "--f", "X^2+X+t", "--q", "X"})["gap"], "[4]");
}

TEST(Cli, OtherInstances) {
    auto j = run_json({"--instance", "monomial", "kernel", "decide", "--f", "X^2+X+u", "--q", "X"});
    EXPECT_EQ(j["verified"], true);
    auto s = run_json({"--instance", "usquare", "kernel", "decide", "--f", "X^2+X+w", "--q", "u"});
    EXPECT_EQ(s["N"], 2);
    EXPECT_EQ(run_json({"--p", "3", "polygon", "X^2+3"})["root_valuations"][0], "[1/2]");
}

TEST(Cli, KernelRoundTripThroughAFile) {
    const std::string path = ::testing::TempDir() + "henselize_cert.json";
    Invocation r = run({"--instance", "uwzero", "kernel", "decide", "--f", "X^2+X+w", "--q", "u", "--out", path});
    ASSERT_EQ(r.status, 0) << r.err;
    auto v = run_json({"kernel", "verify", "--in", path});
    EXPECT_EQ(v["verified"], true);

    // a forged witness is rejected with exit code 1
    std::ifstream in(path);
    auto cert = nlohmann::json::parse(in);
    cert["b"] = "u";
    std::ofstream(path) << cert.dump();
    EXPECT_EQ(run({"kernel", "verify", "--in", path}).status, 1);
    std::remove(path.c_str());
}

TEST(Cli, StageAndTower) {
    auto j = run_json({"stage", "--f", "X^2+X-6", "--t2", "X^2-X+2x1"});
    ASSERT_EQ(j["tower"].size(), 2u);
    EXPECT_EQ(j["tower"][1]["f"], "X^2 + X + 2*x1");
}

TEST(Cli, OracleCommands) {
    auto l = run_json({"oracle", "lift", "--f", "X^2+X+2", "--precision", "20"});
    EXPECT_EQ(l["residual_zero"], true);
    auto r = run_json({"oracle", "roots", "X^2-14X+24"});
    EXPECT_EQ(r["oracle_valuations"], r["polygon_valuations"]);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({"polygon", "X^2+"}).status, 2);
    EXPECT_EQ(run({"--instance", "nope", "polygon", "X"}).status, 2);
    EXPECT_EQ(run({"check", "nagata", "X^2+X+1"}).status, 1);
    EXPECT_EQ(run({"check", "nagata", "X^2+X+2"}).status, 0);
    EXPECT_EQ(run({"kbeta", "val", "--f", "X^2+X+1", "--q", "X"}).status, 2);
    EXPECT_EQ(run({"kernel", "verify", "--in", "/nonexistent.json"}).status, 2);
    EXPECT_EQ(run({}).status, 2);
}

TEST(Cli, DemoIsDeterministic) {
    Invocation a = run({"demo", "--seed", "5", "--format", "json"});
    Invocation b = run({"demo", "--seed", "5", "--format", "json"});
    EXPECT_EQ(a.status, 0) << a.out;
    EXPECT_EQ(a.out, b.out);
}
