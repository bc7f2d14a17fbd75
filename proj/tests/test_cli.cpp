#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "rcurve/cli.hpp"
#include "test_util.hpp"

using namespace rcurve;
using rcurve::test::fixture_path;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
    Json json() const { return Json::parse(out); }
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = std::filesystem::temp_directory_path() /
               ("rcurve_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        std::filesystem::create_directories(dir_);
    }
    void TearDown() override { std::filesystem::remove_all(dir_); }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }
    std::string write(const std::string& name, const std::string& text) const {
        std::ofstream(path(name)) << text;
        return path(name);
    }
    static std::string read(const std::string& p) {
        std::ifstream f(p);
        std::stringstream ss;
        ss << f.rdbuf();
        return ss.str();
    }

    std::filesystem::path dir_;
};

}  // namespace

TEST_F(CliTest, ClassifyGerono) {
    Result r = run({"classify", "--param", fixture_path("gerono"), "--mode", "full"});
    ASSERT_EQ(r.code, 0) << r.err;
    Json j = r.json();
    EXPECT_EQ(j["schema"], 1);
    EXPECT_EQ(j["case_label"], "CASE2");
    EXPECT_EQ(j["p_sphere1"], 1);
    EXPECT_EQ(j["p_ball"], "infinity");
    EXPECT_EQ(j["laurent_image"], "YES");
    EXPECT_EQ(j["name"], "gerono");
    EXPECT_EQ(j["evidence"]["points_at_infinity"].size(), 1u);
}

TEST_F(CliTest, ClassifyArcFlags) {
    Result r = run({"classify", "--param", fixture_path("line"), "--mode", "arc", "--a", "-1", "--b", "1"});
    ASSERT_EQ(r.code, 0) << r.err;
    Json j = r.json();
    EXPECT_EQ(j["case_label"], "CASE1");
    EXPECT_EQ(j["p_ball"], 1);
    EXPECT_EQ(j["p_sphere_k_ge2"], "YES");
    EXPECT_EQ(j["input"]["a"], "-1");
}

TEST_F(CliTest, ClassifyModeFromDocument) {
    Result r = run({"classify", "--param", fixture_path("cubic_arc")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.json()["mode"], "arc");
    EXPECT_EQ(r.json()["case_label"], "CASE1");
}

TEST_F(CliTest, ClassifyText) {
    Result r = run({"classify", "--param", fixture_path("circle"), "--text"});
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("CASE3"), std::string::npos);
    EXPECT_NE(r.out.find("circle (full)"), std::string::npos);
}

TEST_F(CliTest, Deterministic) {
    std::vector<std::string> args{"classify", "--param", fixture_path("bicircular")};
    EXPECT_EQ(run(args).out, run(args).out);
    std::vector<std::string> w{"witness", "--param", fixture_path("gerono"), "--target", "circle"};
    EXPECT_EQ(run(w).out, run(w).out);
}

TEST_F(CliTest, WitnessSphere2OnSegment) {
    Result r = run({"witness", "--param", fixture_path("line"), "--mode", "arc", "--a", "-1", "--b", "1", "--target",
                    "sphere2"});
    ASSERT_EQ(r.code, 0) << r.err;
    Json j = r.json();
    EXPECT_EQ(j["kind"], "witness");
    EXPECT_EQ(j["source"], "sphere");
    EXPECT_EQ(j["variables"], Json({"x", "y", "z"}));
    EXPECT_EQ(j["components"], Json({"x", "0"}));
}

TEST_F(CliTest, LaurentPipelineVerifiedByCheck) {
    const std::string out = path("circle_laurent.json");
    Result c = run({"classify", "--param", fixture_path("circle"), "--mode", "full"});
    ASSERT_EQ(c.code, 0);
    Result w = run({"witness", "--param", fixture_path("circle"), "--target", "laurent", "--out", out});
    ASSERT_EQ(w.code, 0) << w.err;
    Json doc = Json::parse(read(out));
    EXPECT_EQ(doc["kind"], "laurent");
    EXPECT_EQ(doc["coefficients"]["2"], Json({0, 1, -1, 1}));
    Result k = run({"check", "--witness", out, "--param", fixture_path("circle"), "--tol", "1e-9"});
    EXPECT_EQ(k.code, 0) << k.out;
    EXPECT_EQ(k.json()["pass"], true);
}

TEST_F(CliTest, CheckUsesWitnessInput) {
    const std::string out = path("w.json");
    ASSERT_EQ(run({"witness", "--param", fixture_path("parabola"), "--mode", "arc", "--a", "0", "--b", "2", "--target",
                   "interval", "--out", out})
                  .code,
              0);
    Result k = run({"check", "--witness", out, "--param", fixture_path("parabola")});
    EXPECT_EQ(k.code, 0) << k.out;
    EXPECT_EQ(k.json()["endpoints_checked"], true);
}

TEST_F(CliTest, CheckFailsOnMutatedWitness) {
    const std::string w = write("bad.json", R"({"schema":1,"kind":"witness","source":"circle","variables":["x","y"],
        "components":["1 - 2*x^2 + 1", "2*x*y - 4*x^3*y"]})");
    Result k = run({"check", "--witness", w, "--param", fixture_path("gerono")});
    EXPECT_EQ(k.code, 2);
    EXPECT_EQ(k.json()["pass"], false);
    EXPECT_EQ(k.json()["failure"], "exact_identity");
}

TEST_F(CliTest, LaurentConversions) {
    const std::string l = write("z2.json", R"({"schema":1,"kind":"laurent","coefficients":{"2":[1,1,0,1]}})");
    const std::string real = path("real.json");
    Result a = run({"laurent", "to-real", "--in", l, "--out", real});
    ASSERT_EQ(a.code, 0) << a.out;
    Json g = Json::parse(read(real));
    EXPECT_EQ(g["components"], Json({"2*x^2 - 1", "2*x*y"}));
    Result b = run({"laurent", "from-real", "--in", real});
    ASSERT_EQ(b.code, 0);
    EXPECT_EQ(b.json()["coefficients"], Json::parse(read(l))["coefficients"]);
}

TEST_F(CliTest, Implicitize) {
    Result r = run({"implicitize", "--param", fixture_path("gerono")});
    ASSERT_EQ(r.code, 0);
    Json j = r.json();
    EXPECT_EQ(j["degree"], 4);
    EXPECT_EQ(parse_poly(j["polynomial"].get<std::string>(), {"x0", "x1", "x2"}),
              parse_poly("x0^2*(x2^2 - x1^2) + x1^4", {"x0", "x1", "x2"}));
}

TEST_F(CliTest, SampleCsvAndSvg) {
    const std::string csv = path("line.csv");
    Result r = run({"sample", "--param", fixture_path("line"), "--mode", "arc", "--a", "-1", "--b", "1", "--n", "3",
                    "--format", "csv", "--out", csv});
    ASSERT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(r.json()["points"], 3);
    EXPECT_EQ(read(csv).substr(0, 12), "x1,x2,param\n");
    const std::string svg = path("g.svg");
    ASSERT_EQ(run({"sample", "--param", fixture_path("gerono"), "--out", svg}).code, 0);
    EXPECT_NE(read(svg).find("<svg"), std::string::npos);
}

TEST_F(CliTest, ImproperExitsTwo) {
    Result r = run({"classify", "--param", fixture_path("improper")});
    EXPECT_EQ(r.code, 2);
    Json j = r.json();
    EXPECT_EQ(j["error"], true);
    EXPECT_EQ(j["reason"], "improper");
    EXPECT_EQ(j["evidence"]["generic_fiber_degree"], 2);
}

TEST_F(CliTest, MathRejectionsExitTwo) {
    Result a = run({"witness", "--param", fixture_path("circle"), "--target", "interval", "--mode", "arc", "--a", "0",
                    "--b", "1"});
    EXPECT_EQ(a.code, 2);
    EXPECT_EQ(a.json()["reason"], "wrong_case");
    Result b = run({"witness", "--param", fixture_path("gerono"), "--target", "sphere2"});
    EXPECT_EQ(b.code, 2);
    EXPECT_EQ(b.json()["reason"], "classifier_no");
    const std::string p = write("hyp.json", R"({"components":["t1","t0","t0 + t1"]})");
    Result c = run({"classify", "--param", p, "--mode", "arc", "--a", "-1", "--b", "1"});
    EXPECT_EQ(c.code, 2);
    EXPECT_EQ(c.json()["reason"], "arc_meets_infinity");
}

TEST_F(CliTest, UsageAndInputErrorsExitOne) {
    EXPECT_EQ(run({}).code, 1);
    EXPECT_EQ(run({"frobnicate"}).code, 1);
    EXPECT_EQ(run({"classify"}).code, 1);
    EXPECT_EQ(run({"classify", "--param", fixture_path("circle"), "--mode", "sideways"}).code, 1);

    Result missing = run({"classify", "--param", path("nope.json")});
    EXPECT_EQ(missing.code, 1);
    EXPECT_EQ(missing.json()["reason"], "invalid_input");

    const std::string bad = write("bad.json", R"({"components":["t0 + * t1", "t1"]})");
    Result parse = run({"classify", "--param", bad});
    EXPECT_EQ(parse.code, 1);
    EXPECT_EQ(parse.json()["reason"], "parse_error");
    EXPECT_EQ(parse.json()["evidence"]["position"], 5);

    EXPECT_EQ(run({"classify", "--param", fixture_path("line"), "--mode", "arc"}).code, 1);
    EXPECT_EQ(run({"check", "--witness", fixture_path("circle"), "--param", fixture_path("circle")}).code, 1);
    EXPECT_EQ(run({"check", "--witness", fixture_path("circle"), "--param", fixture_path("circle"), "--tol", "-1"}).code, 1);
}

TEST_F(CliTest, HelpExitsZero) {
    Result r = run({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("classify"), std::string::npos);
}
