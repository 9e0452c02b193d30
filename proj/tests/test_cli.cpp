/*
   Copyright 2026 The matpoly Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/


#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "matpoly/io.hpp"

using namespace matpoly;
using io::Json;

namespace {

struct Run {
    int code = -1;
    std::string out;
    Json json() const { return Json::parse(out); }
};

Run run(const std::string& args) {
    const std::string cmd = std::string(MATPOLY_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string fixture(const std::string& name) { return std::string(MATPOLY_FIXTURES) + "/" + name; }

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

} // namespace

TEST(Cli, SnfInvariantsOfDiagonal) {
    const auto r = run("snf " + fixture("diag_snf.json"));
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.json()["invariants"], Json::array({"z^3 - z^2", "z"}));
}

TEST(Cli, SnfOfPureZPower) {
    const auto r = run("snf " + fixture("z_power_identity.json"));
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.json()["invariants"], Json::array({"z^2", "z^2", "z^2"}));
}

TEST(Cli, SnfAcceptsExplicitLeadingCoefficient) {
    const auto r = run("snf " + fixture("non_monic_snf.json"));
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.json()["invariants"], Json::array({"z^2 - 7/4*z", "1"}));
}

TEST(Cli, MalformedInputIsParseError) {
    const auto r = run("snf " + fixture("malformed.json"));
    EXPECT_EQ(r.code, 2);
    EXPECT_EQ(r.json()["error"]["kind"], "parse");
    EXPECT_TRUE(r.json()["error"].contains("location"));
}

TEST(Cli, FieldMismatchAndMissingFile) {
    auto r = run("snf " + fixture("generic_product.json"));
    EXPECT_EQ(r.code, 2);
    EXPECT_EQ(r.json()["error"]["kind"], "field-mismatch");
    r = run("snf " + fixture("does_not_exist.json"));
    EXPECT_EQ(r.code, 2);
    EXPECT_EQ(r.json()["error"]["kind"], "io");
    r = run("snf");
    EXPECT_EQ(r.code, 2);
    EXPECT_EQ(r.json()["error"]["kind"], "usage");
}

TEST(Cli, ClassifyNilpotent) {
    const auto r = run("classify " + fixture("nilpotent_m2n1.json"));
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.json()["type"], Json::array({1, -1}));
    EXPECT_EQ(r.json()["dimension"], 2);
}

TEST(Cli, ClassifyRejectsNonMonic) {
    const auto r = run("classify " + fixture("non_monic_snf.json"));
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.json()["error"]["kind"], "non-monic");
}

TEST(Cli, Closure) {
    const auto r = run("closure " + fixture("jordan_z4.json") + " " + fixture("scalar_z4.json"));
    ASSERT_EQ(r.code, 0);
    EXPECT_TRUE(r.json()["contains"].get<bool>());
    EXPECT_FALSE(r.json()["contained_in"].get<bool>());
}

TEST(Cli, FactorAndChartExclusion) {
    auto r = run("factor " + fixture("generic_product.json"));
    ASSERT_EQ(r.code, 0);
    EXPECT_LE(r.json()["residuals"]["reconstruction"].get<double>(), 1e-8);
    r = run("factor " + fixture("dependent_eigenvectors.json") + " --partition '[[3,4],[1,2]]'");
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.json()["error"]["kind"], "chart-excluded");
}

TEST(Cli, SwapWithEqualValuesChangesNothing) {
    const auto r = run("swap " + fixture("generic_product.json") + " --partition '[[1,3],[4,5]]' --lambda 3 --mu 3");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.json()["before"], r.json()["after"]);
}

TEST(Cli, OrbitReturnsToStart) {
    const auto r = run("orbit " + fixture("generic_product.json") +
                       " --sequence '[[[1,3],[4,5]], [[5,1],[3,4]], [[1,3],[4,5]]]'");
    ASSERT_EQ(r.code, 0);
    const auto steps = r.json()["steps"];
    ASSERT_EQ(steps.size(), 3u);
    EXPECT_EQ(steps[1]["swaps"].size(), 1u);
    for (const auto& s : steps) EXPECT_LE(s["residuals"]["reconstruction"].get<double>(), 1e-9);
}

TEST(Cli, BracketValueAndTable) {
    auto r = run("bracket " + fixture("point_m2n2.json") + " --indices 1,2,1,2,1,1");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.json()["value"], "-1/4");  // t11 − t22 = 1/2 − 3/4
    r = run("bracket " + fixture("point_m2n2.json"));
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.json()["table"].size(), 8u);
    r = run("bracket " + fixture("point_m2n2.json") + " --indices 1,2,3,2,1,1");
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.json()["error"]["kind"], "index-out-of-range");
}

TEST(Cli, FlowConservesDeterminant) {
    const auto r = run("flow " + fixture("flow_start.json") +
                       " --hamiltonian '[[[1,0],[0,2]],[[0,1],[1,0]]]' --time 1 --step 0.001");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.json()["steps"], 1000);
    EXPECT_LE(r.json()["residuals"]["max_det_drift"].get<double>(), 1e-8);
    EXPECT_LE(r.json()["residuals"]["spectrum_shift"].get<double>(), 1e-6);
}

TEST(Cli, DrinfeldRuns) {
    const auto r = run("drinfeld " + fixture("point_m2n2.json"));
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.json()["entries"].size(), 1u);
}

TEST(Cli, VerifyAllOnFixtures) {
    std::string files;
    for (const auto& e : std::filesystem::directory_iterator(MATPOLY_FIXTURES))
        if (e.path().filename() != "malformed.json") files += " " + e.path().string();
    const auto r = run("verify --suite all" + files);
    ASSERT_EQ(r.code, 0);
    EXPECT_TRUE(r.json()["ok"].get<bool>());
    EXPECT_EQ(r.json()["failed"], 0);
}

TEST(Cli, DeterministicOutputAndSeedFallback) {
    const auto a = run("verify --suite factor --seed 7");
    const auto b = run("verify --suite factor --seed 7");
    const auto c = run("verify --suite factor").out;
    EXPECT_EQ(a.out, b.out);
    const std::string env = "MATPOLY_SEED=7 ";
    const std::string cmd = env + MATPOLY_CLI + " verify --suite factor 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    ASSERT_NE(p, nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), got);
    pclose(p);
    EXPECT_EQ(out, a.out);
    EXPECT_EQ(a.json()["seed"], 7);
    EXPECT_NE(Json::parse(c)["seed"], 7);
}

TEST(Io, DocumentsRoundTrip) {
    for (const auto& e : std::filesystem::directory_iterator(MATPOLY_FIXTURES)) {
        if (e.path().filename() == "malformed.json") continue;
        const auto doc = io::parse_document(slurp(e.path().string()));
        const auto again = io::parse_document(io::to_json(doc).dump());
        EXPECT_EQ(doc, again) << e.path();
    }
}

TEST(Io, ComplexValuesSurviveExactly) {
    const Matrix<Complex> M(1, 1, {Complex(0.1 + 0.2, -1.0 / 3.0)});
    const auto doc = io::make_document(std::vector<Matrix<Complex>>{M}, 1, 1, io::Variable::z_inv);
    const auto back = io::parse_document(io::to_json(doc).dump());
    EXPECT_EQ(back.complex.at(0)(0, 0), M(0, 0));
}

TEST(Io, RejectsBadRationals) {
    EXPECT_THROW(io::parse_document(R"({"m":1,"n":1,"coeffs":[[["1/0"]]]})"), io::InputError);
    EXPECT_THROW(io::parse_document(R"({"m":1,"n":1,"coeffs":[[["x"]]]})"), io::InputError);
    EXPECT_THROW(io::parse_document(R"({"m":1,"n":2,"coeffs":[[["1"]]]})"), io::InputError);
    EXPECT_THROW(io::parse_document(R"({"m":2,"n":1,"coeffs":[[["1"]]]})"), io::InputError);
    EXPECT_THROW(io::parse_document(R"({"m":1,"n":1,"variable":"w","coeffs":[[["1"]]]})"), io::InputError);
}
