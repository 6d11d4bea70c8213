/*
   Copyright 2026 The opuc-zeros Authors

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

#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "opuc/json_io.hpp"
#include "support.hpp"

using namespace opuc;
using io::json;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "opuc-cli");
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("opuc-cli-test-" + std::to_string(std::random_device{}()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name, const std::string& content = "") const {
        const auto p = (path / name).string();
        if (!content.empty()) std::ofstream(p) << content;
        return p;
    }
};

json read_json(const std::string& path) { return io::load(path); }

}  // namespace

TEST_CASE("recur converts both ways") {
    auto r = run_cli({"recur", "--alphas", "[[0.5,0]]"});
    REQUIRE(r.code == 0);
    CHECK(io::decode_poly(json::parse(r.out)) == MonicPoly({-0.5}));

    r = run_cli({"recur", "--poly", R"({"degree":2,"coeffs":[[-0.4,0],[-0.3,0]]})"});
    REQUIRE(r.code == 0);
    const auto a = io::decode_alphas(json::parse(r.out));
    CHECK(std::abs(a[1] - 0.4) < 1e-15);

    r = run_cli({"recur", "--alphas", "[[0.5,0],[0,0]]", "--all"});
    CHECK(json::parse(r.out)["polys"].size() == 3);
}

TEST_CASE("prescribe then verify reproduces the stored residuals") {
    TempDir dir;
    const auto target = dir.file("targ.json", R"({"degree":1,"coeffs":[[-0.5,0]]})");
    const auto sol = dir.file("sol.json");
    auto r = run_cli({"prescribe", "--target", target, "--anchors", "[[-0.5,0]]", "--tol", "1e-10", "--seed", "7", "--out", sol});
    REQUIRE(r.code == 0);
    const auto doc = read_json(sol);
    CHECK(doc["status"] == "success");
    const auto [problem, s] = io::decode_solution(doc);
    CHECK(std::abs(s.Z_found[0] - 0.8) < 1e-10);
    CHECK(doc.contains("trace"));

    r = run_cli({"verify", "--solution", sol});
    REQUIRE(r.code == 0);
    const auto rep = json::parse(r.out);
    CHECK(rep["reproduced"] == true);
    CHECK(rep["coeff_deviation"].template get<double>() <= 10.0 * std::max(s.residual_coeff, 1e-12));
}

TEST_CASE("verify reproduces residuals on random problems") {
    TempDir dir;
    std::mt19937_64 rng(131);
    for (int trial = 0; trial < 6; ++trial) {
        const auto target = from_zeros(opuc::testing::random_disk_points(rng, 1 + trial % 3, 0.7));
        const auto anchors = opuc::testing::random_disk_points(rng, 1 + trial / 2, 0.7);
        const auto t = dir.file("t.json", io::encode(target).dump());
        const auto a = dir.file("a.json", io::encode_points(anchors).dump());
        const auto sol = dir.file("s.json");
        REQUIRE(run_cli({"prescribe", "--target", t, "--anchors", a, "--seed", std::to_string(trial), "--out", sol}).code == 0);
        const auto r = run_cli({"verify", "--solution", sol});
        REQUIRE(r.code == 0);
        REQUIRE(json::parse(r.out)["reproduced"] == true);
    }
}

TEST_CASE("solver failure exits 1 and still writes the report") {
    TempDir dir;
    const auto sol = dir.file("sol.json");
    const auto target = io::encode(from_zeros(std::vector<cplx>{0.3, cplx{0.0, -0.2}, cplx{0.1, 0.4}})).dump();
    const auto r = run_cli({"prescribe", "--target", target, "--anchors", "[[0.5,0],[-0.6,0]]",
                        "--tol", "1e-300", "--max-restarts", "0", "--out", sol});
    CHECK(r.code == 1);
    CHECK(read_json(sol)["status"] == "failure");
}

TEST_CASE("invalid input exits 2 with a location") {
    auto r = run_cli({"recur", "--alphas", "[[0.5,0],[1.5,0]]"});
    CHECK(r.code == 2);
    CHECK(r.err.find("alpha_1") != std::string::npos);

    r = run_cli({"prescribe", "--target", R"({"degree":1,"coeffs":[[-0.5]]})", "--anchors", "[[0,0]]"});
    CHECK(r.code == 2);
    CHECK(r.err.find("/coeffs/0") != std::string::npos);

    r = run_cli({"zeros", "--poly", "{broken"});
    CHECK(r.code == 2);
    CHECK(run_cli({"frobnicate"}).code == 2);
    CHECK(run_cli({"recur"}).code == 2);
}

TEST_CASE("moments, zeros and chain outputs re-parse") {
    auto r = run_cli({"moments", "--measure", R"({"kind":"bernstein_szego","zeros":[[0.5,0]]})", "--order", "2"});
    REQUIRE(r.code == 0);
    const auto m = io::decode_moments(json::parse(r.out));
    CHECK(std::abs(m.at(2) - 0.25) < 1e-15);

    r = run_cli({"moments", "--measure", R"({"kind":"bernstein_szego","zeros":[[0.5,0]]})", "--order", "2", "--quadrature"});
    REQUIRE(r.code == 0);
    CHECK(std::abs(io::decode_moments(json::parse(r.out)).at(2) - 0.25) < 1e-12);

    r = run_cli({"zeros", "--alphas", R"({"alphas":[[0.5,0],[0.4,0]]})"});
    REQUIRE(r.code == 0);
    CHECK(multiset_distance(io::decode_points(json::parse(r.out)["zeros"]), std::vector<cplx>{0.8, -0.5}) < 1e-12);

    TempDir dir;
    const auto csv = dir.file("c.csv");
    r = run_cli({"chain", "--plan", R"({"degrees":[0,1,2],"points":[[0.5,0],[-0.5,0]]})", "--clouds", csv});
    REQUIRE(r.code == 0);
    CHECK(io::decode_alphas(json::parse(r.out)).size() == 2);
    std::ifstream in(csv);
    CHECK(io::read_clouds_csv(in).size() == 2);
}

TEST_CASE("limitset and limitpoints pipeline") {
    TempDir dir;
    std::vector<cplx> P, S;
    for (int j = 0; j < 8; ++j) P.push_back(std::polar(1.0, 2.0 * std::numbers::pi * j * 0.618034));
    const double lambda[] = {0.5, 0.3, 0.5, 0.7};
    for (int n = 0; n < 4; ++n) S.push_back(lambda[n] * P[2 * n] + (1 - lambda[n]) * P[2 * n + 1]);
    const auto p = dir.file("p.json", io::encode_points(P).dump());
    const auto s = dir.file("s.json", io::encode_points(S).dump());
    const auto csv = dir.file("l.csv"), rep = dir.file("r.json");
    auto r = run_cli({"limitset", "--P", p, "--S", s, "--nmax", "3", "--clouds", csv, "--out", rep});
    REQUIRE(r.code == 0);
    const auto doc = read_json(rep);
    CHECK(doc["stages"].size() == 3);
    for (const auto& st : doc["stages"]) {
        CHECK(st["pass"] == true);
        CHECK(st.contains("condition_A_distance"));
        CHECK(st.contains("condition_B_distances"));
        CHECK(st.contains("condition_C_distances"));
    }
    io::decode_measure(doc["measure"], "/measure");

    r = run_cli({"limitpoints", "--clouds", csv, "--eps", "0.1", "--tail", "2"});
    REQUIRE(r.code == 0);
    CHECK_FALSE(io::decode_points(json::parse(r.out)["points"]).empty());
}

TEST_CASE("universal subcommand reports distances") {
    const auto r = run_cli({"universal", "--targets", R"({"kind":"uniform_circle","radius":0.5})", "--stages", "3"});
    REQUIRE(r.code == 0);
    const auto doc = json::parse(r.out);
    CHECK(doc["distances"].size() == 3);
    CHECK(doc["degrees"] == json::array({0, 1, 2, 6}));
}
