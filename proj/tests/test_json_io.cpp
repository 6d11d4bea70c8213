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

#include <sstream>

#include "opuc/errors.hpp"
#include "opuc/json_io.hpp"
#include "opuc/szego.hpp"
#include "support.hpp"

using namespace opuc;
using namespace opuc::io;
using opuc::testing::random_disk_points;

namespace {
std::string error_of(auto&& f) {
    try {
        f();
    } catch (const InvalidInput& e) {
        return e.what();
    }
    return "";
}
}  // namespace

TEST_CASE("polynomial encoding is low to high with the leading one implied") {
    const MonicPoly p({cplx{-0.4, 0.1}, -0.3});
    const auto j = encode(p);
    CHECK(j["degree"] == 2);
    CHECK(j["coeffs"][0][1] == 0.1);
    CHECK(decode_poly(j) == p);
    CHECK(decode_poly(json::parse(R"({"degree":0,"coeffs":[]})")) == MonicPoly::monomial(0));
}

TEST_CASE("doubles survive a text round trip") {
    std::mt19937_64 rng(127);
    const AlphaSeq a(random_disk_points(rng, 12, 0.95));
    const auto back = decode_alphas(json::parse(encode(a).dump()));
    for (std::size_t i = 0; i < a.size(); ++i) REQUIRE(back[i] == a[i]);
}

TEST_CASE("measure and moment round trips") {
    const auto bs = MeasureSpec::bernstein_szego(ZeroTuple({0.5, cplx{0.0, -0.3}}), 2.5);
    const auto at = MeasureSpec::atomic({{1.0, 0.25}, {cplx{0.0, 1.0}, 0.75}});
    const auto mix = MeasureSpec::mixture({{0.5, bs}, {2.0, at}});
    for (const auto* mu : {&bs, &at, &mix}) {
        const auto back = decode_measure(json::parse(encode(*mu).dump()));
        const auto m1 = moments_of(*mu, 5), m2 = moments_of(back, 5);
        for (int k = 0; k <= 5; ++k) REQUIRE(m1.at(k) == m2.at(k));
    }
    const auto m = moments_of(bs, 4);
    const auto mb = decode_moments(encode(m));
    CHECK(mb.mass() == m.mass());
    CHECK(mb.order() == 4);
}

TEST_CASE("targets and plans round trip") {
    const std::vector<ZeroTarget> targets{PointMass{cplx{0.1, 0.2}}, UniformCircle{0.5}, UniformDisk{0.25},
                                          DiscreteDistribution{{0.1, -0.1}, {0.5, 0.5}}};
    for (const auto& t : targets) CHECK(encode(decode_target(encode(t))) == encode(t));
    const ChainPlan plan{{0, 1, 3}, {0.5, 0.1, cplx{0.0, 0.2}}};
    const auto back = decode_chain_plan(encode(plan));
    CHECK(back.degrees == plan.degrees);
    CHECK(back.prescribed == plan.prescribed);
}

TEST_CASE("decode errors name the offending location") {
    CHECK(error_of([] { decode_poly(json::parse(R"({"degree":2,"coeffs":[[1,0]]})")); }).find("<root>") != std::string::npos);
    CHECK(error_of([] { decode_poly(json::parse(R"({"degree":1,"coeffs":[["x",0]]})")); }).find("/coeffs/0/0") != std::string::npos);
    CHECK(error_of([] { decode_alphas(json::parse(R"({"alphas":[[0.1,0],[1.5,0]]})")); }).find("/alphas") != std::string::npos);
    CHECK(error_of([] { decode_measure(json::parse(R"({"kind":"cantor"})")); }).find("/kind") != std::string::npos);
    CHECK(error_of([] { decode_measure(json::parse(R"({"kind":"atomic","atoms":[{"point":[1,0]}]})")); }).find("/atoms/0") !=
          std::string::npos);
    CHECK(error_of([] { decode_target(json::parse(R"({"kind":"uniform_disk","radius":2})")); }).find("/radius") != std::string::npos);
    CHECK(error_of([] { load("{\"degree\": 1,"); }).find("<inline>") != std::string::npos);
    CHECK(error_of([] { load("/nonexistent/file.json"); }).find("cannot open") != std::string::npos);
}

TEST_CASE("cloud CSV round trip") {
    const std::vector<ZeroCloud> clouds{{1, {cplx{0.1, 0.2}}, 0},
                                        {2, {cplx{1.0 / 3.0, -0.7}, cplx{0.25, 0.0}}, 1},
                                        {2, {cplx{0.0, 0.1}, cplx{-0.1, 0.0}}, 1}};
    std::stringstream ss;
    write_clouds_csv(ss, clouds);
    CHECK(ss.str().rfind("re,im,stage,degree\n", 0) == 0);
    const auto back = read_clouds_csv(ss);
    REQUIRE(back.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(back[i].degree == clouds[i].degree);
        CHECK(back[i].stage == clouds[i].stage);
        CHECK(back[i].zeros == clouds[i].zeros);
    }
}

TEST_CASE("cloud CSV errors carry line numbers") {
    std::stringstream bad_header("x,y\n");
    CHECK(error_of([&] { read_clouds_csv(bad_header, "c.csv"); }).find("c.csv:1") != std::string::npos);
    std::stringstream bad_row("re,im,stage,degree\n0.1,0.2,0,1\n0.1,abc,1,1\n");
    CHECK(error_of([&] { read_clouds_csv(bad_row, "c.csv"); }).find("c.csv:3") != std::string::npos);
    std::stringstream short_cloud("re,im,stage,degree\n0.1,0.2,0,2\n");
    CHECK_THROWS_AS(read_clouds_csv(short_cloud), InvalidInput);
}
