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

#include <algorithm>

#include "opuc/errors.hpp"
#include "opuc/geronimus.hpp"
#include "opuc/toeplitz.hpp"
#include "support.hpp"

using namespace opuc;
using opuc::testing::max_abs_diff;
using opuc::testing::random_disk_points;
using opuc::testing::separated_disk_points;

namespace {
double vec_diff(const Eigen::VectorXd& a, const Eigen::VectorXd& b) { return (a - b).cwiseAbs().maxCoeff(); }

// Closed form of F_{a}(z1) at n = 1: constant coefficient of Phi_1.
cplx closed_c0(cplx z1, cplx a) {
    return (z1 * a * std::conj(z1 + a) - (z1 + a)) / (1.0 - std::norm(z1 * a));
}
}  // namespace

TEST_CASE("bs_measure is the Bernstein-Szego measure of the union") {
    const auto one = bs_measure(ZeroTuple({0.5}), ZeroTuple{});
    CHECK(std::get<BernsteinSzego>(one.variant()).zeros.size() == 1);

    const cplx a{0.1, 0.7};
    const auto m1 = moments_of(bs_measure(ZeroTuple({0.0}), ZeroTuple({a})), 6);
    const auto m2 = moments_of(MeasureSpec::bernstein_szego(ZeroTuple({a})), 6);
    CHECK(max_abs_diff(m1.values(), m2.values()) < 1e-14);

    const auto sq = bs_measure(ZeroTuple({0.5}), ZeroTuple({0.5}));
    CHECK(std::get<BernsteinSzego>(sq.variant()).zeros.size() == 2);
}

TEST_CASE("map_M reads off interleaved coefficients") {
    CHECK(vec_diff(map_M(MonicPoly({-0.5})), Eigen::Vector2d(-0.5, 0.0)) == 0.0);
    CHECK(vec_diff(map_M(MonicPoly::monomial(2)), Eigen::Vector4d::Zero()) == 0.0);
    CHECK(vec_diff(map_M(MonicPoly({-0.4, -0.3})), Eigen::Vector4d(-0.4, 0.0, -0.3, 0.0)) == 0.0);
    const MonicPoly p({cplx{1, 2}, cplx{3, 4}});
    CHECK(coeffs_from_M(map_M(p)) == p);
}

TEST_CASE("F examples") {
    std::mt19937_64 rng(61);
    const auto Z = random_disk_points(rng, 4, 0.9);
    CHECK(vec_diff(F(std::vector<cplx>{}, Z), map_M(from_zeros(Z))) == 0.0);
    CHECK(vec_diff(F(std::vector<cplx>{0.5}, std::vector<cplx>{0.0}), Eigen::Vector2d(-0.5, 0.0)) < 1e-15);
    CHECK(vec_diff(F(std::vector<cplx>{-0.5}, std::vector<cplx>{0.8}), Eigen::Vector2d(-0.5, 0.0)) < 1e-15);
    CHECK_THROWS_AS(F(std::vector<cplx>{0.5}, std::vector<cplx>{}), InvalidInput);
}

TEST_CASE("F matches the n = 1 closed form") {
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 100; ++trial) {
        const cplx z1 = random_disk_points(rng, 1, 0.9)[0], a = random_disk_points(rng, 1, 0.9)[0];
        const auto v = F(std::vector<cplx>{a}, std::vector<cplx>{z1});
        const cplx c0 = closed_c0(z1, a);
        REQUIRE(std::abs(cplx{v(0), v(1)} - c0) < 1e-13);
    }
}

TEST_CASE("F is permutation invariant and ignores anchors at the origin") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 50; ++trial) {
        const auto A = random_disk_points(rng, 1 + trial % 3, 0.8);
        auto Z = random_disk_points(rng, 1 + trial % 4, 0.8);
        const auto base = F(A, Z);
        std::reverse(Z.begin(), Z.end());
        REQUIRE(vec_diff(F(A, Z), base) < 1e-12);
        std::vector<cplx> zeros_A(A.size(), 0.0);
        REQUIRE(vec_diff(F(zeros_A, Z), F(std::vector<cplx>{}, Z)) < 1e-13);
    }
}

TEST_CASE("F agrees with Levinson on the measure's moments") {
    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 60; ++trial) {
        const ZeroTuple A(random_disk_points(rng, 1 + trial % 3, 0.8));
        const ZeroTuple Z(random_disk_points(rng, 1 + trial % 4, 0.8));
        const int n = static_cast<int>(Z.size()), N = n + static_cast<int>(A.size());
        const auto m = moments_of(bs_measure(Z, A), N);
        REQUIRE(vec_diff(map_M(monic_op_from_moments(m, n)), F(A, Z)) < 1e-8);
        REQUIRE(vec_diff(map_M(nth_op_of_bs(A.points(), Z.points())), F(A, Z)) < 1e-15);
    }
}

TEST_CASE("jacobian_F at n = 1 without anchors is minus the identity") {
    const auto J = jacobian_F(std::vector<cplx>{}, std::vector<cplx>{cplx{0.3, -0.2}});
    CHECK((J + Eigen::Matrix2d::Identity()).cwiseAbs().maxCoeff() < 1e-9);
    CHECK(J.determinant() == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("jacobian_F matches the derivative of the closed form") {
    const cplx a{-0.5}, z1{0.8};
    const auto J = jacobian_F(std::vector<cplx>{a}, std::vector<cplx>{z1});
    // d c0/dx and d c0/dy from a tighter symmetric difference of the closed form
    const double h = 1e-5;
    const cplx dx = (closed_c0(z1 + h, a) - closed_c0(z1 - h, a)) / (2 * h);
    const cplx dy = (closed_c0(z1 + cplx{0, h}, a) - closed_c0(z1 - cplx{0, h}, a)) / (2 * h);
    CHECK(std::abs(J(0, 0) - dx.real()) < 1e-7);
    CHECK(std::abs(J(1, 0) - dx.imag()) < 1e-7);
    CHECK(std::abs(J(0, 1) - dy.real()) < 1e-7);
    CHECK(std::abs(J(1, 1) - dy.imag()) < 1e-7);
}

TEST_CASE("determinant of jacobian_F without anchors is nonnegative") {
    std::mt19937_64 rng(79);
    for (int trial = 0; trial < 200; ++trial) {
        const auto Z = separated_disk_points(rng, 1 + trial % 4, 0.95, 1e-3);
        REQUIRE(jacobian_F(std::vector<cplx>{}, Z).determinant() >= -1e-6);
    }
}

TEST_CASE("real coordinates are interleaved") {
    const std::vector<cplx> z{cplx{1, 2}, cplx{3, 4}};
    const auto x = to_real_coords(z);
    CHECK(vec_diff(x, Eigen::Vector4d(1, 2, 3, 4)) == 0.0);
    CHECK(from_real_coords(x) == z);
    CHECK_THROWS_AS(from_real_coords(Eigen::Vector3d(1, 2, 3)), InvalidInput);
}

TEST_CASE("central_difference_jacobian on a linear map") {
    Eigen::Matrix2d A;
    A << 1, 2, 3, 4;
    const auto J = central_difference_jacobian([&](const Eigen::VectorXd& x) -> Eigen::VectorXd { return A * x; },
                                               Eigen::Vector2d(0.1, 0.2), 1e-6);
    CHECK((J - A).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("jacobian_F rejects points too close to the circle") {
    CHECK_THROWS_AS(jacobian_F(std::vector<cplx>{}, std::vector<cplx>{1.0 - 1e-7}, 1e-6), InvalidInput);
}
