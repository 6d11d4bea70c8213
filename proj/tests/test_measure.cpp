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

#include "opuc/errors.hpp"
#include "opuc/measure.hpp"
#include "opuc/szego.hpp"
#include "support.hpp"

using namespace opuc;
using opuc::testing::max_abs_diff;
using opuc::testing::random_disk_points;

namespace {
const cplx I{0.0, 1.0};
constexpr double kPi = std::numbers::pi;

// Trapezoid rule for the unnormalized weight 1 / prod |e^{it} - z_j|^2.
double weight_integral(std::span<const cplx> zs, int grid) {
    double s = 0.0;
    for (int k = 0; k < grid; ++k) {
        const cplx e = std::polar(1.0, 2.0 * kPi * k / grid);
        double w = 1.0;
        for (auto z : zs) w /= std::norm(e - z);
        s += w;
    }
    return s * 2.0 * kPi / grid;
}
}  // namespace

TEST_CASE("bs_normalizer examples") {
    CHECK(bs_normalizer(ZeroTuple{}) == doctest::Approx(1.0 / (2.0 * kPi)).epsilon(1e-15));
    const cplx a{0.3, 0.4};
    CHECK(bs_normalizer(ZeroTuple({a, 0.0})) == doctest::Approx(bs_normalizer(ZeroTuple({a}))).epsilon(1e-14));
    CHECK(bs_normalizer(ZeroTuple({0.5})) == doctest::Approx(3.0 / (8.0 * kPi)).epsilon(1e-14));
}

TEST_CASE("bs_normalizer agrees with quadrature of the weight") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 50; ++trial) {
        const auto zs = random_disk_points(rng, 1 + trial % 8, 0.9);
        const double d = bs_normalizer(ZeroTuple(zs));
        REQUIRE(std::abs(d * weight_integral(zs, 4096) - 1.0) < 1e-10);
    }
}

TEST_CASE("moments_of examples") {
    auto m = moments_of(MeasureSpec::lebesgue(), 2);
    CHECK(max_abs_diff(m.values(), std::vector<cplx>{1.0, 0.0, 0.0}) < 1e-16);
    m = moments_of(MeasureSpec::bernstein_szego(ZeroTuple({0.5})), 2);
    CHECK(max_abs_diff(m.values(), std::vector<cplx>{1.0, 0.5, 0.25}) < 1e-15);
    m = moments_of(MeasureSpec::atomic({{1.0, 0.5}, {-1.0, 0.5}}), 2);
    CHECK(max_abs_diff(m.values(), std::vector<cplx>{1.0, 0.0, 1.0}) < 1e-15);
}

TEST_CASE("mixture moments are the scaled sum") {
    const auto a = MeasureSpec::bernstein_szego(ZeroTuple({0.5 * I}), 2.0);
    const auto b = MeasureSpec::atomic({{I, 1.0}});
    const auto mix = MeasureSpec::mixture({{0.25, a}, {3.0, b}});
    const auto ma = moments_of(a, 4), mb = moments_of(b, 4), mm = moments_of(mix, 4);
    for (int k = -4; k <= 4; ++k) CHECK(std::abs(mm.at(k) - (0.25 * ma.at(k) + 3.0 * mb.at(k))) < 1e-15);
    CHECK(mix.total_mass() == doctest::Approx(3.5));
}

TEST_CASE("alphas_to_moments examples") {
    CHECK(max_abs_diff(alphas_to_moments(AlphaSeq{}, 1.0, 3).values(), std::vector<cplx>{1.0, 0.0, 0.0, 0.0}) < 1e-16);
    CHECK(max_abs_diff(alphas_to_moments(AlphaSeq({0.5}), 1.0, 2).values(), std::vector<cplx>{1.0, 0.5, 0.25}) < 1e-15);
    // Phi_1 = z - a forces the integral of e^{it} to be a
    const cplx a{0.2, -0.6};
    const auto m = alphas_to_moments(AlphaSeq({std::conj(a)}), 1.0, 1);
    CHECK(std::abs(m.at(-1) - a) < 1e-15);
    CHECK(std::abs(m.at(1) - std::conj(a)) < 1e-15);
    CHECK(alphas_to_moments(AlphaSeq({0.5}), 3.0, 2).mass() == 3.0);
}

TEST_CASE("quadrature_moments examples") {
    CHECK(max_abs_diff(quadrature_moments(ZeroTuple{}, 1.0, 2, 4096).values(), std::vector<cplx>{1.0, 0.0, 0.0}) < 1e-14);
    CHECK(max_abs_diff(quadrature_moments(ZeroTuple({0.5}), 1.0, 2, 4096).values(), std::vector<cplx>{1.0, 0.5, 0.25}) < 1e-12);
    const ZeroTuple z({0.5, 0.5 * I});
    const auto exact = alphas_to_moments(poly_to_alphas(from_zeros(z)), 1.0, 1);
    CHECK(max_abs_diff(quadrature_moments(z, 1.0, 1, 4096).values(), exact.values()) < 1e-10);
}

TEST_CASE("quadrature agrees with the algebraic path") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 100; ++trial) {
        const ZeroTuple z(random_disk_points(rng, 1 + trial % 8, 0.9));
        const int K = 10;
        const auto exact = alphas_to_moments(poly_to_alphas(from_zeros(z)), 1.0, K);
        REQUIRE(max_abs_diff(quadrature_moments(z, 1.0, K, 4096).values(), exact.values()) < 1e-9);
    }
}

TEST_CASE("quadrature rejects grids that are too coarse or not powers of two") {
    CHECK_THROWS_AS(quadrature_moments(ZeroTuple({0.5}), 1.0, 2, 1000), InvalidInput);
    CHECK_THROWS_AS(quadrature_moments(ZeroTuple({0.5}), 1.0, 16, 64), InvalidInput);
    CHECK_THROWS_AS(quadrature_moments(ZeroTuple({0.999}), 1.0, 2, 64), InvalidInput);
    CHECK(required_quadrature_grid(ZeroTuple({0.999}), 2) > 30000);
}

TEST_CASE("Toeplitz matrices of produced moments are positive semidefinite") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 60; ++trial) {
        const ZeroTuple z(random_disk_points(rng, 1 + trial % 8, 0.9));
        const auto m = moments_of(MeasureSpec::bernstein_szego(z, 1.0 + trial), 8);
        REQUIRE(toeplitz_min_eigenvalue(m) >= -1e-10 * m.mass());
    }
    const auto atoms = moments_of(MeasureSpec::atomic({{1.0, 0.5}, {-1.0, 0.5}}), 4);
    CHECK(toeplitz_min_eigenvalue(atoms) >= -1e-10);
}

TEST_CASE("measure constructors validate their input") {
    CHECK_THROWS_AS(MeasureSpec::bernstein_szego(ZeroTuple({0.5}), 0.0), InvalidInput);
    CHECK_THROWS_AS(MeasureSpec::bernstein_szego(ZeroTuple({1.0 - 1e-13})), NearBoundary);
    CHECK_THROWS_AS(MeasureSpec::atomic({}), InvalidInput);
    CHECK_THROWS_AS(MeasureSpec::atomic({{0.5, 1.0}}), InvalidInput);
    CHECK_THROWS_AS(MeasureSpec::atomic({{1.0, -1.0}}), InvalidInput);
    CHECK_THROWS_AS(MeasureSpec::atomic({{1.0, 1.0}, {1.0, 2.0}}), InvalidInput);
    CHECK_THROWS_AS(MeasureSpec::mixture({}), InvalidInput);
    CHECK_THROWS_AS(MomentSeq({cplx{1.0, 0.5}}), InvalidInput);
    CHECK_THROWS_AS(MomentSeq({-1.0}), InvalidInput);
    CHECK_THROWS_AS(MomentSeq({1.0, 0.5}).at(2), InvalidInput);
}
