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
#include "opuc/szego.hpp"
#include "opuc/toeplitz.hpp"
#include "support.hpp"

using namespace opuc;
using opuc::testing::random_disk_points;

TEST_CASE("monic_op_from_moments examples") {
    CHECK(coeff_distance(monic_op_from_moments(MomentSeq({1.0, 0.0, 0.0}), 2), MonicPoly::monomial(2)) == 0.0);
    CHECK(coeff_distance(monic_op_from_moments(MomentSeq({1.0, 0.5, 0.25}), 2), MonicPoly({0.0, -0.5})) < 1e-15);

    const MomentSeq two_atoms({1.0, 0.0, 1.0});
    CHECK(coeff_distance(monic_op_from_moments(two_atoms, 1), MonicPoly::monomial(1)) < 1e-15);
    try {
        monic_op_from_moments(two_atoms, 2);
        FAIL("expected InsufficientSupport");
    } catch (const InsufficientSupport& e) {
        CHECK(e.order() == 2);
        CHECK(e.pivot() <= kLevinsonPivotFloor);
    }
}

TEST_CASE("reflection coefficients follow the fixed convention") {
    // zeros {1/2}: alpha_0 = 1/2 and Phi_1(0) = -1/2
    const auto lev = levinson(MomentSeq({1.0, 0.5, 0.25}), 2);
    REQUIRE(lev.reflections.size() == 2);
    CHECK(std::abs(lev.reflections[0] + 0.5) < 1e-15);
    CHECK(std::abs(lev.reflections[1]) < 1e-15);
    CHECK(lev.energies[1] == doctest::Approx(0.75));
}

TEST_CASE("Levinson agrees with the Szego path on Bernstein-Szego measures") {
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 150; ++trial) {
        const ZeroTuple z(random_disk_points(rng, 1 + trial % 8, 0.9));
        const auto alphas = poly_to_alphas(from_zeros(z));
        const auto expected = alphas_to_polys(alphas);
        const int n = static_cast<int>(z.size());
        const auto m = moments_of(MeasureSpec::bernstein_szego(z), n);
        const auto lev = levinson(m, n);
        for (int k = 0; k <= n; ++k) REQUIRE(coeff_distance(lev.polys[k], expected[k]) < 1e-8);
        for (int k = 0; k < n; ++k) REQUIRE(std::abs(lev.reflections[k] + std::conj(alphas[k])) < 1e-9);
        for (int k = 0; k <= n; ++k) REQUIRE(verify_orthogonality(lev.polys[k], m, 1e-9).pass);
    }
}

TEST_CASE("verify_orthogonality examples") {
    const auto bs = MeasureSpec::bernstein_szego(ZeroTuple({0.5}));
    auto r = verify_orthogonality(MonicPoly({-0.5}), bs, 1e-12);
    CHECK(r.pass);
    CHECK(r.order == 1);
    CHECK(r.residual < 1e-15);

    r = verify_orthogonality(MonicPoly::monomial(4), MeasureSpec::lebesgue(), 1e-12);
    CHECK(r.pass);
    CHECK(r.residual == 0.0);

    r = verify_orthogonality(MonicPoly({-0.6}), bs, 1e-12);
    CHECK_FALSE(r.pass);
    CHECK(r.residual == doctest::Approx(0.1).epsilon(1e-12));
}

TEST_CASE("inner products and norms") {
    const MomentSeq leb({1.0, 0.0, 0.0});
    const auto p = MonicPoly({0.5, 0.0});
    CHECK(l2_norm2(p, leb) == doctest::Approx(1.25));
    const std::vector<cplx> one{1.0}, z{0.0, 1.0};
    const MomentSeq m({1.0, 0.5});
    // <z, 1> = integral of e^{it} = m_{-1}
    CHECK(std::abs(inner_product(z, one, m) - m.at(-1)) < 1e-16);
}

TEST_CASE("minimality_check examples") {
    auto r = minimality_check(MonicPoly::monomial(3), MeasureSpec::lebesgue(), 50, 1);
    CHECK(r.pass);
    CHECK(r.norm2 == doctest::Approx(r.monomial_norm2));

    const auto bs = MeasureSpec::bernstein_szego(ZeroTuple({0.5}));
    r = minimality_check(MonicPoly({-0.5}), bs, 100, 2);
    CHECK(r.pass);
    CHECK(r.trials == 100);

    r = minimality_check(MonicPoly({-0.6}), bs, 100, 2);
    CHECK_FALSE(r.pass);
    CHECK(r.best_competitor < r.norm2);
}

TEST_CASE("levinson input errors") {
    CHECK_THROWS_AS(levinson(MomentSeq({1.0, 0.5}), 2), InvalidInput);
    CHECK_THROWS_AS(levinson(MomentSeq({1.0}), -1), InvalidInput);
}
