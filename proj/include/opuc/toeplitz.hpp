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

#pragma once

#include <cstdint>
#include <vector>

#include "opuc/measure.hpp"
#include "opuc/poly.hpp"

namespace opuc {

/// Output of the Levinson-Durbin recursion on a Hermitian Toeplitz moment
/// matrix.
struct LevinsonResult {
    std::vector<MonicPoly> polys;    ///< Phi_0 .. Phi_n
    std::vector<cplx> reflections;   ///< Phi_{k+1}(0) = -conj(alpha_k), k < n
    std::vector<double> energies;    ///< ||Phi_k||^2, k = 0..n
};

/// Pivot threshold on ||Phi_k||^2 / m_0 below which the moment matrix is
/// declared singular.
inline constexpr double kLevinsonPivotFloor = 1e-12;

/// Runs Levinson-Durbin up to order n. Throws InsufficientSupport naming
/// the first order whose pivot falls under the floor.
LevinsonResult levinson(const MomentSeq& m, int n);

/// Monic orthogonal polynomial of degree n computed from moments only.
MonicPoly monic_op_from_moments(const MomentSeq& m, int n);

/// <p, q> in L^2(mu) from the moments.
cplx inner_product(std::span<const cplx> p, std::span<const cplx> q, const MomentSeq& m);

/// ||p||^2 in L^2(mu).
double l2_norm2(const MonicPoly& p, const MomentSeq& m);

struct OrthogonalityReport {
    int order = 0;
    double residual = 0.0;  ///< max_{k<n} |<phi, z^k>|
    bool pass = false;
};

OrthogonalityReport verify_orthogonality(const MonicPoly& phi, const MomentSeq& m, double tol);
OrthogonalityReport verify_orthogonality(const MonicPoly& phi, const MeasureSpec& mu, double tol);

struct MinimalityReport {
    bool pass = false;
    double norm2 = 0.0;             ///< ||phi||^2
    double best_competitor = 0.0;   ///< smallest competitor ||q||^2 seen
    double monomial_norm2 = 0.0;    ///< ||z^n||^2
    int trials = 0;
};

/// Compares ||phi||^2 against z^n and `trials` random monic competitors of
/// the same degree. Half the competitors have coefficients drawn uniformly in
/// the radius-2 disk; the other half are random perturbations of phi at
/// scales 1e-1 .. 1e-4, which detect any first-order descent direction.
MinimalityReport minimality_check(const MonicPoly& phi, const MeasureSpec& mu, int trials, std::uint64_t seed);

}  // namespace opuc
