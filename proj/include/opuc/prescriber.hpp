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
#include <optional>
#include <vector>

#include "opuc/errors.hpp"
#include "opuc/geronimus.hpp"
#include "opuc/szego.hpp"

namespace opuc {

/// Find mu with Phi_n(mu) = target and every anchor a zero of Phi_N(mu),
/// N = n + anchors.size().
struct PrescriptionProblem {
    MonicPoly target;
    ZeroTuple anchors;

    /// Checks degree >= 1, at least one anchor, and target zeros in the disk.
    void validate() const;
};

struct SolveOptions {
    double tol = 1e-10;
    double r_max = 1.0 - 1e-6;
    int max_restarts = 10;
    std::uint64_t seed = 0;
    /// Initial continuation step; 0 stops at t = 0.
    double initial_dt = 0.1;
    double min_dt = 1e-6;
    int max_corrector_iterations = 50;
    /// Worker threads for restart attempts; results do not depend on it.
    int jobs = 1;
};

struct TracePoint {
    double t;
    std::vector<cplx> Z;
    int newton_iterations;
};

struct PrescriptionSolution {
    ZeroTuple Z_found;
    MonicPoly phi_N;
    AlphaSeq alphas;
    double residual_coeff = 0.0;   ///< ||F_A(Z) - M(target)||_inf
    double residual_anchor = 0.0;  ///< max_i |Phi_N(a_i)|
    double t_final = 0.0;
    int attempt = 0;               ///< 0 = straight path, k > 0 = k-th restart
    std::vector<TracePoint> trace;
};

/// Thrown when every continuation attempt stalls; carries the attempt that
/// got furthest in t.
class PrescriptionFailure : public SolverFailure {
public:
    PrescriptionFailure(const std::string& what, PrescriptionSolution best)
        : SolverFailure(what), best_(std::move(best)) {}
    const PrescriptionSolution& best() const noexcept { return best_; }

private:
    PrescriptionSolution best_;
};

/// Homotopy continuation on F_{tA}(Z) = M(target) from the zeros of the
/// target at t = 0 to t = 1, with damped Newton correction.
PrescriptionSolution solve(const PrescriptionProblem& problem, const SolveOptions& opts = {});

struct VerifyReport {
    double coeff_deviation = 0.0;          ///< Phi_n(mu) vs target, via quadrature + Levinson
    std::vector<double> anchor_residuals;  ///< |Phi_N(a_i)|
    double max_zero_modulus = 0.0;         ///< over all N zeros of Phi_N
    bool zeros_inside = false;
    int grid = 0;
};

/// Independent check of a solution: moments of mu_{Z,A} by trapezoid
/// quadrature, Phi_n by Levinson, compared against the target.
VerifyReport verify(const PrescriptionProblem& problem, const PrescriptionSolution& sol, int grid = 4096);

struct Preimage {
    std::vector<cplx> Z;
    double jacobian_det = 0.0;
    bool critical = false;  ///< Jacobian determinant numerically zero
};

/// Ordered tuples Z in the disk with F_0(Z) = q, found by multistart Newton
/// from `starts` seeded random points and clustered. n must be <= 3.
std::vector<Preimage> enumerate_preimages(const CoeffVector& q, int n, int starts, std::uint64_t seed);

}  // namespace opuc
