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

#include <optional>
#include <vector>

#include "opuc/measure.hpp"
#include "opuc/prescriber.hpp"
#include "opuc/szego.hpp"
#include "opuc/zerodist.hpp"

namespace opuc {

/// Degrees 0 = n_0 < n_1 < ... and the points a_1, a_2, ...; the points
/// a_i with n_{j-1} < i <= n_j must be zeros of Phi_{n_j}.
struct ChainPlan {
    std::vector<int> degrees;
    std::vector<cplx> prescribed;

    void validate(int depth) const;
};

struct ChainResult {
    AlphaSeq alphas;                  ///< Verblunsky coefficients of the final measure
    std::vector<MonicPoly> polys;     ///< Phi_{n_j} per completed stage
    std::vector<ZeroCloud> clouds;    ///< zeros of Phi_{n_j} per completed stage
    std::vector<double> prefix_drift; ///< max change of the inherited alphas per stage
    int stages_done = 0;
};

class ChainFailure : public SolverFailure {
public:
    ChainFailure(const std::string& what, ChainResult partial)
        : SolverFailure(what), partial_(std::move(partial)) {}
    const ChainResult& partial() const noexcept { return partial_; }

private:
    ChainResult partial_;
};

/// Tolerance on the inherited Verblunsky prefix between stages.
inline constexpr double kPrefixTolerance = 1e-8;

/// Runs `depth` stages of chained prescription; stage j solves for
/// Phi_{n_j} with target Phi_{n_{j-1}} and the block's points as anchors.
ChainResult chain_prescribe(const ChainPlan& plan, int depth, const SolveOptions& opts = {});

struct UniversalResult {
    ChainResult chain;
    std::vector<int> degrees;         ///< 0, 1!, 2!, ...
    std::vector<int> target_index;    ///< target used by each stage
    std::vector<double> distances;    ///< moment_distance(nu_{k!}, target), K = moment_order
    int moment_order = 2;
};

/// Chained prescription along the factorial degrees k!, k = 1..max_stage;
/// stage k prescribes k! - (k-1)! low-discrepancy samples of target
/// (k-1) mod targets.size(), clipped to modulus <= 1 - 1e-3.
UniversalResult universal_measure(const std::vector<ZeroTarget>& targets, int max_stage, const SolveOptions& opts = {},
                                  int moment_order = 2);

/// beta in [0, 1] for which S minimizes
/// beta pi^2 |P - s|^2 + (1 - beta) kappa^2 |Q - s|^2 over s.
double beta_solve(cplx P, cplx Q, cplx S, double pi_n, double kappa_n);

/// Measured distances for one stage n >= 1 of the limit-set construction.
struct LimitStageReport {
    int n = 0;
    double epsilon = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
    int halvings = 0;
    std::vector<double> even_distances;  ///< Phi_{2n} zeros to their P_j (condition C)
    std::vector<double> odd_distances;   ///< Phi_{2n+1} zeros to their P_j (condition B)
    cplx wandering_zero{};
    double wandering_distance = 0.0;     ///< to S_n (condition A)
    bool pass = false;
    std::string detail;
};

struct LimitSetOptions {
    int max_halvings = 40;
};

struct LimitSetResult {
    MeasureSpec measure = MeasureSpec::lebesgue();
    std::vector<double> epsilons;
    std::vector<double> betas;
    std::vector<double> gammas;   ///< gammas[0] unused (stage 0 has no checks)
    std::vector<ZeroCloud> clouds;  ///< zeros of Phi_1 .. Phi_{2 n_max + 1}
    std::vector<LimitStageReport> stages;  ///< n = 1 .. n_max
    double tail_bound = 0.0;      ///< mass of the truncated tail is below this
};

class LimitSetFailure : public SolverFailure {
public:
    LimitSetFailure(const std::string& what, int stage, LimitSetResult partial)
        : SolverFailure(what), stage_(stage), partial_(std::move(partial)) {}
    int stage() const noexcept { return stage_; }
    const LimitSetResult& partial() const noexcept { return partial_; }

private:
    int stage_;
    LimitSetResult partial_;
};

/// Atomic measure sum_n eps_n (beta_n delta_{P_{2n+1}} + (1 - beta_n) delta_{P_{2n+2}}),
/// n = 0..n_max, whose odd-degree orthogonal polynomials carry one zero near
/// S_n and whose remaining zeros sit near the earlier atoms.
/// P holds P_1..P_{2 n_max + 2}; S holds S_0..S_{n_max}.
LimitSetResult limitset_measure(const std::vector<cplx>& P, const std::vector<cplx>& S, int n_max,
                                const LimitSetOptions& opts = {});

}  // namespace opuc
