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

#include "opuc/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "opuc/toeplitz.hpp"

namespace opuc {

void ChainPlan::validate(int depth) const {
    if (degrees.empty() || degrees.front() != 0) throw InvalidInput("chain plan: degrees must start at n_0 = 0");
    for (std::size_t j = 1; j < degrees.size(); ++j)
        if (degrees[j] <= degrees[j - 1]) throw InvalidInput("chain plan: degrees must be strictly increasing");
    if (depth < 0 || depth >= static_cast<int>(degrees.size()))
        throw InvalidInput("chain plan: depth exceeds the number of stages");
    if (static_cast<int>(prescribed.size()) < degrees[static_cast<std::size_t>(depth)])
        throw InvalidInput("chain plan: not enough prescribed points for the requested depth");
    for (std::size_t i = 0; i < prescribed.size(); ++i) {
        if (!(std::abs(prescribed[i]) < 1.0)) {
            std::ostringstream os;
            os << "chain plan: prescribed point " << i << " = " << prescribed[i] << " is outside the open disk";
            throw InvalidInput(os.str());
        }
    }
}

ChainResult chain_prescribe(const ChainPlan& plan, int depth, const SolveOptions& opts) {
    plan.validate(depth);
    ChainResult res;
    MonicPoly phi;  // Phi_{n_{j-1}}
    for (int j = 1; j <= depth; ++j) {
        const int lo = plan.degrees[static_cast<std::size_t>(j - 1)];
        const int hi = plan.degrees[static_cast<std::size_t>(j)];
        std::vector<cplx> block(plan.prescribed.begin() + lo, plan.prescribed.begin() + hi);

        std::vector<cplx> zeros;
        MonicPoly next;
        if (lo == 0) {
            // nothing inherited: the Bernstein-Szego measure of the block itself
            next = from_zeros(block);
            zeros = block;
        } else {
            PrescriptionProblem problem{phi, ZeroTuple(block)};
            SolveOptions stage_opts = opts;
            stage_opts.seed = opts.seed + static_cast<std::uint64_t>(j);
            try {
                auto sol = solve(problem, stage_opts);
                next = sol.phi_N;
                zeros.assign(sol.Z_found.points().begin(), sol.Z_found.points().end());
                zeros.insert(zeros.end(), block.begin(), block.end());
            } catch (const PrescriptionFailure& e) {
                std::ostringstream os;
                os << "chain stage " << j << " (degree " << lo << " -> " << hi << ") failed: " << e.what();
                throw ChainFailure(os.str(), res);
            }
        }

        AlphaSeq alphas;
        try {
            alphas = poly_to_alphas(next);
        } catch (const Error& e) {
            throw ChainFailure(std::string("chain stage ") + std::to_string(j) + ": " + e.what(), res);
        }
        double drift = 0.0;
        for (int k = 0; k < lo; ++k)
            drift = std::max(drift, std::abs(alphas[static_cast<std::size_t>(k)] - res.alphas[static_cast<std::size_t>(k)]));
        if (!(drift <= kPrefixTolerance)) {
            std::ostringstream os;
            os << "chain stage " << j << ": inherited Verblunsky coefficients moved by " << drift;
            throw ChainFailure(os.str(), res);
        }

        res.alphas = std::move(alphas);
        res.polys.push_back(next);
        res.clouds.push_back(ZeroCloud{hi, std::move(zeros), j});
        res.prefix_drift.push_back(drift);
        res.stages_done = j;
        phi = std::move(next);
    }
    return res;
}

UniversalResult universal_measure(const std::vector<ZeroTarget>& targets, int max_stage, const SolveOptions& opts,
                                  int moment_order) {
    if (targets.empty()) throw InvalidInput("universal_measure: need at least one target");
    if (max_stage < 1 || max_stage > 5) throw InvalidInput("universal_measure: max_stage must be in 1..5 (degree <= 120)");
    UniversalResult out;
    out.moment_order = moment_order;

    ChainPlan plan;
    plan.degrees.push_back(0);
    int fact = 1;
    for (int k = 1; k <= max_stage; ++k) {
        fact *= k;
        const int prev = plan.degrees.back();
        plan.degrees.push_back(fact);
        const std::size_t which = static_cast<std::size_t>(k - 1) % targets.size();
        out.target_index.push_back(static_cast<int>(which));
        for (int i = 1; i <= fact - prev; ++i) {
            cplx z = sample_target(targets[which], i);
            const double cap = 1.0 - 1e-3;
            if (std::abs(z) > cap) z *= cap / std::abs(z);
            plan.prescribed.push_back(z);
        }
    }
    out.degrees = plan.degrees;
    out.chain = chain_prescribe(plan, max_stage, opts);
    for (int k = 1; k <= max_stage; ++k) {
        const auto& cloud = out.chain.clouds[static_cast<std::size_t>(k - 1)];
        const auto& target = targets[static_cast<std::size_t>(out.target_index[static_cast<std::size_t>(k - 1)])];
        out.distances.push_back(moment_distance(counting_measure(cloud), target, moment_order));
    }
    return out;
}

double beta_solve(cplx P, cplx Q, cplx S, double pi_n, double kappa_n) {
    if (!(pi_n > 0.0) || !(kappa_n > 0.0)) throw InvalidInput("beta_solve: pi_n and kappa_n must be positive");
    const cplx d = P - Q;
    const double len2 = std::norm(d);
    if (len2 == 0.0) throw InvalidInput("beta_solve: P and Q coincide");
    double lambda = ((S - Q) * std::conj(d)).real() / len2;
    const double off = std::abs(S - (lambda * P + (1.0 - lambda) * Q));
    if (off > 1e-9 || lambda < -1e-9 || lambda > 1.0 + 1e-9) {
        std::ostringstream os;
        os << "beta_solve: S = " << S << " is not on the segment [P, Q] (offset " << off << ", parameter " << lambda << ")";
        throw InvalidInput(os.str());
    }
    lambda = std::clamp(lambda, 0.0, 1.0);
    const double a = lambda * kappa_n * kappa_n;
    const double b = (1.0 - lambda) * pi_n * pi_n;
    return a / (a + b);
}

namespace {

struct StageCheck {
    LimitStageReport report;
    std::vector<cplx> even_zeros;
    std::vector<cplx> odd_zeros;
};

// Conditions (C), (B) and (A) for stage k on the given Levinson polynomials.
StageCheck check_stage(int k, const std::vector<cplx>& P, cplx S_k, double gamma, const LevinsonResult& lev) {
    StageCheck out;
    auto& rep = out.report;
    rep.n = k;
    rep.gamma = gamma;
    const int m = 2 * k;

    out.even_zeros = roots(lev.polys[static_cast<std::size_t>(m)]);
    out.odd_zeros = roots(lev.polys[static_cast<std::size_t>(m + 1)]);

    // nearest earlier atom for every zero; disks of radius gamma are disjoint
    auto nearest = [&](cplx z) {
        int best = 0;
        for (int j = 1; j < m; ++j)
            if (std::abs(z - P[static_cast<std::size_t>(j)]) < std::abs(z - P[static_cast<std::size_t>(best)])) best = j;
        return best;
    };

    std::ostringstream why;
    bool ok = true;
    std::vector<int> used(static_cast<std::size_t>(m), 0);
    for (const auto& z : out.even_zeros) {
        const int j = nearest(z);
        const double d = std::abs(z - P[static_cast<std::size_t>(j)]);
        rep.even_distances.push_back(d);
        if (!(d < gamma)) {
            ok = false;
            why << "Phi_" << m << " zero " << z << " is " << d << " from P_" << j + 1 << " (gamma " << gamma << "); ";
        } else if (used[static_cast<std::size_t>(j)]++) {
            ok = false;
            why << "Phi_" << m << " has two zeros near P_" << j + 1 << "; ";
        }
    }

    used.assign(static_cast<std::size_t>(m), 0);
    std::vector<cplx> loose;
    for (const auto& z : out.odd_zeros) {
        const int j = nearest(z);
        const double d = std::abs(z - P[static_cast<std::size_t>(j)]);
        if (d < gamma) {
            rep.odd_distances.push_back(d);
            if (used[static_cast<std::size_t>(j)]++) {
                ok = false;
                why << "Phi_" << m + 1 << " has two zeros near P_" << j + 1 << " (ambiguous pairing); ";
            }
        } else {
            loose.push_back(z);
        }
    }
    if (loose.size() != 1) {
        ok = false;
        why << "Phi_" << m + 1 << " has " << loose.size() << " zeros outside the gamma-disks (expected 1); ";
        rep.wandering_distance = std::numeric_limits<double>::infinity();
        if (!loose.empty()) rep.wandering_zero = loose.front();
    } else {
        rep.wandering_zero = loose.front();
        rep.wandering_distance = std::abs(loose.front() - S_k);
        if (!(rep.wandering_distance < 1.0 / k)) {
            ok = false;
            why << "wandering zero " << loose.front() << " is " << rep.wandering_distance << " from S_" << k << "; ";
        }
    }
    rep.pass = ok;
    rep.detail = why.str();
    return out;
}

double min_pairwise_distance(const std::vector<cplx>& P, std::size_t count) {
    double d = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = i + 1; j < count; ++j) d = std::min(d, std::abs(P[i] - P[j]));
    return d;
}

MeasureSpec build_atomic(const std::vector<cplx>& P, const std::vector<double>& eps, const std::vector<double>& beta) {
    std::vector<Atom> atoms;
    for (std::size_t k = 0; k < eps.size(); ++k) {
        atoms.push_back({P[2 * k], eps[k] * beta[k]});
        atoms.push_back({P[2 * k + 1], eps[k] * (1.0 - beta[k])});
    }
    return MeasureSpec::atomic(std::move(atoms));
}

}  // namespace

LimitSetResult limitset_measure(const std::vector<cplx>& P, const std::vector<cplx>& S, int n_max,
                                const LimitSetOptions& opts) {
    if (n_max < 0) throw InvalidInput("limitset: n_max must be nonnegative");
    const std::size_t atoms = 2 * static_cast<std::size_t>(n_max) + 2;
    if (P.size() < atoms) throw InvalidInput("limitset: need P_1 .. P_{2 n_max + 2}");
    if (S.size() < static_cast<std::size_t>(n_max) + 1) throw InvalidInput("limitset: need S_0 .. S_{n_max}");
    for (std::size_t i = 0; i < atoms; ++i)
        if (std::abs(std::abs(P[i]) - 1.0) > 1e-12) throw InvalidInput("limitset: P_" + std::to_string(i + 1) + " is not on the unit circle");
    if (min_pairwise_distance(P, atoms) < 1e-6) throw InvalidInput("limitset: atoms closer than 1e-6");

    LimitSetResult res;
    res.gammas.push_back(0.0);
    std::vector<int> halvings_used{0};
    for (int n = 0; n <= n_max; ++n) {
        const std::size_t i1 = 2 * static_cast<std::size_t>(n), i2 = i1 + 1;
        double pi_n = 1.0, kappa_n = 1.0;
        for (std::size_t j = 0; j < i1; ++j) {
            pi_n *= std::abs(P[i1] - P[j]);
            kappa_n *= std::abs(P[i2] - P[j]);
        }
        const double beta = beta_solve(P[i1], P[i2], S[static_cast<std::size_t>(n)], pi_n, kappa_n);
        if (!(beta > 0.0 && beta < 1.0))
            throw InvalidInput("limitset: S_" + std::to_string(n) + " must lie strictly inside its segment");
        res.betas.push_back(beta);
        if (n == 0) {
            res.epsilons.push_back(1.0);
            continue;
        }
        res.gammas.push_back(std::min(1.0 / n, 0.5 * min_pairwise_distance(P, i2 + 1)));

        double eps = res.epsilons.back() / 4.0;
        bool passed = false;
        std::vector<StageCheck> checks;
        int halvings = 0;
        for (; halvings <= opts.max_halvings; ++halvings, eps *= 0.5) {
            auto eps_try = res.epsilons;
            eps_try.push_back(eps);
            const auto mu = build_atomic(P, eps_try, res.betas);
            checks.clear();
            try {
                const auto lev = levinson(moments_of(mu, 2 * n + 1), 2 * n + 1);
                bool all = true;
                for (int k = 1; k <= n; ++k) {
                    checks.push_back(check_stage(k, P, S[static_cast<std::size_t>(k)],
                                                 res.gammas[static_cast<std::size_t>(k)], lev));
                    all = all && checks.back().report.pass;
                }
                if (all) {
                    passed = true;
                    break;
                }
            } catch (const Error&) {
                // Levinson pivot or root finder gave out; a smaller epsilon will not help
                break;
            }
        }
        if (!passed) {
            std::ostringstream os;
            os << "limitset: stage " << n << " failed verification after " << halvings << " halvings";
            if (!checks.empty()) {
                for (const auto& c : checks)
                    if (!c.report.pass) os << "; stage " << c.report.n << ": " << c.report.detail;
            }
            res.measure = build_atomic(P, res.epsilons, std::vector<double>(res.betas.begin(), res.betas.end() - 1));
            throw LimitSetFailure(os.str(), n, res);
        }
        res.epsilons.push_back(eps);
        halvings_used.push_back(halvings);
        res.stages.clear();
        for (auto& c : checks) {
            const auto k = static_cast<std::size_t>(c.report.n);
            c.report.epsilon = res.epsilons[k];
            c.report.beta = res.betas[k];
            c.report.halvings = halvings_used[k];
            res.stages.push_back(c.report);
        }
    }

    res.measure = build_atomic(P, res.epsilons, res.betas);
    res.tail_bound = res.epsilons.back();

    // zero clouds of Phi_1 .. Phi_{2 n_max + 1} for the final measure
    const auto lev = levinson(moments_of(res.measure, 2 * n_max + 1), 2 * n_max + 1);
    for (int d = 1; d <= 2 * n_max + 1; ++d)
        res.clouds.push_back(ZeroCloud{d, roots(lev.polys[static_cast<std::size_t>(d)]), d / 2});
    return res;
}

}  // namespace opuc
