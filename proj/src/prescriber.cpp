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

#include "opuc/prescriber.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "opuc/measure.hpp"
#include "opuc/toeplitz.hpp"

namespace opuc {

void PrescriptionProblem::validate() const {
    if (target.degree() < 1) throw InvalidInput("prescription target must have degree >= 1");
    if (anchors.empty()) throw InvalidInput("prescription needs at least one anchor (N > n)");
    const auto zs = roots(target);
    for (const auto& z : zs) {
        if (!(std::abs(z) < 1.0)) {
            std::ostringstream os;
            os << "prescription target has a zero " << z << " outside the open unit disk";
            throw InvalidInput(os.str());
        }
    }
}

namespace {

constexpr int kMaxVerifyGrid = 1 << 22;

std::mt19937_64 stream_for(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    return std::mt19937_64(seq);
}

cplx random_disk_point(std::mt19937_64& rng, double radius) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    return std::polar(radius * std::sqrt(unit(rng)), 2.0 * std::numbers::pi * unit(rng));
}

double max_modulus(std::span<const cplx> z) {
    double m = 0.0;
    for (const auto& v : z) m = std::max(m, std::abs(v));
    return m;
}

// Anchor path t -> A(t) with A(0) = 0 and A(1) = A; restarts bend it by t(1-t) B.
struct AnchorPath {
    std::vector<cplx> end;
    std::vector<cplx> bend;

    std::vector<cplx> at(double t) const {
        std::vector<cplx> a(end.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            a[i] = t * end[i];
            if (!bend.empty()) a[i] += t * (1.0 - t) * bend[i];
        }
        return a;
    }
};

struct CorrectorResult {
    bool ok = false;
    int iterations = 0;
    double residual = std::numeric_limits<double>::infinity();
};

class Continuation {
public:
    Continuation(const CoeffVector& m0, AnchorPath path, const SolveOptions& opts)
        : m0_(m0), path_(std::move(path)), opts_(opts) {}

    double residual_norm(const std::vector<cplx>& A, const std::vector<cplx>& Z) const {
        return (F(A, Z) - m0_).lpNorm<Eigen::Infinity>();
    }

    // Damped Newton on F_{A(t)}(Z) = m0; Z is updated in place only on success.
    CorrectorResult correct(double t, std::vector<cplx>& Z, double ctol) const {
        const auto A = path_.at(t);
        std::vector<cplx> cur = Z;
        CorrectorResult res;
        try {
            res.residual = residual_norm(A, cur);
            for (int it = 0; it <= opts_.max_corrector_iterations; ++it) {
                res.iterations = it;
                if (res.residual <= ctol) {
                    res.ok = true;
                    Z = std::move(cur);
                    return res;
                }
                if (it == opts_.max_corrector_iterations) break;
                const Eigen::MatrixXd J = jacobian_F(A, cur);
                Eigen::PartialPivLU<Eigen::MatrixXd> lu(J);
                if (!(lu.rcond() > 1e-13)) return res;
                const Eigen::VectorXd r = F(A, cur) - m0_;
                const Eigen::VectorXd delta = lu.solve(-r);
                const Eigen::VectorXd x = to_real_coords(cur);
                bool accepted = false;
                for (double s = 1.0; s >= 1.0 / 1024.0; s *= 0.5) {
                    auto trial = from_real_coords(x + s * delta);
                    if (!(max_modulus(trial) < opts_.r_max)) continue;
                    double rt;
                    try {
                        rt = residual_norm(A, trial);
                    } catch (const Error&) {
                        continue;
                    }
                    if (rt < res.residual) {
                        cur = std::move(trial);
                        res.residual = rt;
                        accepted = true;
                        break;
                    }
                }
                if (!accepted) return res;
            }
        } catch (const Error&) {
            // a Jacobian stencil or inverse step touched the boundary
        }
        return res;
    }

    const AnchorPath& path() const { return path_; }

private:
    CoeffVector m0_;
    AnchorPath path_;
    const SolveOptions& opts_;
};

struct Attempt {
    bool ok = false;
    std::string why;
    std::vector<cplx> Z;
    double t = 0.0;
    std::vector<TracePoint> trace;
    std::vector<cplx> anchors_end;
};

Attempt run_attempt(const PrescriptionProblem& problem, const CoeffVector& m0, const std::vector<cplx>& Z0,
                    const SolveOptions& opts, int index) {
    auto rng = stream_for(opts.seed, static_cast<std::uint64_t>(index));
    AnchorPath path;
    path.end.assign(problem.anchors.points().begin(), problem.anchors.points().end());

    std::vector<cplx> Z = Z0;
    if (index > 0) {
        std::shuffle(Z.begin(), Z.end(), rng);
        for (auto& z : Z) {
            z += random_disk_point(rng, 1e-3);
            if (std::abs(z) >= opts.r_max) z *= 0.999 * opts.r_max / std::abs(z);
        }
        path.bend.resize(path.end.size());
        for (std::size_t i = 0; i < path.end.size(); ++i)
            path.bend[i] = random_disk_point(rng, 0.5 * (1.0 - std::abs(path.end[i])));
    }

    Continuation cont(m0, path, opts);
    const double path_tol = std::max(opts.tol, 1e-9);
    Attempt out;
    out.anchors_end = path.end;

    auto first = cont.correct(0.0, Z, path_tol);
    if (!first.ok) {
        out.why = "corrector failed at t = 0";
        out.Z = Z;
        return out;
    }
    out.trace.push_back({0.0, Z, first.iterations});
    out.Z = Z;

    if (opts.initial_dt <= 0.0) {
        out.why = "continuation step is zero; stopped at t = 0";
        return out;
    }

    double t = 0.0;
    double dt = opts.initial_dt;
    std::vector<cplx> prev_Z;
    double prev_t = 0.0;
    bool have_prev = false;
    while (t < 1.0) {
        const double t_new = std::min(1.0, t + dt);
        std::vector<cplx> guess = Z;
        if (have_prev) {
            const double ratio = (t_new - t) / (t - prev_t);
            for (std::size_t j = 0; j < guess.size(); ++j) guess[j] = Z[j] + ratio * (Z[j] - prev_Z[j]);
            if (!(max_modulus(guess) < opts.r_max)) guess = Z;
        }
        const double ctol = t_new == 1.0 ? opts.tol : path_tol;
        auto step = cont.correct(t_new, guess, ctol);
        if (!step.ok) {
            dt *= 0.5;
            if (dt < opts.min_dt) {
                std::ostringstream os;
                os << "continuation stalled at t = " << t << " (step below " << opts.min_dt << ")";
                out.why = os.str();
                return out;
            }
            continue;
        }
        prev_Z = Z;
        prev_t = t;
        have_prev = true;
        Z = std::move(guess);
        t = t_new;
        out.trace.push_back({t, Z, step.iterations});
        out.Z = Z;
        out.t = t;
        if (step.iterations <= 3) dt = std::min(0.25, dt * 1.5);
    }
    out.ok = true;
    return out;
}

PrescriptionSolution finish(const PrescriptionProblem& problem, const CoeffVector& m0, const Attempt& a, int index) {
    PrescriptionSolution sol;
    sol.attempt = index;
    sol.trace = a.trace;
    sol.t_final = a.t;
    sol.Z_found = ZeroTuple(a.Z);
    // anchors actually reached along the path (t < 1 only on failure)
    AnchorPath p{a.anchors_end, {}};
    const auto anchors_t = a.t == 1.0 ? a.anchors_end : p.at(a.t);
    std::vector<cplx> all = a.Z;
    all.insert(all.end(), anchors_t.begin(), anchors_t.end());
    sol.phi_N = from_zeros(all);
    try {
        sol.alphas = poly_to_alphas(sol.phi_N);
    } catch (const Error&) {
        sol.alphas = AlphaSeq{};
    }
    sol.residual_coeff = (F(anchors_t, a.Z) - m0).lpNorm<Eigen::Infinity>();
    for (const auto& anchor : problem.anchors.points())
        sol.residual_anchor = std::max(sol.residual_anchor, std::abs(sol.phi_N(anchor)));
    return sol;
}

}  // namespace

PrescriptionSolution solve(const PrescriptionProblem& problem, const SolveOptions& opts) {
    problem.validate();
    if (!(opts.r_max > 0.0 && opts.r_max < 1.0)) throw InvalidInput("solve: r_max must lie in (0, 1)");
    const CoeffVector m0 = map_M(problem.target);
    const auto Z0 = roots(problem.target, RootOptions{.tol = 1e-14, .seed = opts.seed});
    if (!(max_modulus(Z0) < opts.r_max)) throw InvalidInput("solve: target has a zero outside r_max");

    if (opts.initial_dt <= 0.0) {
        auto a = run_attempt(problem, m0, Z0, opts, 0);
        return finish(problem, m0, a, 0);
    }

    const int total = opts.max_restarts + 1;
    const int jobs = std::max(1, opts.jobs);
    Attempt best;
    int best_index = 0;
    bool have_best = false;
    for (int base = 0; base < total; base += jobs) {
        const int count = std::min(jobs, total - base);
        std::vector<Attempt> batch(static_cast<std::size_t>(count));
        if (count == 1) {
            batch[0] = run_attempt(problem, m0, Z0, opts, base);
        } else {
            std::vector<std::future<Attempt>> futs;
            for (int k = 0; k < count; ++k)
                futs.push_back(std::async(std::launch::async, run_attempt, std::cref(problem), std::cref(m0),
                                          std::cref(Z0), std::cref(opts), base + k));
            for (int k = 0; k < count; ++k) batch[static_cast<std::size_t>(k)] = futs[static_cast<std::size_t>(k)].get();
        }
        // lowest index wins so the outcome does not depend on the batch size
        for (int k = 0; k < count; ++k) {
            auto& a = batch[static_cast<std::size_t>(k)];
            if (a.ok) return finish(problem, m0, a, base + k);
            if (!have_best || a.t > best.t) {
                best = std::move(a);
                best_index = base + k;
                have_best = true;
            }
        }
    }
    std::ostringstream os;
    os << "prescription continuation failed after " << opts.max_restarts << " restarts; best attempt "
       << best_index << " reached t = " << best.t << ": " << best.why;
    throw PrescriptionFailure(os.str(), finish(problem, m0, best, best_index));
}

VerifyReport verify(const PrescriptionProblem& problem, const PrescriptionSolution& sol, int grid) {
    VerifyReport rep;
    const ZeroTuple all = sol.Z_found.concat(problem.anchors);
    const int n = problem.target.degree();
    int need = required_quadrature_grid(all, n);
    int g = std::max(grid, 8 * n);
    while (g < need && g < kMaxVerifyGrid) g *= 2;
    rep.grid = g;
    try {
        const auto m = quadrature_moments(all, 1.0, n, g);
        rep.coeff_deviation = coeff_distance(monic_op_from_moments(m, n), problem.target);
    } catch (const Error&) {
        rep.coeff_deviation = std::numeric_limits<double>::infinity();
    }
    for (const auto& a : problem.anchors.points()) rep.anchor_residuals.push_back(std::abs(sol.phi_N(a)));
    try {
        const auto zs = roots(sol.phi_N);
        rep.max_zero_modulus = max_modulus(zs);
    } catch (const RootFindingError& e) {
        rep.max_zero_modulus = max_modulus(e.best_iterate());
    }
    rep.zeros_inside = rep.max_zero_modulus < 1.0;
    return rep;
}

std::vector<Preimage> enumerate_preimages(const CoeffVector& q, int n, int starts, std::uint64_t seed) {
    if (n < 1 || n > 3) throw InvalidInput("enumerate_preimages: n must be 1, 2 or 3");
    if (q.size() != 2 * n) throw InvalidInput("enumerate_preimages: coefficient vector length must be 2n");
    auto f0 = [](const Eigen::VectorXd& x) { return map_M(from_zeros(from_real_coords(x))); };
    const double conv = 1e-13 * (1.0 + q.lpNorm<Eigen::Infinity>());

    std::vector<Preimage> found;
    for (int s = 0; s < starts; ++s) {
        auto rng = stream_for(seed, static_cast<std::uint64_t>(s));
        std::vector<cplx> z0(static_cast<std::size_t>(n));
        for (auto& z : z0) z = random_disk_point(rng, 0.95);
        Eigen::VectorXd x = to_real_coords(z0);
        double res = (f0(x) - q).lpNorm<Eigen::Infinity>();
        for (int it = 0; it < 200 && res > conv; ++it) {
            const Eigen::MatrixXd J = central_difference_jacobian(f0, x, 1e-7);
            const Eigen::VectorXd delta = J.fullPivLu().solve(q - f0(x));
            bool moved = false;
            for (double step = 1.0; step >= 1.0 / 256.0; step *= 0.5) {
                const Eigen::VectorXd trial = x + step * delta;
                const double rt = (f0(trial) - q).lpNorm<Eigen::Infinity>();
                if (rt < res) {
                    x = trial;
                    res = rt;
                    moved = true;
                    break;
                }
            }
            if (!moved) break;
        }
        if (!(res <= 1e-9)) continue;
        const auto Z = from_real_coords(x);
        if (!(max_modulus(Z) < 1.0)) continue;

        Preimage p;
        p.Z = Z;
        p.jacobian_det = central_difference_jacobian(f0, x, 1e-6).determinant();
        p.critical = std::abs(p.jacobian_det) < 1e-8;
        const double merge = p.critical ? 1e-3 : 1e-6;
        const bool seen = std::any_of(found.begin(), found.end(), [&](const Preimage& o) {
            double d = 0.0;
            for (std::size_t j = 0; j < Z.size(); ++j) d = std::max(d, std::abs(Z[j] - o.Z[j]));
            return d < merge;
        });
        if (!seen) found.push_back(std::move(p));
    }
    return found;
}

}  // namespace opuc
