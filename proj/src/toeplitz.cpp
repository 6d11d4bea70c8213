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

#include "opuc/toeplitz.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "opuc/errors.hpp"

namespace opuc {

LevinsonResult levinson(const MomentSeq& m, int n) {
    if (n < 0) throw InvalidInput("levinson: order must be nonnegative");
    if (n > m.order()) throw InvalidInput("levinson: not enough moments for the requested order");
    const double m0 = m.mass();
    LevinsonResult out;
    out.polys.emplace_back();
    out.energies.push_back(m0);
    for (int k = 0; k < n; ++k) {
        const MonicPoly& phi = out.polys.back();
        // <z Phi_k, 1> = sum_j c_j m_{-(j+1)}
        cplx proj{};
        for (int j = 0; j <= k; ++j) proj += phi.coeff(j) * m.at(-(j + 1));
        const double energy = out.energies.back();
        const cplx conj_alpha = proj / energy;
        const double shrink = 1.0 - std::norm(conj_alpha);
        const double next_energy = energy * shrink;
        if (!(next_energy > kLevinsonPivotFloor * m0)) throw InsufficientSupport(k + 1, next_energy / m0);
        auto next = forward_step(phi, std::conj(conj_alpha));
        out.reflections.push_back(next.coeff(0));
        out.polys.push_back(std::move(next));
        out.energies.push_back(next_energy);
    }
    return out;
}

MonicPoly monic_op_from_moments(const MomentSeq& m, int n) { return levinson(m, n).polys.back(); }

cplx inner_product(std::span<const cplx> p, std::span<const cplx> q, const MomentSeq& m) {
    // <z^j, z^k> = m_{k-j}
    cplx acc{};
    for (std::size_t j = 0; j < p.size(); ++j) {
        if (p[j] == cplx{}) continue;
        for (std::size_t k = 0; k < q.size(); ++k)
            acc += p[j] * std::conj(q[k]) * m.at(static_cast<int>(k) - static_cast<int>(j));
    }
    return acc;
}

double l2_norm2(const MonicPoly& p, const MomentSeq& m) {
    const auto c = p.full_coeffs();
    return inner_product(c, c, m).real();
}

OrthogonalityReport verify_orthogonality(const MonicPoly& phi, const MomentSeq& m, double tol) {
    const int n = phi.degree();
    if (n > m.order()) throw InvalidInput("verify_orthogonality: not enough moments");
    OrthogonalityReport rep;
    rep.order = n;
    const auto c = phi.full_coeffs();
    for (int k = 0; k < n; ++k) {
        cplx acc{};
        for (int j = 0; j <= n; ++j) acc += c[static_cast<std::size_t>(j)] * m.at(k - j);
        rep.residual = std::max(rep.residual, std::abs(acc));
    }
    rep.pass = rep.residual <= tol * m.mass();
    return rep;
}

OrthogonalityReport verify_orthogonality(const MonicPoly& phi, const MeasureSpec& mu, double tol) {
    return verify_orthogonality(phi, moments_of(mu, phi.degree()), tol);
}

MinimalityReport minimality_check(const MonicPoly& phi, const MeasureSpec& mu, int trials, std::uint64_t seed) {
    const int n = phi.degree();
    const auto m = moments_of(mu, n);
    const double slack = 1e-10 * m.mass();

    MinimalityReport rep;
    rep.trials = trials;
    rep.norm2 = l2_norm2(phi, m);
    rep.monomial_norm2 = l2_norm2(MonicPoly::monomial(n), m);
    rep.best_competitor = rep.monomial_norm2;

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    auto disk_point = [&](double radius) {
        return std::polar(radius * std::sqrt(unit(rng)), 2.0 * std::numbers::pi * unit(rng));
    };
    for (int t = 0; t < trials; ++t) {
        std::vector<cplx> c(static_cast<std::size_t>(n));
        if (t % 2 == 0) {
            for (auto& v : c) v = disk_point(2.0);
        } else {
            const double scale = std::pow(10.0, -1.0 - (t / 2) % 4);
            for (int k = 0; k < n; ++k) c[static_cast<std::size_t>(k)] = phi.coeff(k) + disk_point(scale);
        }
        rep.best_competitor = std::min(rep.best_competitor, l2_norm2(MonicPoly(std::move(c)), m));
    }
    rep.pass = rep.norm2 <= rep.best_competitor + slack;
    return rep;
}

}  // namespace opuc
