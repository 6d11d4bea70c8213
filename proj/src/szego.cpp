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

#include "opuc/szego.hpp"

#include <cmath>
#include <sstream>

#include "opuc/errors.hpp"

namespace opuc {

AlphaSeq::AlphaSeq(std::vector<cplx> alphas) : alphas_(std::move(alphas)) {
    for (std::size_t j = 0; j < alphas_.size(); ++j) {
        if (!(std::abs(alphas_[j]) < 1.0)) {
            std::ostringstream os;
            os << "invalid Verblunsky coefficient alpha_" << j << " = " << alphas_[j]
               << " (modulus must be < 1)";
            throw InvalidInput(os.str());
        }
    }
}

void AlphaSeq::push_back(cplx alpha) {
    if (!(std::abs(alpha) < 1.0)) throw InvalidInput("invalid Verblunsky coefficient (modulus must be < 1)");
    alphas_.push_back(alpha);
}

AlphaSeq AlphaSeq::prefix(std::size_t count) const {
    if (count > alphas_.size()) throw InvalidInput("AlphaSeq::prefix: count exceeds length");
    AlphaSeq out;
    out.alphas_.assign(alphas_.begin(), alphas_.begin() + static_cast<std::ptrdiff_t>(count));
    return out;
}

MonicPoly forward_step(const MonicPoly& phi, cplx alpha) {
    if (!(std::abs(alpha) < 1.0)) throw InvalidInput("forward_step: invalid Verblunsky coefficient (|alpha| >= 1)");
    const int n = phi.degree();
    const cplx ca = std::conj(alpha);
    // z*Phi_n contributes c_{k-1} at index k; Phi_n^* has b_k = conj(c_{n-k})
    std::vector<cplx> next(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        const cplx shifted = k == 0 ? cplx{} : phi.coeff(k - 1);
        const cplx reversed = std::conj(phi.coeff(n - k));
        next[static_cast<std::size_t>(k)] = shifted - ca * reversed;
    }
    return MonicPoly(std::move(next));
}

MonicPoly alphas_to_poly(const AlphaSeq& alphas) {
    MonicPoly phi;
    for (const auto& a : alphas.values()) phi = forward_step(phi, a);
    return phi;
}

std::vector<MonicPoly> alphas_to_polys(const AlphaSeq& alphas) {
    std::vector<MonicPoly> out{MonicPoly{}};
    out.reserve(alphas.size() + 1);
    for (const auto& a : alphas.values()) out.push_back(forward_step(out.back(), a));
    return out;
}

InverseStep inverse_step(const MonicPoly& phi) {
    const int m = phi.degree();
    if (m < 1) throw InvalidInput("inverse_step: degree must be at least 1");
    const cplx alpha = -std::conj(phi.coeff(0));
    const double mod = std::abs(alpha);
    if (!(mod < kNearBoundaryAlpha)) {
        std::ostringstream os;
        os << "inverse_step: |alpha_" << m - 1 << "| = " << mod
           << " is at the unit circle (ill-conditioned measure or zeros outside the disk)";
        throw NearBoundary(os.str());
    }
    const cplx ca = std::conj(alpha);
    const double scale = 1.0 / (1.0 - mod * mod);
    // numerator phi + conj(alpha) phi^*; index 0 cancels exactly and is dropped
    std::vector<cplx> lower(static_cast<std::size_t>(m - 1));
    for (int k = 1; k < m; ++k) {
        const cplx num = phi.coeff(k) + ca * std::conj(phi.coeff(m - k));
        lower[static_cast<std::size_t>(k - 1)] = num * scale;
    }
    return {MonicPoly(std::move(lower)), alpha};
}

AlphaSeq poly_to_alphas(const MonicPoly& phi) {
    std::vector<cplx> rev;
    rev.reserve(static_cast<std::size_t>(phi.degree()));
    MonicPoly cur = phi;
    while (cur.degree() > 0) {
        auto step = inverse_step(cur);
        rev.push_back(step.alpha);
        cur = std::move(step.phi);
    }
    return AlphaSeq(std::vector<cplx>(rev.rbegin(), rev.rend()));
}

OneZeroStep prescribe_one_zero(const MonicPoly& phi, cplx a) {
    if (!(std::abs(a) < 1.0)) throw InvalidInput("prescribe_one_zero: prescribed zero must lie in the open unit disk");
    const cplx den = eval(star(phi), a);
    if (den == cplx{}) throw InvalidInput("prescribe_one_zero: Phi_n^* vanishes at a (Phi_n has zeros outside the disk)");
    const cplx conj_alpha = a * phi(a) / den;
    const cplx alpha = std::conj(conj_alpha);
    if (!(std::abs(alpha) < 1.0)) throw InvalidInput("prescribe_one_zero: |alpha| >= 1, Phi_n must have all zeros in the disk");
    return {alpha, forward_step(phi, alpha)};
}

}  // namespace opuc
