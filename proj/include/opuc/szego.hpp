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

#include <span>
#include <utility>
#include <vector>

#include "opuc/poly.hpp"

namespace opuc {

/// Finite Verblunsky sequence alpha_0, ..., alpha_{m-1}, each strictly
/// inside the unit disk.
class AlphaSeq {
public:
    AlphaSeq() = default;
    /// Throws InvalidInput if some |alpha_j| >= 1.
    explicit AlphaSeq(std::vector<cplx> alphas);

    std::size_t size() const noexcept { return alphas_.size(); }
    std::span<const cplx> values() const noexcept { return alphas_; }
    const cplx& operator[](std::size_t j) const { return alphas_[j]; }
    /// alpha_j, with alpha_j = 0 past the stored length.
    cplx at_or_zero(std::size_t j) const noexcept { return j < alphas_.size() ? alphas_[j] : cplx{}; }

    void push_back(cplx alpha);
    AlphaSeq prefix(std::size_t count) const;

private:
    std::vector<cplx> alphas_;
};

/// Guard on |alpha| used by the inverse recursion.
inline constexpr double kNearBoundaryAlpha = 1.0 - 1e-12;

/// Phi_{n+1}(z) = z Phi_n(z) - conj(alpha) Phi_n^*(z).
MonicPoly forward_step(const MonicPoly& phi, cplx alpha);

/// Phi_m from Phi_0 = 1 through m forward steps.
MonicPoly alphas_to_poly(const AlphaSeq& alphas);

/// All intermediate polynomials Phi_0, ..., Phi_m.
std::vector<MonicPoly> alphas_to_polys(const AlphaSeq& alphas);

struct InverseStep {
    MonicPoly phi;  ///< degree n
    cplx alpha;     ///< alpha_n = -conj(Phi_{n+1}(0))
};

/// Undo one Szego step. Throws NearBoundary when |alpha_n| >= 1 - 1e-12.
InverseStep inverse_step(const MonicPoly& phi);

/// Verblunsky coefficients alpha_0..alpha_{N-1} of a monic polynomial with
/// all zeros in the open disk.
AlphaSeq poly_to_alphas(const MonicPoly& phi);

struct OneZeroStep {
    cplx alpha;
    MonicPoly next;
};

/// Picks alpha_n so that `a` is a zero of Phi_{n+1}:
/// conj(alpha_n) = a Phi_n(a) / Phi_n^*(a).
OneZeroStep prescribe_one_zero(const MonicPoly& phi, cplx a);

}  // namespace opuc
