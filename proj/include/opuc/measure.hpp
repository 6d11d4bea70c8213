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

#include <variant>
#include <vector>

#include "opuc/poly.hpp"
#include "opuc/szego.hpp"

namespace opuc {

/// Weight proportional to prod_j |e^{it} - z_j|^{-2}, scaled to `total_mass`.
struct BernsteinSzego {
    ZeroTuple zeros;
    double total_mass = 1.0;
};

struct Atom {
    cplx point;  ///< on the unit circle
    double weight;
};

struct Atomic {
    std::vector<Atom> atoms;
};

struct MixturePart;

struct Mixture {
    std::vector<MixturePart> parts;
};

/// Tagged union of the supported measure representations on the unit circle.
class MeasureSpec {
public:
    using Variant = std::variant<BernsteinSzego, Atomic, Mixture>;

    static MeasureSpec bernstein_szego(ZeroTuple zeros, double total_mass = 1.0);
    /// Atoms must have modulus 1 (to 1e-12), distinct angles and positive weights.
    static MeasureSpec atomic(std::vector<Atom> atoms);
    static MeasureSpec mixture(std::vector<MixturePart> parts);
    /// Normalized arc-length measure dt / 2pi.
    static MeasureSpec lebesgue() { return bernstein_szego(ZeroTuple{}, 1.0); }

    const Variant& variant() const noexcept { return v_; }
    double total_mass() const;

private:
    explicit MeasureSpec(Variant v) : v_(std::move(v)) {}
    Variant v_;
};

struct MixturePart {
    double scale;
    MeasureSpec measure;
};

/// Trigonometric moments m_k = int e^{-ikt} dmu(t), k = 0..K.
class MomentSeq {
public:
    MomentSeq() = default;
    explicit MomentSeq(std::vector<cplx> moments);

    int order() const noexcept { return static_cast<int>(m_.size()) - 1; }
    double mass() const { return m_.at(0).real(); }
    std::span<const cplx> values() const noexcept { return m_; }
    /// m_k for |k| <= order(), using m_{-k} = conj(m_k).
    cplx at(int k) const;

    MomentSeq& operator+=(const MomentSeq& other);
    MomentSeq& operator*=(double s);

private:
    std::vector<cplx> m_;
};

/// Normalizing constant d with d * int prod_j |e^{it} - z_j|^{-2} dt = 1.
double bs_normalizer(const ZeroTuple& zeros);

/// Moments from Verblunsky coefficients (alpha_j = 0 past the end).
MomentSeq alphas_to_moments(const AlphaSeq& alphas, double mass, int K);

/// Exact moments of any MeasureSpec (Bernstein-Szego through the
/// Verblunsky route, atoms by direct summation).
MomentSeq moments_of(const MeasureSpec& mu, int K);

/// Trapezoid-rule moments of the normalized Bernstein-Szego weight on a
/// uniform grid; independent of the recursion route. `grid` must be a
/// power of two, at least 8K, and large enough for the zero closest to
/// the circle (InvalidInput reports the required size otherwise); the
/// aliasing error then stays below 1e-16 relative.
MomentSeq quadrature_moments(const ZeroTuple& zeros, double mass, int K, int grid);

/// Smallest grid needed for quadrature_moments to resolve these zeros.
int required_quadrature_grid(const ZeroTuple& zeros, int K);

/// Smallest eigenvalue of the Hermitian Toeplitz matrix [m_{j-k}].
double toeplitz_min_eigenvalue(const MomentSeq& m);

}  // namespace opuc
