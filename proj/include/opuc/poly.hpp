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

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace opuc {

using cplx = std::complex<double>;

/// Monic complex polynomial z^n + c_{n-1} z^{n-1} + ... + c_0.
///
/// Coefficients are stored low to high and the leading 1 is implicit, so
/// `coeffs().size() == degree()` always holds.
class MonicPoly {
public:
    /// The constant polynomial 1.
    MonicPoly() = default;
    explicit MonicPoly(std::vector<cplx> lower) : coeffs_(std::move(lower)) {}

    static MonicPoly monomial(int degree);

    int degree() const noexcept { return static_cast<int>(coeffs_.size()); }
    std::span<const cplx> coeffs() const noexcept { return coeffs_; }
    /// c_k for 0 <= k <= degree; coeff(degree()) == 1.
    cplx coeff(int k) const;
    /// All degree+1 coefficients, leading 1 included.
    std::vector<cplx> full_coeffs() const;

    cplx operator()(cplx z) const;

    friend bool operator==(const MonicPoly&, const MonicPoly&) = default;

private:
    std::vector<cplx> coeffs_;
};

/// General complex polynomial b_0 + b_1 z + ... + b_d z^d with b_d != 0
/// (the zero polynomial has no coefficients).
class GenPoly {
public:
    GenPoly() = default;
    explicit GenPoly(std::vector<cplx> coeffs);

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    std::span<const cplx> coeffs() const noexcept { return coeffs_; }
    cplx coeff(int k) const;

    cplx operator()(cplx z) const;

private:
    std::vector<cplx> coeffs_;
};

/// Ordered points of the open unit disk; compared as multisets.
class ZeroTuple {
public:
    ZeroTuple() = default;
    /// Throws InvalidInput if some point has modulus >= 1.
    explicit ZeroTuple(std::vector<cplx> points);

    std::size_t size() const noexcept { return points_.size(); }
    bool empty() const noexcept { return points_.empty(); }
    std::span<const cplx> points() const noexcept { return points_; }
    const cplx& operator[](std::size_t i) const { return points_[i]; }
    double max_modulus() const noexcept;

    /// Multiset union, keeping this tuple's points first.
    ZeroTuple concat(const ZeroTuple& other) const;

private:
    std::vector<cplx> points_;
};

/// Horner evaluation from the leading coefficient down.
cplx eval(std::span<const cplx> coeffs_low_to_high, cplx z);
cplx eval(const MonicPoly& p, cplx z);
cplx eval(const GenPoly& p, cplx z);

/// Derivative value p'(z) of a monic polynomial.
cplx eval_derivative(const MonicPoly& p, cplx z);

/// Reversed polynomial p*(z) = z^n conj(p(1/conj z)), with b_k = conj(c_{n-k}).
GenPoly star(const MonicPoly& p);

/// prod_j (z - z_j), accepting repeated points and points anywhere in C.
MonicPoly from_zeros(std::span<const cplx> zs);
MonicPoly from_zeros(const ZeroTuple& zs);

struct RootOptions {
    double tol = 1e-13;
    std::uint64_t seed = 0;
    int max_iterations = 600;
};

/// All degree-many roots (with multiplicity) of a monic polynomial.
///
/// Aberth-Ehrlich simultaneous iteration with a companion-matrix
/// eigenvalue fallback. Every returned root r satisfies
/// |p(r)| <= tol (1 + |r|)^n, or RootFindingError is thrown carrying the
/// best iterate.
std::vector<cplx> roots(const MonicPoly& p, const RootOptions& opts = {});

struct RootCluster {
    cplx point;
    int multiplicity;
};

/// Groups points closer than `radius` (single linkage); each cluster
/// reports its centroid and size.
std::vector<RootCluster> cluster_roots(std::span<const cplx> pts, double radius = 1e-7);

/// Distance between two equal-size point multisets: the minimum over
/// matchings of the largest matched distance (exact bottleneck matching).
double multiset_distance(std::span<const cplx> a, std::span<const cplx> b);

/// Largest coefficientwise difference, including the implicit leading 1.
double coeff_distance(const MonicPoly& a, const MonicPoly& b);

}  // namespace opuc
