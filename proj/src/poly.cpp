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

#include "opuc/poly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include <Eigen/Dense>

#include "opuc/errors.hpp"

namespace opuc {

MonicPoly MonicPoly::monomial(int degree) {
    if (degree < 0) throw InvalidInput("monomial degree must be nonnegative");
    return MonicPoly(std::vector<cplx>(static_cast<std::size_t>(degree), cplx{}));
}

cplx MonicPoly::coeff(int k) const {
    if (k < 0 || k > degree()) throw InvalidInput("coefficient index out of range");
    return k == degree() ? cplx{1.0} : coeffs_[static_cast<std::size_t>(k)];
}

std::vector<cplx> MonicPoly::full_coeffs() const {
    std::vector<cplx> out(coeffs_);
    out.emplace_back(1.0);
    return out;
}

cplx MonicPoly::operator()(cplx z) const { return eval(*this, z); }

GenPoly::GenPoly(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == cplx{}) coeffs_.pop_back();
}

cplx GenPoly::coeff(int k) const {
    if (k < 0) throw InvalidInput("coefficient index out of range");
    return k > degree() ? cplx{} : coeffs_[static_cast<std::size_t>(k)];
}

cplx GenPoly::operator()(cplx z) const { return eval(*this, z); }

ZeroTuple::ZeroTuple(std::vector<cplx> points) : points_(std::move(points)) {
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (!(std::abs(points_[i]) < 1.0)) {
            std::ostringstream os;
            os << "point " << i << " = " << points_[i] << " is not inside the open unit disk";
            throw InvalidInput(os.str());
        }
    }
}

double ZeroTuple::max_modulus() const noexcept {
    double m = 0.0;
    for (const auto& z : points_) m = std::max(m, std::abs(z));
    return m;
}

ZeroTuple ZeroTuple::concat(const ZeroTuple& other) const {
    ZeroTuple out = *this;
    out.points_.insert(out.points_.end(), other.points_.begin(), other.points_.end());
    return out;
}

cplx eval(std::span<const cplx> coeffs, cplx z) {
    cplx acc{};
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
    return acc;
}

cplx eval(const MonicPoly& p, cplx z) {
    cplx acc{1.0};
    const auto c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc;
}

cplx eval(const GenPoly& p, cplx z) { return eval(p.coeffs(), z); }

cplx eval_derivative(const MonicPoly& p, cplx z) {
    const int n = p.degree();
    if (n == 0) return {};
    cplx acc{static_cast<double>(n)};
    for (int k = n - 1; k >= 1; --k) acc = acc * z + static_cast<double>(k) * p.coeff(k);
    return acc;
}

GenPoly star(const MonicPoly& p) {
    const int n = p.degree();
    std::vector<cplx> b(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) b[static_cast<std::size_t>(k)] = std::conj(p.coeff(n - k));
    return GenPoly(std::move(b));
}

MonicPoly from_zeros(std::span<const cplx> zs) {
    // full coefficient array, leading entry kept explicitly while multiplying
    std::vector<cplx> c{cplx{1.0}};
    for (const auto& r : zs) {
        c.emplace_back(0.0);
        for (std::size_t k = c.size() - 1; k > 0; --k) c[k] = c[k - 1] - r * c[k];
        c[0] = -r * c[0];
    }
    c.pop_back();
    return MonicPoly(std::move(c));
}

MonicPoly from_zeros(const ZeroTuple& zs) { return from_zeros(zs.points()); }

namespace {

// Rounding-error bound for Horner evaluation at z.
double horner_noise(const MonicPoly& p, cplx z) {
    const double r = std::abs(z);
    double acc = 1.0;
    const auto c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * r + std::abs(*it);
    return 8.0 * std::numeric_limits<double>::epsilon() * acc * (p.degree() + 1);
}

double contract_bound(const MonicPoly& p, cplx z, double tol) {
    return tol * std::pow(1.0 + std::abs(z), p.degree());
}

bool residual_ok(const MonicPoly& p, std::span<const cplx> zs, double tol) {
    for (const auto& z : zs) {
        if (!(std::abs(p(z)) <= contract_bound(p, z, tol))) return false;
    }
    return true;
}

bool converged_or_noise(const MonicPoly& p, std::span<const cplx> zs, double tol) {
    for (const auto& z : zs) {
        const double r = std::abs(p(z));
        if (!(r <= contract_bound(p, z, tol) || r <= horner_noise(p, z))) return false;
    }
    return true;
}

double worst_residual(const MonicPoly& p, std::span<const cplx> zs) {
    double w = 0.0;
    for (const auto& z : zs) w = std::max(w, std::abs(p(z)) / std::pow(1.0 + std::abs(z), p.degree()));
    return w;
}

// One Aberth-Ehrlich sweep (Gauss-Seidel flavour); returns the largest correction.
double aberth_sweep(const MonicPoly& p, std::vector<cplx>& z) {
    double largest = 0.0;
    const std::size_t n = z.size();
    for (std::size_t k = 0; k < n; ++k) {
        const cplx pv = p(z[k]);
        if (pv == cplx{}) continue;
        const cplx dp = eval_derivative(p, z[k]);
        cplx repulsion{};
        for (std::size_t j = 0; j < n; ++j) {
            if (j != k) repulsion += 1.0 / (z[k] - z[j]);
        }
        cplx step;
        if (dp == cplx{}) {
            step = pv;  // nudge off a critical point
        } else {
            const cplx ratio = pv / dp;
            step = ratio / (1.0 - ratio * repulsion);
        }
        if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) continue;
        z[k] -= step;
        largest = std::max(largest, std::abs(step));
    }
    return largest;
}

std::vector<cplx> companion_roots(const MonicPoly& p) {
    const int n = p.degree();
    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) comp(i, n - 1) = -p.coeff(i);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
    std::vector<cplx> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = es.eigenvalues()(i);
    // Newton polish
    for (auto& r : out) {
        for (int it = 0; it < 4; ++it) {
            const cplx dp = eval_derivative(p, r);
            if (dp == cplx{}) break;
            const cplx next = r - p(r) / dp;
            if (std::abs(p(next)) < std::abs(p(r))) r = next; else break;
        }
    }
    return out;
}

}  // namespace

std::vector<cplx> roots(const MonicPoly& p, const RootOptions& opts) {
    const int n = p.degree();
    if (n < 1) throw InvalidInput("roots: degree must be at least 1");
    if (n == 1) return {-p.coeff(0)};

    double cmax = 0.0;
    for (const auto& c : p.coeffs()) cmax = std::max(cmax, std::abs(c));
    const double radius = std::pow(1.0 + cmax, 1.0 / n);

    std::mt19937_64 rng(opts.seed);
    std::uniform_real_distribution<double> jitter(0.0, 1.0);
    const double offset = 2.0 * std::numbers::pi * jitter(rng);
    std::vector<cplx> z(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double angle = offset + 2.0 * std::numbers::pi * (k + 0.25 * jitter(rng)) / n;
        z[static_cast<std::size_t>(k)] = std::polar(radius, angle);
    }

    bool done = false;
    for (int it = 0; it < opts.max_iterations && !done; ++it) {
        aberth_sweep(p, z);
        done = converged_or_noise(p, z, opts.tol);
    }
    if (done) {
        // a few more sweeps sharpen clustered roots; keep them only while they help
        for (int extra = 0; extra < 6; ++extra) {
            auto trial = z;
            aberth_sweep(p, trial);
            if (worst_residual(p, trial) <= worst_residual(p, z)) z = std::move(trial); else break;
        }
        if (residual_ok(p, z, opts.tol)) return z;
    }

    auto fallback = companion_roots(p);
    if (residual_ok(p, fallback, opts.tol)) return fallback;

    auto& best = worst_residual(p, fallback) < worst_residual(p, z) ? fallback : z;
    std::ostringstream os;
    os << "roots: no convergence for degree " << n << " (worst scaled residual "
       << worst_residual(p, best) << ", tol " << opts.tol << ")";
    throw RootFindingError(os.str(), best);
}

std::vector<RootCluster> cluster_roots(std::span<const cplx> pts, double radius) {
    const std::size_t n = pts.size();
    std::vector<std::size_t> parent(n);
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](std::size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::abs(pts[i] - pts[j]) < radius) parent[find(i)] = find(j);

    std::vector<RootCluster> out;
    std::vector<std::size_t> slot(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t r = find(i);
        if (slot[r] == n) {
            slot[r] = out.size();
            out.push_back({cplx{}, 0});
        }
        auto& c = out[slot[r]];
        c.point += pts[i];
        ++c.multiplicity;
    }
    for (auto& c : out) c.point /= static_cast<double>(c.multiplicity);
    return out;
}

namespace {

bool has_perfect_matching(const std::vector<std::vector<double>>& d, double threshold) {
    const std::size_t n = d.size();
    std::vector<std::size_t> match(n, n);
    std::vector<char> seen;
    auto augment = [&](auto&& self, std::size_t u) -> bool {
        for (std::size_t v = 0; v < n; ++v) {
            if (d[u][v] > threshold || seen[v]) continue;
            seen[v] = 1;
            if (match[v] == n || self(self, match[v])) {
                match[v] = u;
                return true;
            }
        }
        return false;
    };
    for (std::size_t u = 0; u < n; ++u) {
        seen.assign(n, 0);
        if (!augment(augment, u)) return false;
    }
    return true;
}

}  // namespace

double multiset_distance(std::span<const cplx> a, std::span<const cplx> b) {
    if (a.size() != b.size()) throw InvalidInput("multiset_distance: sizes differ");
    const std::size_t n = a.size();
    if (n == 0) return 0.0;
    std::vector<std::vector<double>> d(n, std::vector<double>(n));
    std::vector<double> all;
    all.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) all.push_back(d[i][j] = std::abs(a[i] - b[j]));
    std::sort(all.begin(), all.end());
    std::size_t lo = 0, hi = all.size() - 1;
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        if (has_perfect_matching(d, all[mid])) hi = mid; else lo = mid + 1;
    }
    return all[lo];
}

double coeff_distance(const MonicPoly& a, const MonicPoly& b) {
    if (a.degree() != b.degree()) throw InvalidInput("coeff_distance: degrees differ");
    double m = 0.0;
    for (int k = 0; k < a.degree(); ++k) m = std::max(m, std::abs(a.coeff(k) - b.coeff(k)));
    return m;
}

}  // namespace opuc
