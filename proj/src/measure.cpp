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

#include "opuc/measure.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include <Eigen/Dense>

#include "opuc/errors.hpp"

namespace opuc {

namespace {

// Points closer than this to the circle are treated as boundary points.
constexpr double kZeroGuard = 1.0 - 1e-12;

void check_bs_zeros(const ZeroTuple& zeros, const char* who) {
    if (!(zeros.max_modulus() < kZeroGuard)) {
        std::ostringstream os;
        os << who << ": zero of modulus " << zeros.max_modulus() << " too close to the unit circle";
        throw NearBoundary(os.str());
    }
}

}  // namespace

MeasureSpec MeasureSpec::bernstein_szego(ZeroTuple zeros, double total_mass) {
    if (!(total_mass > 0.0)) throw InvalidInput("Bernstein-Szego total mass must be positive");
    check_bs_zeros(zeros, "bernstein_szego");
    return MeasureSpec(BernsteinSzego{std::move(zeros), total_mass});
}

MeasureSpec MeasureSpec::atomic(std::vector<Atom> atoms) {
    if (atoms.empty()) throw InvalidInput("atomic measure needs at least one atom");
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        if (std::abs(std::abs(atoms[i].point) - 1.0) > 1e-12) {
            std::ostringstream os;
            os << "atom " << i << " = " << atoms[i].point << " is not on the unit circle";
            throw InvalidInput(os.str());
        }
        if (!(atoms[i].weight > 0.0)) throw InvalidInput("atom weights must be positive");
        for (std::size_t j = 0; j < i; ++j) {
            if (std::abs(atoms[i].point - atoms[j].point) < 1e-12)
                throw InvalidInput("atoms must have distinct angles");
        }
    }
    return MeasureSpec(Atomic{std::move(atoms)});
}

MeasureSpec MeasureSpec::mixture(std::vector<MixturePart> parts) {
    if (parts.empty()) throw InvalidInput("mixture needs at least one part");
    for (const auto& p : parts)
        if (!(p.scale > 0.0)) throw InvalidInput("mixture scales must be positive");
    return MeasureSpec(Mixture{std::move(parts)});
}

double MeasureSpec::total_mass() const {
    struct Visitor {
        double operator()(const BernsteinSzego& b) const { return b.total_mass; }
        double operator()(const Atomic& a) const {
            double s = 0.0;
            for (const auto& atom : a.atoms) s += atom.weight;
            return s;
        }
        double operator()(const Mixture& m) const {
            double s = 0.0;
            for (const auto& p : m.parts) s += p.scale * p.measure.total_mass();
            return s;
        }
    };
    return std::visit(Visitor{}, v_);
}

MomentSeq::MomentSeq(std::vector<cplx> moments) : m_(std::move(moments)) {
    if (m_.empty()) throw InvalidInput("moment sequence needs m_0");
    if (!(m_[0].real() > 0.0) || std::abs(m_[0].imag()) > 1e-12 * m_[0].real())
        throw InvalidInput("m_0 must be real and positive");
    m_[0] = m_[0].real();
}

cplx MomentSeq::at(int k) const {
    if (std::abs(k) > order()) throw InvalidInput("moment index beyond available order");
    return k >= 0 ? m_[static_cast<std::size_t>(k)] : std::conj(m_[static_cast<std::size_t>(-k)]);
}

MomentSeq& MomentSeq::operator+=(const MomentSeq& other) {
    if (other.m_.size() != m_.size()) throw InvalidInput("moment sequences of different order");
    for (std::size_t k = 0; k < m_.size(); ++k) m_[k] += other.m_[k];
    return *this;
}

MomentSeq& MomentSeq::operator*=(double s) {
    for (auto& v : m_) v *= s;
    return *this;
}

double bs_normalizer(const ZeroTuple& zeros) {
    check_bs_zeros(zeros, "bs_normalizer");
    const auto alphas = poly_to_alphas(from_zeros(zeros));
    double prod = 1.0;
    for (const auto& a : alphas.values()) prod *= 1.0 - std::norm(a);
    return prod / (2.0 * std::numbers::pi);
}

MomentSeq alphas_to_moments(const AlphaSeq& alphas, double mass, int K) {
    if (!(mass > 0.0)) throw InvalidInput("alphas_to_moments: mass must be positive");
    if (K < 0) throw InvalidInput("alphas_to_moments: K must be nonnegative");
    // orthogonality of Phi_k against 1 gives m_{-k} = -sum_{j<k} c_{k,j} m_{-j}
    std::vector<cplx> neg(static_cast<std::size_t>(K) + 1);
    neg[0] = mass;
    MonicPoly phi;
    for (int k = 1; k <= K; ++k) {
        phi = forward_step(phi, alphas.at_or_zero(static_cast<std::size_t>(k - 1)));
        cplx acc{};
        for (int j = 0; j < k; ++j) acc += phi.coeff(j) * neg[static_cast<std::size_t>(j)];
        neg[static_cast<std::size_t>(k)] = -acc;
    }
    std::vector<cplx> m(neg.size());
    m[0] = mass;
    for (std::size_t k = 1; k < neg.size(); ++k) m[k] = std::conj(neg[k]);
    return MomentSeq(std::move(m));
}

MomentSeq moments_of(const MeasureSpec& mu, int K) {
    if (K < 0) throw InvalidInput("moments_of: K must be nonnegative");
    struct Visitor {
        int K;
        MomentSeq operator()(const BernsteinSzego& b) const {
            return alphas_to_moments(poly_to_alphas(from_zeros(b.zeros)), b.total_mass, K);
        }
        MomentSeq operator()(const Atomic& a) const {
            std::vector<cplx> m(static_cast<std::size_t>(K) + 1);
            for (const auto& atom : a.atoms) {
                const cplx step = std::conj(atom.point);
                cplx pw{1.0};
                for (int k = 0; k <= K; ++k) {
                    m[static_cast<std::size_t>(k)] += atom.weight * pw;
                    pw *= step;
                }
            }
            return MomentSeq(std::move(m));
        }
        MomentSeq operator()(const Mixture& mix) const {
            std::vector<cplx> acc(static_cast<std::size_t>(K) + 1);
            for (const auto& p : mix.parts) {
                const auto part = moments_of(p.measure, K);
                for (int k = 0; k <= K; ++k) acc[static_cast<std::size_t>(k)] += p.scale * part.at(k);
            }
            return MomentSeq(std::move(acc));
        }
    };
    return std::visit(Visitor{K}, mu.variant());
}

int required_quadrature_grid(const ZeroTuple& zeros, int K) {
    const double r = zeros.max_modulus();
    if (r == 0.0) return K + 1;
    // aliased moments decay like r^{|j|}; push the first alias below 1e-16
    const double extra = std::log(1e-16) / std::log(r);
    return K + static_cast<int>(std::ceil(extra));
}

MomentSeq quadrature_moments(const ZeroTuple& zeros, double mass, int K, int grid) {
    if (!(mass > 0.0)) throw InvalidInput("quadrature_moments: mass must be positive");
    if (K < 0) throw InvalidInput("quadrature_moments: K must be nonnegative");
    if (grid < 1 || (grid & (grid - 1)) != 0) throw InvalidInput("quadrature_moments: grid must be a power of two");
    if (grid < 8 * K) throw InvalidInput("quadrature_moments: grid must be at least 8K");
    const int need = required_quadrature_grid(zeros, K);
    if (grid < need) {
        std::ostringstream os;
        os << "quadrature_moments: grid " << grid << " cannot resolve a zero of modulus "
           << zeros.max_modulus() << "; need at least " << need << " points";
        throw InvalidInput(os.str());
    }

    std::vector<cplx> m(static_cast<std::size_t>(K) + 1);
    double total = 0.0;
    for (int j = 0; j < grid; ++j) {
        const double t = 2.0 * std::numbers::pi * j / grid;
        const cplx e = std::polar(1.0, t);
        double denom = 1.0;
        for (const auto& z : zeros.points()) denom *= std::norm(e - z);
        const double w = 1.0 / denom;
        total += w;
        for (int k = 0; k <= K; ++k) {
            // exact angle reduction keeps e^{-ikt} accurate for large k
            const int idx = static_cast<int>((static_cast<long long>(k) * j) % grid);
            m[static_cast<std::size_t>(k)] += w * std::polar(1.0, -2.0 * std::numbers::pi * idx / grid);
        }
    }
    for (auto& v : m) v *= mass / total;
    m[0] = mass;
    return MomentSeq(std::move(m));
}

double toeplitz_min_eigenvalue(const MomentSeq& m) {
    const int n = m.order() + 1;
    Eigen::MatrixXcd T(n, n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) T(j, k) = m.at(k - j);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(T, Eigen::EigenvaluesOnly);
    return es.eigenvalues()(0);
}

}  // namespace opuc
