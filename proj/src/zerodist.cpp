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

#include "opuc/zerodist.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>

#include "opuc/errors.hpp"

namespace opuc {

DiscreteDistribution counting_measure(const ZeroCloud& c) {
    if (c.degree < 1) throw InvalidInput("counting_measure: degree must be at least 1");
    if (static_cast<int>(c.zeros.size()) != c.degree) throw InvalidInput("counting_measure: zero count differs from degree");
    DiscreteDistribution d;
    d.points = c.zeros;
    d.weights.assign(c.zeros.size(), 1.0 / c.degree);
    return d;
}

MixedMoments::MixedMoments(int K) : K_(K) {
    if (K < 0) throw InvalidInput("mixed moment order must be nonnegative");
    v_.assign(static_cast<std::size_t>((K + 1) * (K + 2) / 2), cplx{});
}

std::size_t MixedMoments::index(int p, int q) const {
    if (p < 0 || q < 0 || p + q > K_) throw InvalidInput("mixed moment index out of range");
    const int s = p + q;
    return static_cast<std::size_t>(s * (s + 1) / 2 + q);
}

cplx& MixedMoments::at(int p, int q) { return v_[index(p, q)]; }
cplx MixedMoments::at(int p, int q) const { return v_[index(p, q)]; }

MixedMoments mixed_moments(const DiscreteDistribution& nu, int K) {
    if (nu.points.size() != nu.weights.size()) throw InvalidInput("distribution points and weights differ in length");
    MixedMoments out(K);
    for (std::size_t i = 0; i < nu.points.size(); ++i) {
        const cplx z = nu.points[i];
        if (std::abs(z) > 1.0 + 1e-12) throw InvalidInput("distribution point outside the closed unit disk");
        cplx zp{1.0};
        for (int p = 0; p <= K; ++p) {
            cplx term = nu.weights[i] * zp;
            for (int q = 0; p + q <= K; ++q) {
                out.at(p, q) += term;
                term *= std::conj(z);
            }
            zp *= z;
        }
    }
    return out;
}

MixedMoments mixed_moments(const ZeroTarget& target, int K) {
    struct Visitor {
        int K;
        MixedMoments operator()(const PointMass& pm) const {
            return mixed_moments(DiscreteDistribution{{pm.point}, {1.0}}, K);
        }
        MixedMoments operator()(const UniformCircle& c) const {
            MixedMoments out(K);
            for (int p = 0; 2 * p <= K; ++p) out.at(p, p) = std::pow(c.radius, 2 * p);
            return out;
        }
        MixedMoments operator()(const UniformDisk& d) const {
            MixedMoments out(K);
            for (int p = 0; 2 * p <= K; ++p) out.at(p, p) = std::pow(d.radius, 2 * p) / (p + 1);
            return out;
        }
        MixedMoments operator()(const DiscreteDistribution& dd) const { return mixed_moments(dd, K); }
    };
    return std::visit(Visitor{K}, target);
}

double radical_inverse(int index, int base) {
    double inv = 1.0 / base, f = inv, r = 0.0;
    for (int i = index; i > 0; i /= base) {
        r += f * (i % base);
        f *= inv;
    }
    return r;
}

cplx sample_target(const ZeroTarget& target, int index) {
    const double u = radical_inverse(index, 2);
    const double v = radical_inverse(index, 3);
    struct Visitor {
        double u, v;
        int index;
        cplx operator()(const PointMass& pm) const { return pm.point; }
        cplx operator()(const UniformCircle& c) const { return std::polar(c.radius, 2.0 * std::numbers::pi * u); }
        cplx operator()(const UniformDisk& d) const {
            return std::polar(d.radius * std::sqrt(v), 2.0 * std::numbers::pi * u);
        }
        cplx operator()(const DiscreteDistribution& dd) const {
            if (dd.points.empty()) throw InvalidInput("cannot sample an empty distribution");
            // inverse CDF on the Halton coordinate
            double acc = 0.0, total = 0.0;
            for (double w : dd.weights) total += w;
            for (std::size_t i = 0; i < dd.points.size(); ++i) {
                acc += dd.weights[i] / total;
                if (u < acc) return dd.points[i];
            }
            return dd.points.back();
        }
    };
    return std::visit(Visitor{u, v, index}, target);
}

double moment_distance(const MixedMoments& a, const MixedMoments& b) {
    const int K = std::min(a.order(), b.order());
    double d = 0.0;
    for (int p = 0; p <= K; ++p)
        for (int q = 0; p + q <= K; ++q) d = std::max(d, std::abs(a.at(p, q) - b.at(p, q)));
    return d;
}

double moment_distance(const DiscreteDistribution& a, const DiscreteDistribution& b, int K) {
    return moment_distance(mixed_moments(a, K), mixed_moments(b, K));
}

double moment_distance(const DiscreteDistribution& a, const ZeroTarget& b, int K) {
    return moment_distance(mixed_moments(a, K), mixed_moments(b, K));
}

std::vector<cplx> limit_points(std::span<const ZeroCloud> clouds, double eps, int tail) {
    if (!(eps > 0.0)) throw InvalidInput("limit_points: eps must be positive");
    if (tail < 1) throw InvalidInput("limit_points: tail must be at least 1");
    if (static_cast<int>(clouds.size()) < tail) throw InvalidInput("limit_points: fewer clouds than tail");

    using Cell = std::pair<long long, long long>;
    auto cell_of = [eps](cplx z) {
        return Cell{static_cast<long long>(std::floor(z.real() / eps)), static_cast<long long>(std::floor(z.imag() / eps))};
    };

    const std::size_t window = std::min(clouds.size(), static_cast<std::size_t>(2 * tail));
    const auto recent = clouds.subspan(clouds.size() - window);

    std::map<Cell, int> hits;
    std::map<Cell, std::pair<cplx, int>> sums;
    for (const auto& c : recent) {
        std::set<Cell> seen;
        for (const auto& z : c.zeros) {
            const Cell cell = cell_of(z);
            seen.insert(cell);
            auto& s = sums[cell];
            s.first += z;
            ++s.second;
        }
        for (const auto& cell : seen) ++hits[cell];
    }

    std::set<Cell> alive;
    for (const auto& [cell, count] : hits)
        if (count >= tail) alive.insert(cell);

    std::vector<cplx> out;
    std::set<Cell> done;
    for (const auto& start : alive) {
        if (done.count(start)) continue;
        cplx total{};
        int count = 0;
        std::vector<Cell> stack{start};
        done.insert(start);
        while (!stack.empty()) {
            const Cell c = stack.back();
            stack.pop_back();
            total += sums[c].first;
            count += sums[c].second;
            for (long long dx = -1; dx <= 1; ++dx)
                for (long long dy = -1; dy <= 1; ++dy) {
                    const Cell nb{c.first + dx, c.second + dy};
                    if (alive.count(nb) && !done.count(nb)) {
                        done.insert(nb);
                        stack.push_back(nb);
                    }
                }
        }
        out.push_back(total / static_cast<double>(count));
    }
    std::sort(out.begin(), out.end(), [](cplx a, cplx b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    return out;
}

}  // namespace opuc
