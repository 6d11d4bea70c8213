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
#include <variant>
#include <vector>

#include "opuc/poly.hpp"

namespace opuc {

/// Zeros of one polynomial Phi_m, with the stage that produced it.
struct ZeroCloud {
    int degree = 0;
    std::vector<cplx> zeros;
    int stage = 0;
};

/// Finitely supported probability-like measure on the closed disk.
struct DiscreteDistribution {
    std::vector<cplx> points;
    std::vector<double> weights;
};

/// Mass 1/degree on every zero, multiplicity counted.
DiscreteDistribution counting_measure(const ZeroCloud& c);

/// Table of mixed moments int z^p conj(z)^q dnu for p + q <= K.
class MixedMoments {
public:
    explicit MixedMoments(int K);

    int order() const noexcept { return K_; }
    cplx& at(int p, int q);
    cplx at(int p, int q) const;

private:
    std::size_t index(int p, int q) const;
    int K_;
    std::vector<cplx> v_;
};

MixedMoments mixed_moments(const DiscreteDistribution& nu, int K);

/// Reference distributions on the closed unit disk with closed-form mixed
/// moments and a deterministic low-discrepancy sampler.
struct PointMass {
    cplx point;
};
struct UniformCircle {
    double radius;
};
struct UniformDisk {
    double radius;
};
using ZeroTarget = std::variant<PointMass, UniformCircle, UniformDisk, DiscreteDistribution>;

MixedMoments mixed_moments(const ZeroTarget& target, int K);

/// index-th point (index >= 1) of a Halton-driven sample of the target.
cplx sample_target(const ZeroTarget& target, int index);

/// Radical inverse of `index` in the given base.
double radical_inverse(int index, int base);

/// max over p + q <= K of |mixed moment difference|.
double moment_distance(const MixedMoments& a, const MixedMoments& b);
double moment_distance(const DiscreteDistribution& a, const DiscreteDistribution& b, int K);
double moment_distance(const DiscreteDistribution& a, const ZeroTarget& b, int K);

/// eps-resolution estimate of the limit set of a family of zero clouds:
/// grid cells of side eps hit by zeros of at least `tail` of the last
/// 2 * tail clouds survive; adjacent surviving cells are merged and each
/// group is reported as the mean of the window zeros inside it.
std::vector<cplx> limit_points(std::span<const ZeroCloud> clouds, double eps, int tail);

}  // namespace opuc
