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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <limits>
#include <random>
#include <vector>

#include "opuc/poly.hpp"

namespace opuc::testing {

inline cplx random_disk_point(std::mt19937_64& rng, double rmax) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double r = rmax * std::sqrt(u(rng));
    return std::polar(r, 2.0 * std::numbers::pi * u(rng));
}

inline std::vector<cplx> random_disk_points(std::mt19937_64& rng, int n, double rmax) {
    std::vector<cplx> out;
    for (int i = 0; i < n; ++i) out.push_back(random_disk_point(rng, rmax));
    return out;
}

// Points with pairwise distance at least `sep`.
inline std::vector<cplx> separated_disk_points(std::mt19937_64& rng, int n, double rmax, double sep) {
    std::vector<cplx> out;
    while (static_cast<int>(out.size()) < n) {
        const cplx z = random_disk_point(rng, rmax);
        if (std::all_of(out.begin(), out.end(), [&](cplx w) { return std::abs(z - w) >= sep; })) out.push_back(z);
    }
    return out;
}

inline double max_abs_diff(std::span<const cplx> a, std::span<const cplx> b) {
    double m = a.size() == b.size() ? 0.0 : std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

}  // namespace opuc::testing
