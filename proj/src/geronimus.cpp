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

#include "opuc/geronimus.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "opuc/errors.hpp"
#include "opuc/szego.hpp"

namespace opuc {

Eigen::VectorXd to_real_coords(std::span<const cplx> z) {
    Eigen::VectorXd x(2 * static_cast<Eigen::Index>(z.size()));
    for (std::size_t j = 0; j < z.size(); ++j) {
        x(2 * static_cast<Eigen::Index>(j)) = z[j].real();
        x(2 * static_cast<Eigen::Index>(j) + 1) = z[j].imag();
    }
    return x;
}

std::vector<cplx> from_real_coords(const Eigen::VectorXd& x) {
    if (x.size() % 2 != 0) throw InvalidInput("real coordinate vector must have even length");
    std::vector<cplx> z(static_cast<std::size_t>(x.size() / 2));
    for (std::size_t j = 0; j < z.size(); ++j) {
        const auto i = 2 * static_cast<Eigen::Index>(j);
        z[j] = {x(i), x(i + 1)};
    }
    return z;
}

MeasureSpec bs_measure(const ZeroTuple& Z, const ZeroTuple& A) {
    const double guard = 1.0 - 1e-9;
    if (!(Z.max_modulus() < guard) || !(A.max_modulus() < guard))
        throw NearBoundary("bs_measure: point within 1e-9 of the unit circle");
    return MeasureSpec::bernstein_szego(Z.concat(A), 1.0);
}

CoeffVector map_M(const MonicPoly& phi) { return to_real_coords(phi.coeffs()); }

MonicPoly coeffs_from_M(const CoeffVector& v) { return MonicPoly(from_real_coords(v)); }

MonicPoly nth_op_of_bs(std::span<const cplx> A, std::span<const cplx> Z) {
    std::vector<cplx> all(Z.begin(), Z.end());
    all.insert(all.end(), A.begin(), A.end());
    MonicPoly phi = from_zeros(all);
    for (std::size_t k = 0; k < A.size(); ++k) phi = inverse_step(phi).phi;
    return phi;
}

CoeffVector F(std::span<const cplx> A, std::span<const cplx> Z) {
    if (Z.empty()) throw InvalidInput("F: Z must contain at least one point");
    return map_M(nth_op_of_bs(A, Z));
}

CoeffVector F(const ZeroTuple& A, const ZeroTuple& Z) { return F(A.points(), Z.points()); }

double default_fd_step(std::span<const cplx> Z) {
    double m = 0.0;
    for (const auto& z : Z) m = std::max(m, std::abs(z));
    return 1e-6 * (1.0 + m);
}

Eigen::MatrixXd central_difference_jacobian(const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& f,
                                            const Eigen::VectorXd& x, double h) {
    Eigen::MatrixXd J;
    Eigen::VectorXd xp = x, xm = x;
    for (Eigen::Index j = 0; j < x.size(); ++j) {
        xp(j) = x(j) + h;
        xm(j) = x(j) - h;
        const Eigen::VectorXd col = (f(xp) - f(xm)) / (2.0 * h);
        if (j == 0) J.resize(col.size(), x.size());
        J.col(j) = col;
        xp(j) = xm(j) = x(j);
    }
    return J;
}

Eigen::MatrixXd jacobian_F(std::span<const cplx> A, std::span<const cplx> Z, double h) {
    if (h <= 0.0) h = default_fd_step(Z);
    for (const auto& z : Z)
        if (!(std::abs(z) < 1.0 - h)) throw InvalidInput("jacobian_F: point within one step of the unit circle");
    std::vector<cplx> anchors(A.begin(), A.end());
    auto f = [&anchors](const Eigen::VectorXd& x) { return F(anchors, from_real_coords(x)); };
    return central_difference_jacobian(f, to_real_coords(Z), h);
}

}  // namespace opuc
