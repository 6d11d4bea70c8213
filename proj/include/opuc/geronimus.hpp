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

#include <functional>
#include <span>

#include <Eigen/Dense>

#include "opuc/measure.hpp"
#include "opuc/poly.hpp"

namespace opuc {

/// (Re c_0, Im c_0, ..., Re c_{n-1}, Im c_{n-1}) of a degree-n monic polynomial.
using CoeffVector = Eigen::VectorXd;

/// Real coordinates (x_1, y_1, ..., x_n, y_n) of a point tuple.
Eigen::VectorXd to_real_coords(std::span<const cplx> z);
std::vector<cplx> from_real_coords(const Eigen::VectorXd& x);

/// Bernstein-Szego probability measure with weight prod |e^{it}-z|^{-2}
/// over the multiset Z u A. Points must satisfy |z| < 1 - 1e-9.
MeasureSpec bs_measure(const ZeroTuple& Z, const ZeroTuple& A);

/// Interleaved real and imaginary parts of the lower coefficients.
CoeffVector map_M(const MonicPoly& phi);
MonicPoly coeffs_from_M(const CoeffVector& v);

/// Degree-n monic orthogonal polynomial of the Bernstein-Szego measure with
/// zeros Z u A, obtained by inverse recursion from prod (z - w), w in Z u A.
MonicPoly nth_op_of_bs(std::span<const cplx> A, std::span<const cplx> Z);

/// F_A(Z) = M(Phi_n(mu_{Z,A})), evaluated without quadrature.
CoeffVector F(std::span<const cplx> A, std::span<const cplx> Z);
CoeffVector F(const ZeroTuple& A, const ZeroTuple& Z);

/// Default central-difference step 1e-6 (1 + max |z_j|).
double default_fd_step(std::span<const cplx> Z);

/// Central-difference Jacobian of a map R^m -> R^k.
Eigen::MatrixXd central_difference_jacobian(const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& f,
                                            const Eigen::VectorXd& x, double h);

/// 2n x 2n Jacobian of F_A over (x_1, y_1, ..., x_n, y_n); h <= 0 selects
/// the default step.
Eigen::MatrixXd jacobian_F(std::span<const cplx> A, std::span<const cplx> Z, double h = 0.0);

}  // namespace opuc
