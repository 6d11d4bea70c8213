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
#include <stdexcept>
#include <string>
#include <vector>

namespace opuc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input violates a documented precondition (bad modulus, malformed file, ...).
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// A Verblunsky coefficient or zero came too close to the unit circle.
class NearBoundary : public Error {
public:
    using Error::Error;
};

/// The moment (Toeplitz) matrix stopped being positive definite at `order`.
class InsufficientSupport : public Error {
public:
    InsufficientSupport(int order, double pivot)
        : Error("insufficient support: Toeplitz matrix is singular or indefinite at order " +
                std::to_string(order) + " (pivot " + std::to_string(pivot) + ")"),
          order_(order), pivot_(pivot) {}

    int order() const noexcept { return order_; }
    double pivot() const noexcept { return pivot_; }

private:
    int order_;
    double pivot_;
};

/// Root finding failed with both Aberth iteration and the companion fallback.
class RootFindingError : public Error {
public:
    RootFindingError(const std::string& what, std::vector<std::complex<double>> best)
        : Error(what), best_(std::move(best)) {}

    const std::vector<std::complex<double>>& best_iterate() const noexcept { return best_; }

private:
    std::vector<std::complex<double>> best_;
};

/// An iterative numerical procedure (continuation, verify loop) gave up.
class SolverFailure : public Error {
public:
    using Error::Error;
};

}  // namespace opuc
