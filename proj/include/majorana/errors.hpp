/*
 * Copyright 2026 The Majorana Library Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace majorana {

/// An argument is outside an operation's documented domain (bad index,
/// mismatched sizes, out-of-range parameter).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An input exceeds a hard size cap (permanent kernels, purification).
class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A domain type invariant was violated at construction (zero state vector,
/// non-Hermitian density matrix, ...). The message names the property.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A numerical consistency check failed, e.g. a self inner product came out
/// with a significant imaginary part or a negative real part.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The iterative root solver missed its residual target within the iteration
/// budget. Carries the best iterates and their residuals for diagnosis.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what,
                   std::vector<std::complex<double>> iterates,
                   std::vector<double> residuals)
      : std::runtime_error(what),
        iterates_(std::move(iterates)),
        residuals_(std::move(residuals)) {}

  const std::vector<std::complex<double>>& iterates() const noexcept { return iterates_; }
  const std::vector<double>& residuals() const noexcept { return residuals_; }

 private:
  std::vector<std::complex<double>> iterates_;
  std::vector<double> residuals_;
};

}  // namespace majorana
