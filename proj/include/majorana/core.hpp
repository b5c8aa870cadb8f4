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
#include <cstddef>
#include <cstdint>
#include <vector>

#include "majorana/errors.hpp"

namespace majorana {

using Complex = std::complex<double>;

/// Dimensions are capped so that binomial coefficients and the Ryser subset
/// masks fit in machine words.
inline constexpr int kMaxDim = 64;

/// Dense row-major complex matrix. Everything in this library is desk scale
/// (2 x (d-1) star matrices, d x d densities, Gram matrices up to 24 x 24),
/// so this stays deliberately minimal.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static CMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  CMatrix adjoint() const;
  Complex trace() const;

  friend bool operator==(const CMatrix&, const CMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

/// Exact binomial coefficient C(n, k) for 0 <= k <= n <= 64, computed by the
/// multiplicative formula with interleaved division (every intermediate
/// quotient is itself a binomial coefficient, so the division is exact).
std::uint64_t binomial(int n, int k);

/// n! as a double. Exact up to 20!, correctly rounded above that; all callers
/// divide permanents by this, so one ulp of rounding is immaterial.
double factorial(int n);

/// A complex amplitude vector (a_0, ..., a_{d-1}) with d >= 2. Not required
/// to have unit norm; the zero vector is rejected at construction.
class StateVector {
 public:
  explicit StateVector(std::vector<Complex> amplitudes);

  int dim() const noexcept { return static_cast<int>(amplitudes_.size()); }
  const std::vector<Complex>& amplitudes() const noexcept { return amplitudes_; }
  Complex operator[](int j) const { return amplitudes_[static_cast<std::size_t>(j)]; }

  /// Index r of the first nonzero amplitude.
  int first_nonzero() const noexcept;

  double norm() const noexcept;
  bool is_unit(double tol = 1e-10) const noexcept;

 private:
  std::vector<Complex> amplitudes_;
};

/// One qubit (alpha, beta) of a stellar representation, identified up to a
/// nonzero scalar. (0, 0) is rejected.
class Star {
 public:
  Star(Complex alpha, Complex beta);

  Complex alpha() const noexcept { return alpha_; }
  Complex beta() const noexcept { return beta_; }

  /// Projective canonical form: (1, beta/alpha) when alpha != 0, else (0, 1).
  Star canonical() const;

  /// Euclidean norm of the pair.
  double norm() const noexcept;

 private:
  Complex alpha_;
  Complex beta_;
};

/// An unordered multiset of d-1 stars together with a global complex
/// prefactor; represents the decomposable tensor prefactor * v_1 * ... *
/// v_{d-1}. Permuting the stars, or rescaling one star by mu while dividing
/// the prefactor by mu, leaves the represented tensor unchanged.
class StarSet {
 public:
  explicit StarSet(std::vector<Star> stars, Complex prefactor = 1.0);

  const std::vector<Star>& stars() const noexcept { return stars_; }
  Complex prefactor() const noexcept { return prefactor_; }

  /// Dimension d of the represented state (= star count + 1).
  int dim() const noexcept { return static_cast<int>(stars_.size()) + 1; }

 private:
  std::vector<Star> stars_;
  Complex prefactor_;
};

/// A point on (or numerically near) the unit sphere in R^3.
struct BlochPoint {
  double x = 0.0;
  double y = 0.0;
  double z = 1.0;

  double norm() const noexcept;
};

/// The 2 x (d-1) selector matrix C_j: d-1-j columns e_0 followed by j
/// columns e_1. Its adjoint against a star matrix extracts basis
/// coefficients via permanents.
struct SelectorMatrix {
  int j = 0;
  CMatrix columns;
};

SelectorMatrix selector_matrix(int d, int j);

/// The 2 x n matrix whose columns are the given stars.
CMatrix star_matrix(const std::vector<Star>& stars);

}  // namespace majorana
