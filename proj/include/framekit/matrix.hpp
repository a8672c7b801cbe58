// Copyright 2026 The framekit developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "framekit/errors.hpp"
#include "framekit/tolerance.hpp"

namespace framekit {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major.
///
/// Entries are plain doubles on purpose: every operator the no-go argument
/// needs is assembled from values in {0, ±1, ±i} scaled by powers of two, so
/// sums and products of those entries stay exact in IEEE arithmetic. The
/// generic (inexact) path through this type is the eigendecomposition in
/// spectral.hpp.
class ComplexMatrix {
 public:
  /// Zero matrix of the given dimension. dim must be >= 1.
  explicit ComplexMatrix(std::size_t dim);

  /// From a row-major entry list of length dim*dim. Rejects non-finite
  /// entries.
  ComplexMatrix(std::size_t dim, std::vector<Complex> entries);

  /// Convenience for literals in tests and operator tables.
  static ComplexMatrix from_rows(
      std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix zero(std::size_t dim) { return ComplexMatrix(dim); }

  std::size_t dim() const { return dim_; }

  Complex& at(std::size_t row, std::size_t col) {
    return entries_[row * dim_ + col];
  }
  const Complex& at(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }

  const std::vector<Complex>& entries() const { return entries_; }

  ComplexMatrix operator+(const ComplexMatrix& other) const;
  ComplexMatrix operator-(const ComplexMatrix& other) const;
  ComplexMatrix operator*(const ComplexMatrix& other) const;
  ComplexMatrix operator*(Complex scalar) const;

  /// Bitwise equality of all entries (exact-arithmetic comparisons only).
  bool operator==(const ComplexMatrix& other) const;
  bool operator!=(const ComplexMatrix& other) const { return !(*this == other); }

 private:
  std::size_t dim_;
  std::vector<Complex> entries_;
};

ComplexMatrix operator*(Complex scalar, const ComplexMatrix& m);

/// Conjugate transpose.
ComplexMatrix adjoint(const ComplexMatrix& m);

/// Kronecker product; slot order is (left ⊗ right).
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

Complex trace(const ComplexMatrix& m);

double frobenius_norm(const ComplexMatrix& m);
double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b);

/// ‖AB − BA‖_F; dimension-checked.
double commutator_norm(const ComplexMatrix& a, const ComplexMatrix& b);

bool is_hermitian(const ComplexMatrix& m, const ToleranceContext& tol);

/// ‖P² − P‖_F ≤ eps and ‖P − P†‖_F ≤ eps.
bool is_projector(const ComplexMatrix& p, const ToleranceContext& tol);

}  // namespace framekit
