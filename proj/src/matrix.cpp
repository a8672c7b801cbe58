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

#include "framekit/matrix.hpp"

#include <cmath>
#include <utility>

namespace framekit {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NonFiniteEntry: return "NonFiniteEntry";
    case ErrorCode::InvalidTolerance: return "InvalidTolerance";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotAProjector: return "NotAProjector";
    case ErrorCode::InvalidDecomposition: return "InvalidDecomposition";
    case ErrorCode::SpaceMismatch: return "SpaceMismatch";
    case ErrorCode::InvalidPhaseSpace: return "InvalidPhaseSpace";
    case ErrorCode::InvalidCoarseGraining: return "InvalidCoarseGraining";
    case ErrorCode::NonpositiveThreshold: return "NonpositiveThreshold";
    case ErrorCode::MaskLengthMismatch: return "MaskLengthMismatch";
    case ErrorCode::NotInAlgebra: return "NotInAlgebra";
    case ErrorCode::NoncommutingProjector: return "NoncommutingProjector";
    case ErrorCode::NoncommutingFamily: return "NoncommutingFamily";
    case ErrorCode::PointNotInSpace: return "PointNotInSpace";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::ConstructionFailure: return "ConstructionFailure";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "UnknownError";
}

namespace {

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorCode::DimensionMismatch,
                "operands have dims " + std::to_string(a.dim()) + " and " +
                    std::to_string(b.dim()));
  }
}

void require_finite(const std::vector<Complex>& entries) {
  for (const Complex& z : entries) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw Error(ErrorCode::NonFiniteEntry, "matrix entry is NaN or infinite");
    }
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {
  if (dim == 0) {
    throw Error(ErrorCode::DimensionMismatch, "dim must be >= 1");
  }
}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (dim == 0) {
    throw Error(ErrorCode::DimensionMismatch, "dim must be >= 1");
  }
  if (entries_.size() != dim * dim) {
    throw Error(ErrorCode::DimensionMismatch,
                "entry count " + std::to_string(entries_.size()) +
                    " does not match dim " + std::to_string(dim));
  }
  require_finite(entries_);
}

ComplexMatrix ComplexMatrix::from_rows(
    std::initializer_list<std::initializer_list<Complex>> rows) {
  std::size_t dim = rows.size();
  std::vector<Complex> entries;
  entries.reserve(dim * dim);
  for (const auto& row : rows) {
    if (row.size() != dim) {
      throw Error(ErrorCode::DimensionMismatch, "matrix literal is not square");
    }
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return ComplexMatrix(dim, std::move(entries));
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& other) const {
  require_same_dim(*this, other);
  ComplexMatrix out(dim_);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    out.entries_[i] = entries_[i] + other.entries_[i];
  }
  return out;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& other) const {
  require_same_dim(*this, other);
  ComplexMatrix out(dim_);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    out.entries_[i] = entries_[i] - other.entries_[i];
  }
  return out;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& other) const {
  require_same_dim(*this, other);
  ComplexMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t k = 0; k < dim_; ++k) {
      const Complex aik = at(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        out.at(i, j) += aik * other.at(k, j);
      }
    }
  }
  return out;
}

ComplexMatrix ComplexMatrix::operator*(Complex scalar) const {
  ComplexMatrix out(dim_);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    out.entries_[i] = scalar * entries_[i];
  }
  return out;
}

bool ComplexMatrix::operator==(const ComplexMatrix& other) const {
  return dim_ == other.dim_ && entries_ == other.entries_;
}

ComplexMatrix operator*(Complex scalar, const ComplexMatrix& m) {
  return m * scalar;
}

ComplexMatrix adjoint(const ComplexMatrix& m) {
  ComplexMatrix out(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) {
      out.at(i, j) = std::conj(m.at(j, i));
    }
  }
  return out;
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t da = a.dim(), db = b.dim();
  ComplexMatrix out(da * db);
  for (std::size_t i = 0; i < da; ++i) {
    for (std::size_t j = 0; j < da; ++j) {
      const Complex aij = a.at(i, j);
      if (aij == Complex{}) continue;
      for (std::size_t k = 0; k < db; ++k) {
        for (std::size_t l = 0; l < db; ++l) {
          out.at(i * db + k, j * db + l) = aij * b.at(k, l);
        }
      }
    }
  }
  return out;
}

Complex trace(const ComplexMatrix& m) {
  Complex t{};
  for (std::size_t i = 0; i < m.dim(); ++i) t += m.at(i, i);
  return t;
}

double frobenius_norm(const ComplexMatrix& m) {
  double sum = 0.0;
  for (const Complex& z : m.entries()) sum += std::norm(z);
  return std::sqrt(sum);
}

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b);
  double sum = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    sum += std::norm(a.entries()[i] - b.entries()[i]);
  }
  return std::sqrt(sum);
}

double commutator_norm(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b);
  return frobenius_distance(a * b, b * a);
}

bool is_hermitian(const ComplexMatrix& m, const ToleranceContext& tol) {
  return frobenius_distance(m, adjoint(m)) <= tol.eps();
}

bool is_projector(const ComplexMatrix& p, const ToleranceContext& tol) {
  return is_hermitian(p, tol) && frobenius_distance(p * p, p) <= tol.eps();
}

}  // namespace framekit
