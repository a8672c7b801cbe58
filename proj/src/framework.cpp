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

#include "framekit/framework.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace framekit {

DecompositionOfIdentity::DecompositionOfIdentity(std::size_t dim,
                                                 std::vector<ComplexMatrix> cells,
                                                 const ToleranceContext& tol)
    : dim_(dim), cells_(std::move(cells)) {
  if (cells_.empty()) {
    throw Error(ErrorCode::InvalidDecomposition, "no cells");
  }
  ComplexMatrix sum(dim_);
  for (std::size_t j = 0; j < cells_.size(); ++j) {
    const ComplexMatrix& cell = cells_[j];
    if (cell.dim() != dim_) {
      throw Error(ErrorCode::DimensionMismatch,
                  "cell " + std::to_string(j) + " has dim " +
                      std::to_string(cell.dim()) + ", expected " + std::to_string(dim_));
    }
    if (!is_projector(cell, tol)) {
      throw Error(ErrorCode::InvalidDecomposition,
                  "cell " + std::to_string(j) + " is not a projector");
    }
    if (frobenius_norm(cell) <= tol.eps()) {
      throw Error(ErrorCode::InvalidDecomposition,
                  "cell " + std::to_string(j) + " is zero");
    }
    sum = sum + cell;
  }
  for (std::size_t j = 0; j < cells_.size(); ++j) {
    for (std::size_t k = j + 1; k < cells_.size(); ++k) {
      if (frobenius_norm(cells_[j] * cells_[k]) > tol.eps()) {
        throw Error(ErrorCode::InvalidDecomposition,
                    "cells " + std::to_string(j) + " and " + std::to_string(k) +
                        " are not orthogonal");
      }
    }
  }
  if (frobenius_distance(sum, ComplexMatrix::identity(dim_)) > tol.eps()) {
    throw Error(ErrorCode::InvalidDecomposition, "cells do not sum to the identity");
  }
}

ComplexMatrix AlgebraElement::realize() const {
  return realize_element(*decomposition, mask);
}

ComplexMatrix realize_element(const DecompositionOfIdentity& d, uint64_t mask) {
  if (d.n_cells() < 64 && (mask >> d.n_cells()) != 0) {
    throw Error(ErrorCode::MaskLengthMismatch, "mask has bits beyond the cell count");
  }
  ComplexMatrix out(d.dim());
  for (std::size_t j = 0; j < d.n_cells(); ++j) {
    if ((mask >> j) & 1) out = out + d.cells()[j];
  }
  return out;
}

QuantumTruthFunctional make_truth_functional(DecompositionOfIdentity d, std::size_t cell) {
  if (cell >= d.n_cells()) {
    throw Error(ErrorCode::InvalidInput,
                "cell index " + std::to_string(cell) + " out of range for " +
                    std::to_string(d.n_cells()) + " cells");
  }
  return QuantumTruthFunctional{std::move(d), cell};
}

int quantum_truth_eval(const QuantumTruthFunctional& theta, const ComplexMatrix& p,
                       const ToleranceContext& tol) {
  const DecompositionOfIdentity& d = theta.decomposition;
  if (p.dim() != d.dim()) {
    throw Error(ErrorCode::DimensionMismatch,
                "projector dim " + std::to_string(p.dim()) + " vs decomposition dim " +
                    std::to_string(d.dim()));
  }
  if (!is_projector(p, tol)) {
    throw Error(ErrorCode::NotAProjector, "operand is not a projector within eps");
  }
  for (std::size_t j = 0; j < d.n_cells(); ++j) {
    if (commutator_norm(p, d.cells()[j]) > tol.eps()) {
      throw Error(ErrorCode::NoncommutingProjector,
                  "projector does not commute with cell " + std::to_string(j));
    }
  }
  const ComplexMatrix product = p * d.cells()[theta.cell];
  if (frobenius_distance(product, d.cells()[theta.cell]) <= tol.eps()) return 1;
  if (frobenius_norm(product) <= tol.eps()) return 0;
  throw Error(ErrorCode::NotInAlgebra,
              "P·D_k is neither D_k nor 0 for cell " + std::to_string(theta.cell));
}

Observable decomposition_from_observable(const ComplexMatrix& a,
                                         const ToleranceContext& tol) {
  std::vector<SpectralPair> pairs = eigen_decompose_hermitian(a, tol);
  std::vector<double> eigenvalues;
  std::vector<ComplexMatrix> cells;
  eigenvalues.reserve(pairs.size());
  cells.reserve(pairs.size());
  for (auto& pair : pairs) {
    eigenvalues.push_back(pair.eigenvalue);
    cells.push_back(std::move(pair.projector));
  }
  return Observable{a, std::move(eigenvalues),
                    DecompositionOfIdentity(a.dim(), std::move(cells), tol)};
}

double assign_value(const QuantumTruthFunctional& theta, const Observable& a,
                    const ToleranceContext& tol) {
  double value = 0.0;
  int true_count = 0;
  for (std::size_t j = 0; j < a.spectral.n_cells(); ++j) {
    const int v = quantum_truth_eval(theta, a.spectral.cells()[j], tol);
    if (v) {
      value = a.eigenvalues[j];
      ++true_count;
    }
  }
  if (true_count != 1) {
    throw Error(ErrorCode::ConstructionFailure,
                "spectral projectors received " + std::to_string(true_count) +
                    " true values under the functional (expected exactly 1)");
  }
  return value;
}

DecompositionOfIdentity joint_decomposition(const std::vector<ComplexMatrix>& observables,
                                            const ToleranceContext& tol) {
  if (observables.empty()) {
    throw Error(ErrorCode::InvalidInput, "need at least one observable");
  }
  const std::size_t dim = observables.front().dim();
  for (const ComplexMatrix& obs : observables) {
    if (obs.dim() != dim) {
      throw Error(ErrorCode::DimensionMismatch, "observables differ in dimension");
    }
  }
  for (std::size_t i = 0; i < observables.size(); ++i) {
    for (std::size_t j = i + 1; j < observables.size(); ++j) {
      if (commutator_norm(observables[i], observables[j]) > tol.eps()) {
        throw Error(ErrorCode::NoncommutingFamily,
                    "observables " + std::to_string(i) + " and " + std::to_string(j) +
                        " do not commute");
      }
    }
  }

  std::vector<std::vector<SpectralPair>> spectra;
  spectra.reserve(observables.size());
  for (const ComplexMatrix& obs : observables) {
    spectra.push_back(eigen_decompose_hermitian(obs, tol));
  }

  // Walk parent-index tuples in lexicographic order, keeping nonzero products.
  std::vector<ComplexMatrix> cells;
  std::vector<std::size_t> tuple(spectra.size(), 0);
  while (true) {
    ComplexMatrix product = spectra[0][tuple[0]].projector;
    for (std::size_t i = 1; i < spectra.size(); ++i) {
      product = product * spectra[i][tuple[i]].projector;
    }
    if (frobenius_norm(product) > tol.eps()) {
      cells.push_back((product + adjoint(product)) * Complex(0.5, 0.0));
    }

    std::size_t level = spectra.size();
    while (level > 0) {
      --level;
      if (++tuple[level] < spectra[level].size()) break;
      tuple[level] = 0;
      if (level == 0) return DecompositionOfIdentity(dim, std::move(cells), tol);
    }
  }
}

AlgebraTables quantum_algebra_tables(const DecompositionOfIdentity& d,
                                     const ToleranceContext& tol) {
  const int n = static_cast<int>(d.n_cells());
  if (n > 6) {
    throw Error(ErrorCode::TooLarge, "algebra tables capped at 6 cells, got " +
                                         std::to_string(n));
  }
  const uint64_t count = uint64_t{1} << n;
  std::vector<ComplexMatrix> elements;
  elements.reserve(count);
  for (uint64_t mask = 0; mask < count; ++mask) {
    elements.push_back(realize_element(d, mask));
  }
  // Distinct masks differ by at least one whole cell, so Frobenius distance
  // between distinct elements is >= 1 and eps-matching is unambiguous.
  auto find = [&](const ComplexMatrix& m) -> uint64_t {
    for (uint64_t e = 0; e < count; ++e) {
      if (frobenius_distance(m, elements[e]) <= tol.eps()) return e;
    }
    throw Error(ErrorCode::NotInAlgebra, "operation left the algebra");
  };

  AlgebraTables tables;
  tables.n_cells = n;
  tables.full = find(ComplexMatrix::identity(d.dim()));
  tables.complement.resize(count);
  tables.product.assign(count, std::vector<uint64_t>(count));
  const ComplexMatrix id = ComplexMatrix::identity(d.dim());
  for (uint64_t a = 0; a < count; ++a) {
    tables.complement[a] = find(id - elements[a]);
    for (uint64_t b = 0; b < count; ++b) {
      tables.product[a][b] = find(elements[a] * elements[b]);
    }
  }
  return tables;
}

std::vector<TruthTable> enumerate_quantum_truth_functionals(
    const DecompositionOfIdentity& d, bool exhaustive, const ToleranceContext& tol) {
  if (!exhaustive) {
    return constructive_truth_tables(static_cast<int>(d.n_cells()));
  }
  if (d.n_cells() > 4) {
    throw Error(ErrorCode::TooLarge,
                "exhaustive enumeration is capped at 4 cells; got " +
                    std::to_string(d.n_cells()));
  }
  return enumerate_truth_tables_exhaustive(quantum_algebra_tables(d, tol));
}

double Polynomial3::eval(double a, double b, double c) const {
  double sum = 0.0;
  for (const Term& t : terms) {
    sum += t.coeff * std::pow(a, t.ea) * std::pow(b, t.eb) * std::pow(c, t.ec);
  }
  return sum;
}

ComplexMatrix Polynomial3::eval(const ComplexMatrix& a, const ComplexMatrix& b,
                                const ComplexMatrix& c) const {
  const std::size_t dim = a.dim();
  ComplexMatrix sum(dim);
  for (const Term& t : terms) {
    ComplexMatrix term = ComplexMatrix::identity(dim) * Complex(t.coeff, 0.0);
    for (int i = 0; i < t.ea; ++i) term = term * a;
    for (int i = 0; i < t.eb; ++i) term = term * b;
    for (int i = 0; i < t.ec; ++i) term = term * c;
    sum = sum + term;
  }
  return sum;
}

bool check_functional_consistency(const QuantumTruthFunctional& theta,
                                  const Observable& a, const Observable& b,
                                  const Observable& c, const Polynomial3& p,
                                  const ToleranceContext& tol) {
  const ComplexMatrix* mats[3] = {&a.matrix, &b.matrix, &c.matrix};
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (commutator_norm(*mats[i], *mats[j]) > tol.eps()) {
        throw Error(ErrorCode::NoncommutingFamily,
                    "observables " + std::to_string(i) + " and " + std::to_string(j) +
                        " do not commute");
      }
    }
  }
  const Observable evaluated =
      decomposition_from_observable(p.eval(a.matrix, b.matrix, c.matrix), tol);
  const double lhs = assign_value(theta, evaluated, tol);
  const double rhs =
      p.eval(assign_value(theta, a, tol), assign_value(theta, b, tol),
             assign_value(theta, c, tol));
  return std::abs(lhs - rhs) <= tol.eps();
}

}  // namespace framekit
