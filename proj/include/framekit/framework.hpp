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

#include <cstdint>
#include <vector>

#include "framekit/matrix.hpp"
#include "framekit/spectral.hpp"
#include "framekit/truth.hpp"

namespace framekit {

/// Ordered list of mutually orthogonal nonzero projectors summing to the
/// identity. The quantum counterpart of a coarse graining; its 2^N masked
/// sums form the Boolean algebra the truth machinery works on.
class DecompositionOfIdentity {
 public:
  /// Validates every invariant against tol: each cell a projector, no zero
  /// cell, DⱼDₖ = δⱼₖDⱼ, ΣDⱼ = I.
  DecompositionOfIdentity(std::size_t dim, std::vector<ComplexMatrix> cells,
                          const ToleranceContext& tol = ToleranceContext());

  std::size_t dim() const { return dim_; }
  const std::vector<ComplexMatrix>& cells() const { return cells_; }
  std::size_t n_cells() const { return cells_.size(); }

 private:
  std::size_t dim_;
  std::vector<ComplexMatrix> cells_;
};

/// Σ_j mask[j]·D_j for a cell mask; a non-owning view into a decomposition.
struct AlgebraElement {
  const DecompositionOfIdentity* decomposition = nullptr;
  uint64_t mask = 0;

  ComplexMatrix realize() const;
};

ComplexMatrix realize_element(const DecompositionOfIdentity& d, uint64_t mask);

/// θ_k: the truth functional selecting cell k of a decomposition.
struct QuantumTruthFunctional {
  DecompositionOfIdentity decomposition;
  std::size_t cell = 0;  // 0-based; valid range [0, N)
};

QuantumTruthFunctional make_truth_functional(DecompositionOfIdentity d, std::size_t cell);

/// θ(P) per the cell-selection rule: 1 if P·D_k = D_k, 0 if P·D_k = 0
/// (both within eps). P must be a projector commuting with every cell;
/// NoncommutingProjector / NotInAlgebra otherwise.
int quantum_truth_eval(const QuantumTruthFunctional& theta, const ComplexMatrix& p,
                       const ToleranceContext& tol = ToleranceContext());

/// Hermitian operator together with its spectral form A = Σ aⱼDⱼ,
/// eigenvalues strictly decreasing, cells indexed in step with eigenvalues.
struct Observable {
  ComplexMatrix matrix;
  std::vector<double> eigenvalues;
  DecompositionOfIdentity spectral;
};

Observable decomposition_from_observable(const ComplexMatrix& a,
                                         const ToleranceContext& tol = ToleranceContext());

/// The eigenvalue whose spectral projector θ marks true.
double assign_value(const QuantumTruthFunctional& theta, const Observable& a,
                    const ToleranceContext& tol = ToleranceContext());

/// Common refinement of the spectral decompositions of a pairwise-commuting
/// Hermitian family: nonzero products of one spectral cell per operator,
/// ordered lexicographically by parent-cell indices.
/// Throws NoncommutingFamily naming the first offending pair.
DecompositionOfIdentity joint_decomposition(const std::vector<ComplexMatrix>& observables,
                                            const ToleranceContext& tol = ToleranceContext());

/// Structure tables of the decomposition's 2^N algebra, with complements and
/// products computed by actual matrix arithmetic and matched back to masks
/// within eps. Capped at N ≤ 6.
AlgebraTables quantum_algebra_tables(const DecompositionOfIdentity& d,
                                     const ToleranceContext& tol = ToleranceContext());

/// Quantum mirror of the classical census: constructive mode lists the N cell
/// selectors; exhaustive mode (N ≤ 4) filters all 2^(2^N) candidate maps
/// through the algebra tables.
std::vector<TruthTable> enumerate_quantum_truth_functionals(
    const DecompositionOfIdentity& d, bool exhaustive,
    const ToleranceContext& tol = ToleranceContext());

/// Real polynomial in three (commuting) variables, ordered term list.
struct Polynomial3 {
  struct Term {
    double coeff = 0.0;
    int ea = 0, eb = 0, ec = 0;
  };
  std::vector<Term> terms;

  double eval(double a, double b, double c) const;
  ComplexMatrix eval(const ComplexMatrix& a, const ComplexMatrix& b,
                     const ComplexMatrix& c) const;
};

/// True iff the value θ assigns to p(A,B,C) equals p applied to the values θ
/// assigns to A, B, C (within eps).
bool check_functional_consistency(const QuantumTruthFunctional& theta,
                                  const Observable& a, const Observable& b,
                                  const Observable& c, const Polynomial3& p,
                                  const ToleranceContext& tol = ToleranceContext());

}  // namespace framekit
