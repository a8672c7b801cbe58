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
#include <memory>
#include <vector>

#include "framekit/truth.hpp"

namespace framekit {

struct PhasePoint {
  double x = 0.0;
  double p = 0.0;

  bool operator==(const PhasePoint&) const = default;
};

/// Finite stand-in for a continuous phase space: an explicit list of distinct
/// (x, p) points. Indicators over it are exhaustively enumerable, which is
/// what lets the point-based universal truth functional be checked rather
/// than postulated.
class FinitePhaseSpace {
 public:
  explicit FinitePhaseSpace(std::vector<PhasePoint> points);

  const std::vector<PhasePoint>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }

  bool operator==(const FinitePhaseSpace&) const = default;

 private:
  std::vector<PhasePoint> points_;
};

using PhaseSpacePtr = std::shared_ptr<const FinitePhaseSpace>;

/// Regular nx × np grid over [x0,x1] × [p0,p1].
PhaseSpacePtr make_grid(std::size_t nx, std::size_t np, double x0, double x1,
                        double p0, double p1);

/// 0/1 function on a phase space; one value per point, in point order.
struct Indicator {
  PhaseSpacePtr space;
  std::vector<uint8_t> values;

  static Indicator zeros(PhaseSpacePtr space);
  static Indicator ones(PhaseSpacePtr space);
};

bool same_space(const Indicator& a, const Indicator& b);

Indicator indicator_not(const Indicator& p);
Indicator indicator_and(const Indicator& p, const Indicator& q);
Indicator indicator_or(const Indicator& p, const Indicator& q);

/// Points with x² + p² < e0 (unit mass and frequency, so energy = x² + p²).
/// Throws NonpositiveThreshold for e0 <= 0.
Indicator energy_ellipse_indicator(PhaseSpacePtr space, double e0);

/// Partition of the space into nonempty, pairwise disjoint cells whose
/// indicators sum to the constant 1.
class CoarseGraining {
 public:
  CoarseGraining(PhaseSpacePtr space, std::vector<Indicator> cells);

  /// From per-cell point-index lists (the partition JSON form).
  static CoarseGraining from_point_sets(PhaseSpacePtr space,
                                        const std::vector<std::vector<std::size_t>>& cells);

  /// Cells split by energy thresholds t1 < t2 < ...: below t1, between
  /// consecutive thresholds, and at-or-above the last. Empty bands are
  /// rejected by the invariant check.
  static CoarseGraining energy_bands(PhaseSpacePtr space,
                                     const std::vector<double>& thresholds);

  const PhaseSpacePtr& space() const { return space_; }
  const std::vector<Indicator>& cells() const { return cells_; }
  std::size_t n_cells() const { return cells_.size(); }

  /// Index of the unique cell whose indicator is 1 at the given point index.
  std::size_t cell_containing(std::size_t point_index) const;

 private:
  PhaseSpacePtr space_;
  std::vector<Indicator> cells_;
};

/// Σ_j mask[j]·D_j. The mask length must equal the cell count.
Indicator algebra_element(const CoarseGraining& g, const std::vector<int>& mask);
Indicator algebra_element(const CoarseGraining& g, uint64_t mask);

/// θ_k(P): 1 if P·D_k = D_k, 0 if P·D_k = 0. P must lie in the algebra of g
/// (no cell may be cut); NotInAlgebra otherwise.
int classical_truth_eval(const CoarseGraining& g, std::size_t k, const Indicator& p);

/// Structure tables of g's 2^N-element algebra, recorded pointwise.
AlgebraTables classical_algebra_tables(const CoarseGraining& g);

/// All truth functionals on g's algebra. Exhaustive mode really enumerates
/// the 2^(2^N) candidate maps and filters them (N ≤ 4); constructive mode
/// writes down the N cell selectors.
std::vector<TruthTable> enumerate_truth_functionals(const CoarseGraining& g,
                                                    bool exhaustive);

/// θ₀(P) = P(γ₀): a valuation defined on every indicator of the space.
class UniversalTruthFunctional {
 public:
  UniversalTruthFunctional(PhaseSpacePtr space, PhasePoint gamma0);

  int operator()(const Indicator& p) const;

  std::size_t point_index() const { return index_; }
  const PhaseSpacePtr& space() const { return space_; }

 private:
  PhaseSpacePtr space_;
  std::size_t index_;
};

UniversalTruthFunctional universal_truth_functional(PhaseSpacePtr space,
                                                    PhasePoint gamma0);

}  // namespace framekit
