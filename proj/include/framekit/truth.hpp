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

#include "framekit/errors.hpp"

namespace framekit {

/// Truth functional on the 2^N-element Boolean algebra of an N-cell
/// decomposition, tabulated over every algebra element. Elements are indexed
/// by their cell mask: bit j of the index is the coefficient of cell j.
struct TruthTable {
  int cell = -1;                 // the k with θ = θ_k; -1 if not of that form
  std::vector<uint8_t> values;   // values[mask] ∈ {0,1}, size 2^N

  int n_cells() const;
};

/// Structure tables of a concrete Boolean algebra, recorded from the domain
/// objects themselves (pointwise indicator arithmetic or projector products),
/// not assumed. complement[e] and product[a][b] give element indices.
struct AlgebraTables {
  int n_cells = 0;
  uint64_t full = 0;                            // index of the unit element
  std::vector<uint64_t> complement;             // size 2^N
  std::vector<std::vector<uint64_t>> product;   // size 2^N × 2^N

  std::size_t element_count() const { return complement.size(); }

  /// The mask-model tables (complement[a] = ~a, product[a][b] = a & b) every
  /// honest N-cell algebra must induce.
  static AlgebraTables mask_model(int n_cells);
};

/// θ(unit) = 1, θ(complement) = 1 − θ, θ(product) = θ·θ over the whole table.
bool satisfies_truth_conditions(const TruthTable& table, const AlgebraTables& algebra);

/// The N cell-selection functionals θ_k directly: values[mask] = bit k of
/// mask. Ordered by k.
std::vector<TruthTable> constructive_truth_tables(int n_cells);

/// Every 0/1 map on the 2^N algebra elements (all 2^(2^N) of them), filtered
/// by the three truth-functional conditions. Ordered by selected cell.
/// Throws TooLarge for N > 4.
std::vector<TruthTable> enumerate_truth_tables_exhaustive(const AlgebraTables& algebra);

}  // namespace framekit
