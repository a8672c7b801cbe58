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

#include "framekit/truth.hpp"

#include <algorithm>

namespace framekit {

int TruthTable::n_cells() const {
  int n = 0;
  while ((std::size_t{1} << n) < values.size()) ++n;
  return n;
}

AlgebraTables AlgebraTables::mask_model(int n_cells) {
  AlgebraTables t;
  t.n_cells = n_cells;
  const uint64_t count = uint64_t{1} << n_cells;
  t.full = count - 1;
  t.complement.resize(count);
  t.product.assign(count, std::vector<uint64_t>(count));
  for (uint64_t a = 0; a < count; ++a) {
    t.complement[a] = t.full & ~a;
    for (uint64_t b = 0; b < count; ++b) t.product[a][b] = a & b;
  }
  return t;
}

bool satisfies_truth_conditions(const TruthTable& table, const AlgebraTables& algebra) {
  const std::size_t count = algebra.element_count();
  if (table.values.size() != count) return false;
  if (table.values[algebra.full] != 1) return false;
  for (std::size_t a = 0; a < count; ++a) {
    if (table.values[algebra.complement[a]] != 1 - table.values[a]) return false;
  }
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = 0; b < count; ++b) {
      if (table.values[algebra.product[a][b]] !=
          (table.values[a] & table.values[b])) {
        return false;
      }
    }
  }
  return true;
}

std::vector<TruthTable> constructive_truth_tables(int n_cells) {
  const uint64_t count = uint64_t{1} << n_cells;
  std::vector<TruthTable> out;
  out.reserve(n_cells);
  for (int k = 0; k < n_cells; ++k) {
    TruthTable t;
    t.cell = k;
    t.values.resize(count);
    for (uint64_t mask = 0; mask < count; ++mask) {
      t.values[mask] = static_cast<uint8_t>((mask >> k) & 1);
    }
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<TruthTable> enumerate_truth_tables_exhaustive(const AlgebraTables& algebra) {
  if (algebra.n_cells > 4) {
    throw Error(ErrorCode::TooLarge,
                "exhaustive enumeration is capped at 4 cells (2^(2^N) candidate maps); got " +
                    std::to_string(algebra.n_cells));
  }
  const std::size_t count = algebra.element_count();
  std::vector<TruthTable> survivors;

  // Candidate map m: element e is true iff bit e of m is set.
  const uint64_t map_count = uint64_t{1} << count;
  TruthTable candidate;
  candidate.values.resize(count);
  for (uint64_t m = 0; m < map_count; ++m) {
    for (std::size_t e = 0; e < count; ++e) {
      candidate.values[e] = static_cast<uint8_t>((m >> e) & 1);
    }
    if (!satisfies_truth_conditions(candidate, algebra)) continue;

    TruthTable t = candidate;
    t.cell = -1;
    for (int k = 0; k < algebra.n_cells; ++k) {
      if (t.values[uint64_t{1} << k]) {
        t.cell = (t.cell == -1) ? k : -2;  // -2: not a single-cell selector
      }
    }
    survivors.push_back(std::move(t));
  }
  std::sort(survivors.begin(), survivors.end(),
            [](const TruthTable& a, const TruthTable& b) { return a.cell < b.cell; });
  return survivors;
}

}  // namespace framekit
