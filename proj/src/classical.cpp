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

#include "framekit/classical.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

namespace framekit {

namespace {

void require_same_space(const Indicator& a, const Indicator& b) {
  if (!same_space(a, b)) {
    throw Error(ErrorCode::SpaceMismatch,
                "indicators belong to different phase spaces");
  }
}

bool all_zero(const std::vector<uint8_t>& v) {
  return std::all_of(v.begin(), v.end(), [](uint8_t x) { return x == 0; });
}

}  // namespace

FinitePhaseSpace::FinitePhaseSpace(std::vector<PhasePoint> points)
    : points_(std::move(points)) {
  if (points_.empty()) {
    throw Error(ErrorCode::InvalidPhaseSpace, "phase space must be nonempty");
  }
  std::vector<PhasePoint> sorted = points_;
  std::sort(sorted.begin(), sorted.end(), [](const PhasePoint& a, const PhasePoint& b) {
    return a.x != b.x ? a.x < b.x : a.p < b.p;
  });
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::InvalidPhaseSpace, "phase-space points must be distinct");
  }
}

PhaseSpacePtr make_grid(std::size_t nx, std::size_t np, double x0, double x1,
                        double p0, double p1) {
  if (nx == 0 || np == 0) {
    throw Error(ErrorCode::InvalidPhaseSpace, "grid must have at least one point per axis");
  }
  std::vector<PhasePoint> points;
  points.reserve(nx * np);
  for (std::size_t i = 0; i < nx; ++i) {
    const double x = nx == 1 ? x0 : x0 + (x1 - x0) * static_cast<double>(i) /
                                          static_cast<double>(nx - 1);
    for (std::size_t j = 0; j < np; ++j) {
      const double p = np == 1 ? p0 : p0 + (p1 - p0) * static_cast<double>(j) /
                                            static_cast<double>(np - 1);
      points.push_back({x, p});
    }
  }
  return std::make_shared<const FinitePhaseSpace>(std::move(points));
}

Indicator Indicator::zeros(PhaseSpacePtr space) {
  std::vector<uint8_t> values(space->size(), 0);
  return Indicator{std::move(space), std::move(values)};
}

Indicator Indicator::ones(PhaseSpacePtr space) {
  std::vector<uint8_t> values(space->size(), 1);
  return Indicator{std::move(space), std::move(values)};
}

bool same_space(const Indicator& a, const Indicator& b) {
  if (a.space == b.space) return true;
  return a.space && b.space && *a.space == *b.space;
}

Indicator indicator_not(const Indicator& p) {
  Indicator out = p;
  for (auto& v : out.values) v = static_cast<uint8_t>(1 - v);
  return out;
}

Indicator indicator_and(const Indicator& p, const Indicator& q) {
  require_same_space(p, q);
  Indicator out = p;
  for (std::size_t i = 0; i < out.values.size(); ++i) {
    out.values[i] = static_cast<uint8_t>(p.values[i] * q.values[i]);
  }
  return out;
}

Indicator indicator_or(const Indicator& p, const Indicator& q) {
  require_same_space(p, q);
  Indicator out = p;
  for (std::size_t i = 0; i < out.values.size(); ++i) {
    out.values[i] = static_cast<uint8_t>(p.values[i] + q.values[i] -
                                         p.values[i] * q.values[i]);
  }
  return out;
}

Indicator energy_ellipse_indicator(PhaseSpacePtr space, double e0) {
  if (!(e0 > 0.0)) {
    throw Error(ErrorCode::NonpositiveThreshold,
                "energy threshold must be positive, got " + std::to_string(e0));
  }
  Indicator out = Indicator::zeros(space);
  for (std::size_t i = 0; i < space->size(); ++i) {
    const PhasePoint& pt = space->points()[i];
    out.values[i] = (pt.x * pt.x + pt.p * pt.p < e0) ? 1 : 0;
  }
  return out;
}

CoarseGraining::CoarseGraining(PhaseSpacePtr space, std::vector<Indicator> cells)
    : space_(std::move(space)), cells_(std::move(cells)) {
  if (cells_.empty()) {
    throw Error(ErrorCode::InvalidCoarseGraining, "no cells");
  }
  std::vector<uint8_t> coverage(space_->size(), 0);
  for (std::size_t j = 0; j < cells_.size(); ++j) {
    const Indicator& cell = cells_[j];
    if (!(cell.space == space_ || (cell.space && *cell.space == *space_))) {
      throw Error(ErrorCode::SpaceMismatch,
                  "cell " + std::to_string(j) + " lives on a different space");
    }
    if (all_zero(cell.values)) {
      throw Error(ErrorCode::InvalidCoarseGraining,
                  "cell " + std::to_string(j) + " is empty");
    }
    for (std::size_t i = 0; i < coverage.size(); ++i) {
      coverage[i] = static_cast<uint8_t>(coverage[i] + cell.values[i]);
      if (coverage[i] > 1) {
        throw Error(ErrorCode::InvalidCoarseGraining,
                    "cells overlap at point " + std::to_string(i));
      }
    }
  }
  for (std::size_t i = 0; i < coverage.size(); ++i) {
    if (coverage[i] != 1) {
      throw Error(ErrorCode::InvalidCoarseGraining,
                  "cells do not cover point " + std::to_string(i));
    }
  }
}

CoarseGraining CoarseGraining::from_point_sets(
    PhaseSpacePtr space, const std::vector<std::vector<std::size_t>>& cells) {
  std::vector<Indicator> indicators;
  indicators.reserve(cells.size());
  for (const auto& cell : cells) {
    Indicator ind = Indicator::zeros(space);
    for (std::size_t idx : cell) {
      if (idx >= space->size()) {
        throw Error(ErrorCode::InvalidCoarseGraining,
                    "point index " + std::to_string(idx) + " out of range");
      }
      ind.values[idx] = 1;
    }
    indicators.push_back(std::move(ind));
  }
  return CoarseGraining(space, std::move(indicators));
}

CoarseGraining CoarseGraining::energy_bands(PhaseSpacePtr space,
                                            const std::vector<double>& thresholds) {
  if (thresholds.empty()) {
    throw Error(ErrorCode::InvalidCoarseGraining, "need at least one threshold");
  }
  for (std::size_t i = 1; i < thresholds.size(); ++i) {
    if (!(thresholds[i - 1] < thresholds[i])) {
      throw Error(ErrorCode::InvalidCoarseGraining,
                  "thresholds must be strictly increasing");
    }
  }
  std::vector<Indicator> cells;
  Indicator inside_prev = Indicator::zeros(space);
  for (double t : thresholds) {
    Indicator inside = energy_ellipse_indicator(space, t);
    cells.push_back(indicator_and(inside, indicator_not(inside_prev)));
    inside_prev = std::move(inside);
  }
  cells.push_back(indicator_not(inside_prev));
  return CoarseGraining(space, std::move(cells));
}

std::size_t CoarseGraining::cell_containing(std::size_t point_index) const {
  if (point_index >= space_->size()) {
    throw Error(ErrorCode::PointNotInSpace,
                "point index " + std::to_string(point_index) + " out of range");
  }
  for (std::size_t j = 0; j < cells_.size(); ++j) {
    if (cells_[j].values[point_index]) return j;
  }
  throw Error(ErrorCode::InvalidCoarseGraining, "no cell covers the point");
}

Indicator algebra_element(const CoarseGraining& g, const std::vector<int>& mask) {
  if (mask.size() != g.n_cells()) {
    throw Error(ErrorCode::MaskLengthMismatch,
                "mask length " + std::to_string(mask.size()) + " vs " +
                    std::to_string(g.n_cells()) + " cells");
  }
  Indicator out = Indicator::zeros(g.space());
  for (std::size_t j = 0; j < mask.size(); ++j) {
    if (mask[j]) out = indicator_or(out, g.cells()[j]);
  }
  return out;
}

Indicator algebra_element(const CoarseGraining& g, uint64_t mask) {
  if (g.n_cells() < 64 && (mask >> g.n_cells()) != 0) {
    throw Error(ErrorCode::MaskLengthMismatch, "mask has bits beyond the cell count");
  }
  std::vector<int> bits(g.n_cells());
  for (std::size_t j = 0; j < bits.size(); ++j) {
    bits[j] = static_cast<int>((mask >> j) & 1);
  }
  return algebra_element(g, bits);
}

int classical_truth_eval(const CoarseGraining& g, std::size_t k, const Indicator& p) {
  if (k >= g.n_cells()) {
    throw Error(ErrorCode::InvalidInput, "cell index out of range");
  }
  require_same_space(p, g.cells()[0]);
  for (std::size_t j = 0; j < g.n_cells(); ++j) {
    const Indicator product = indicator_and(p, g.cells()[j]);
    const bool is_cell = product.values == g.cells()[j].values;
    const bool is_zero = all_zero(product.values);
    if (!is_cell && !is_zero) {
      throw Error(ErrorCode::NotInAlgebra,
                  "indicator cuts cell " + std::to_string(j));
    }
  }
  const Indicator product = indicator_and(p, g.cells()[k]);
  return product.values == g.cells()[k].values ? 1 : 0;
}

AlgebraTables classical_algebra_tables(const CoarseGraining& g) {
  const int n = static_cast<int>(g.n_cells());
  if (n > 16) {
    throw Error(ErrorCode::TooLarge, "algebra tables capped at 16 cells");
  }
  const uint64_t count = uint64_t{1} << n;

  std::vector<Indicator> elements;
  elements.reserve(count);
  std::map<std::vector<uint8_t>, uint64_t> lookup;
  for (uint64_t mask = 0; mask < count; ++mask) {
    elements.push_back(algebra_element(g, mask));
    lookup[elements.back().values] = mask;
  }
  auto find = [&](const Indicator& ind) {
    auto it = lookup.find(ind.values);
    if (it == lookup.end()) {
      throw Error(ErrorCode::NotInAlgebra, "operation left the algebra");
    }
    return it->second;
  };

  AlgebraTables tables;
  tables.n_cells = n;
  tables.full = find(Indicator::ones(g.space()));
  tables.complement.resize(count);
  tables.product.assign(count, std::vector<uint64_t>(count));
  for (uint64_t a = 0; a < count; ++a) {
    tables.complement[a] = find(indicator_not(elements[a]));
    for (uint64_t b = 0; b < count; ++b) {
      tables.product[a][b] = find(indicator_and(elements[a], elements[b]));
    }
  }
  return tables;
}

std::vector<TruthTable> enumerate_truth_functionals(const CoarseGraining& g,
                                                    bool exhaustive) {
  if (!exhaustive) {
    return constructive_truth_tables(static_cast<int>(g.n_cells()));
  }
  if (g.n_cells() > 4) {
    throw Error(ErrorCode::TooLarge,
                "exhaustive enumeration is capped at 4 cells; got " +
                    std::to_string(g.n_cells()));
  }
  return enumerate_truth_tables_exhaustive(classical_algebra_tables(g));
}

UniversalTruthFunctional::UniversalTruthFunctional(PhaseSpacePtr space, PhasePoint gamma0)
    : space_(std::move(space)) {
  const auto& pts = space_->points();
  const auto it = std::find(pts.begin(), pts.end(), gamma0);
  if (it == pts.end()) {
    throw Error(ErrorCode::PointNotInSpace,
                "gamma0 = (" + std::to_string(gamma0.x) + ", " +
                    std::to_string(gamma0.p) + ") is not a point of the space");
  }
  index_ = static_cast<std::size_t>(it - pts.begin());
}

int UniversalTruthFunctional::operator()(const Indicator& p) const {
  if (!(p.space == space_ || (p.space && *p.space == *space_))) {
    throw Error(ErrorCode::SpaceMismatch, "indicator lives on a different space");
  }
  return p.values[index_];
}

UniversalTruthFunctional universal_truth_functional(PhaseSpacePtr space,
                                                    PhasePoint gamma0) {
  return UniversalTruthFunctional(std::move(space), gamma0);
}

}  // namespace framekit
