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

#include "framekit/compat.hpp"

namespace framekit {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::True: return "TRUE";
    case Verdict::False: return "FALSE";
    case Verdict::Meaningless: return "MEANINGLESS";
  }
  return "UNKNOWN";
}

PropositionOutcome negate(const PropositionOutcome& outcome) {
  switch (outcome.tag) {
    case Verdict::True:
      return {Verdict::False, outcome.detail};
    case Verdict::False:
      return {Verdict::True, outcome.detail};
    case Verdict::Meaningless:
      return outcome;  // negation of a meaningless proposition stays meaningless
  }
  return outcome;
}

bool commutes(const ComplexMatrix& p, const ComplexMatrix& q,
              const ToleranceContext& tol) {
  return commutator_norm(p, q) <= tol.eps();
}

ConjunctionResult conjunction(const ComplexMatrix& p, const ComplexMatrix& q,
                              const ToleranceContext& tol) {
  if (p.dim() != q.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "conjunction operands differ in dimension");
  }
  if (!commutes(p, q, tol)) {
    return ConjunctionResult{std::nullopt,
                             "projectors do not commute; the conjunction has no meaning "
                             "(it is not assigned the zero projector)"};
  }
  return ConjunctionResult{p * q, ""};
}

CompatibilityReport common_refinement(const DecompositionOfIdentity& d1,
                                      const DecompositionOfIdentity& d2,
                                      const ToleranceContext& tol) {
  if (d1.dim() != d2.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "decompositions differ in dimension");
  }
  for (std::size_t j = 0; j < d1.n_cells(); ++j) {
    for (std::size_t k = 0; k < d2.n_cells(); ++k) {
      if (!commutes(d1.cells()[j], d2.cells()[k], tol)) {
        return CompatibilityReport{false, std::make_pair(j, k), std::nullopt};
      }
    }
  }
  std::vector<ComplexMatrix> cells;
  for (std::size_t j = 0; j < d1.n_cells(); ++j) {
    for (std::size_t k = 0; k < d2.n_cells(); ++k) {
      ComplexMatrix product = d1.cells()[j] * d2.cells()[k];
      if (frobenius_norm(product) > tol.eps()) {
        cells.push_back((product + adjoint(product)) * Complex(0.5, 0.0));
      }
    }
  }
  return CompatibilityReport{
      true, std::nullopt, DecompositionOfIdentity(d1.dim(), std::move(cells), tol)};
}

FrameworkCheckResult single_framework_check(const std::vector<ComplexMatrix>& properties,
                                            const ToleranceContext& tol) {
  if (properties.empty()) {
    return FrameworkCheckResult{true, {}};
  }
  const std::size_t dim = properties.front().dim();
  FrameworkCheckResult result;
  for (std::size_t i = 0; i < properties.size(); ++i) {
    if (properties[i].dim() != dim) {
      throw Error(ErrorCode::DimensionMismatch, "properties differ in dimension");
    }
    for (std::size_t j = i + 1; j < properties.size(); ++j) {
      if (!commutes(properties[i], properties[j], tol)) {
        result.violations.emplace_back(i, j);
      }
    }
  }
  result.pass = result.violations.empty();
  return result;
}

}  // namespace framekit
