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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "framekit/framework.hpp"

namespace framekit {

/// Three-valued outcome of a propositional operation. MEANINGLESS is a
/// first-class outcome, not an error and not the always-false projector:
/// a false proposition has a true negation, a meaningless one stays
/// meaningless under negation.
enum class Verdict { True, False, Meaningless };

struct PropositionOutcome {
  Verdict tag = Verdict::Meaningless;
  std::string detail;
};

PropositionOutcome negate(const PropositionOutcome& outcome);

const char* verdict_name(Verdict v);

/// Result of conjoining two projectors: the product projector when they
/// commute, MEANINGLESS otherwise.
struct ConjunctionResult {
  std::optional<ComplexMatrix> projector;  // engaged iff meaningful
  std::string note;

  bool meaningless() const { return !projector.has_value(); }
};

/// ‖PQ − QP‖_F ≤ eps. Defined for any equal-dimension matrices.
bool commutes(const ComplexMatrix& p, const ComplexMatrix& q,
              const ToleranceContext& tol = ToleranceContext());

/// P ∧ Q: PQ when the projectors commute, MEANINGLESS when they do not.
ConjunctionResult conjunction(const ComplexMatrix& p, const ComplexMatrix& q,
                              const ToleranceContext& tol = ToleranceContext());

struct CompatibilityReport {
  bool compatible = false;
  std::optional<std::pair<std::size_t, std::size_t>> witness;  // set iff incompatible
  std::optional<DecompositionOfIdentity> refinement;           // set iff compatible
};

/// Common refinement of two decompositions: the nonzero products D1ⱼ·D2ₖ when
/// every cell pair commutes, otherwise the first noncommuting pair in
/// lexicographic scan order as witness.
CompatibilityReport common_refinement(const DecompositionOfIdentity& d1,
                                      const DecompositionOfIdentity& d2,
                                      const ToleranceContext& tol = ToleranceContext());

struct FrameworkCheckResult {
  bool pass = false;
  std::vector<std::pair<std::size_t, std::size_t>> violations;  // noncommuting pairs
};

/// Single-framework rule over a property set: PASS iff all pairs commute (a
/// joint framework then exists by common refinement); otherwise every
/// noncommuting pair is reported.
FrameworkCheckResult single_framework_check(const std::vector<ComplexMatrix>& properties,
                                            const ToleranceContext& tol = ToleranceContext());

}  // namespace framekit
