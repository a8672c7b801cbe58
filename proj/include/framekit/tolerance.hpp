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

#include "framekit/errors.hpp"

namespace framekit {

/// Single numeric-tolerance knob shared by every approximate predicate.
/// Exact constructions (Pauli tensors, dyadic projectors) never consume it;
/// it only guards the floating eigendecomposition path and data read from
/// JSON.
class ToleranceContext {
 public:
  static constexpr double kDefaultEps = 1e-9;

  explicit ToleranceContext(double eps = kDefaultEps) : eps_(eps) {
    if (!(eps > 0.0 && eps < 1e-3)) {
      throw Error(ErrorCode::InvalidTolerance,
                  "eps must satisfy 0 < eps < 1e-3, got " + std::to_string(eps));
    }
  }

  double eps() const { return eps_; }

 private:
  double eps_;
};

}  // namespace framekit
