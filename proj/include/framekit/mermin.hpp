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

#include <array>
#include <string>
#include <vector>

#include "framekit/matrix.hpp"

namespace framekit {

/// 3×3 array of two-spin operators on C⁴. Holds any nine 4×4 matrices;
/// verify_square_identities reports which of the magic-square identities the
/// contents actually satisfy.
class MerminSquare {
 public:
  /// ops: nine 4×4 matrices, row-major.
  explicit MerminSquare(std::vector<ComplexMatrix> ops);

  const ComplexMatrix& op(std::size_t row, std::size_t col) const {
    return ops_[row * 3 + col];
  }
  ComplexMatrix& op(std::size_t row, std::size_t col) { return ops_[row * 3 + col]; }

  std::vector<ComplexMatrix> row_ops(std::size_t row) const;
  std::vector<ComplexMatrix> column_ops(std::size_t col) const;

 private:
  std::vector<ComplexMatrix> ops_;
};

/// The canonical square. Tensor slot 0 is spin a, slot 1 is spin b; entries
/// stay in {0, ±1, ±i} so all identity checks below are bit-exact.
///
///   σa_x      σb_x      σa_x σb_x
///   σb_y      σa_y      σa_y σb_y
///   σa_x σb_y σa_y σb_x σa_z σb_z
MerminSquare build_mermin_square();

struct IdentityCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SquareIdentityReport {
  bool all_pass = false;
  std::array<std::string, 3> row_products;     // "+I", "-I", or "other"
  std::array<std::string, 3> column_products;
  std::vector<IdentityCheck> checks;
};

/// Bit-exact audit of the square: rows and columns pairwise commute, every
/// operator is a Hermitian involution with a balanced ±1 spectrum, row
/// products are I,I,I and column products I,I,−I.
SquareIdentityReport verify_square_identities(const MerminSquare& square);

/// Candidate ±1 value for each of the nine operators.
class SignAssignment {
 public:
  explicit SignAssignment(std::array<std::array<int, 3>, 3> values);

  int value(std::size_t row, std::size_t col) const { return values_[row][col]; }
  const std::array<std::array<int, 3>, 3>& values() const { return values_; }

 private:
  std::array<std::array<int, 3>, 3> values_;
};

/// Product each row and column must reach. The canonical targets are +1 for
/// the rows and first two columns and −1 for the third column, matching the
/// operator products.
struct ProductTargets {
  std::array<int, 3> rows{1, 1, 1};
  std::array<int, 3> cols{1, 1, -1};
};

/// Labels of the violated constraints, from {"R1","R2","R3","C1","C2","C3"}.
std::vector<std::string> score_assignment(const SignAssignment& assignment,
                                          const ProductTargets& targets = ProductTargets());

struct ParityCertificate {
  int required_product = 0;  // product of the six constraint targets
  int forced_product = 0;    // what any assignment forces (every entry appears twice)
  bool entry_counts_all_even = false;
};

struct SignSearchResult {
  std::vector<SignAssignment> solutions;
  std::size_t checked = 0;
  ParityCertificate certificate;
};

/// Exhaustive scan of all 2⁹ = 512 sign assignments against the six product
/// constraints. With the canonical targets the solution list is empty and the
/// certificate shows required −1 against forced +1.
SignSearchResult search_sign_assignments(const ProductTargets& targets = ProductTargets());

}  // namespace framekit
