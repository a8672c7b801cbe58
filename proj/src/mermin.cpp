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

#include "framekit/mermin.hpp"

#include "framekit/pauli.hpp"

namespace framekit {

namespace {

std::string product_label(const ComplexMatrix& product) {
  const ComplexMatrix id = ComplexMatrix::identity(product.dim());
  if (product == id) return "+I";
  if (product == id * Complex(-1.0, 0.0)) return "-I";
  return "other";
}

}  // namespace

MerminSquare::MerminSquare(std::vector<ComplexMatrix> ops) : ops_(std::move(ops)) {
  if (ops_.size() != 9) {
    throw Error(ErrorCode::InvalidInput, "a square needs exactly 9 operators");
  }
  for (const ComplexMatrix& op : ops_) {
    if (op.dim() != 4) {
      throw Error(ErrorCode::DimensionMismatch, "square operators must be 4x4");
    }
  }
}

std::vector<ComplexMatrix> MerminSquare::row_ops(std::size_t row) const {
  return {op(row, 0), op(row, 1), op(row, 2)};
}

std::vector<ComplexMatrix> MerminSquare::column_ops(std::size_t col) const {
  return {op(0, col), op(1, col), op(2, col)};
}

MerminSquare build_mermin_square() {
  return MerminSquare({
      pauli_word("XI"), pauli_word("IX"), pauli_word("XX"),
      pauli_word("IY"), pauli_word("YI"), pauli_word("YY"),
      pauli_word("XY"), pauli_word("YX"), pauli_word("ZZ"),
  });
}

SquareIdentityReport verify_square_identities(const MerminSquare& square) {
  SquareIdentityReport report;
  report.all_pass = true;
  auto add_check = [&report](std::string name, bool pass, std::string detail) {
    report.all_pass = report.all_pass && pass;
    report.checks.push_back({std::move(name), pass, std::move(detail)});
  };

  const ComplexMatrix id = ComplexMatrix::identity(4);

  {
    std::string bad;
    for (std::size_t r = 0; r < 3; ++r) {
      for (std::size_t c = 0; c < 3; ++c) {
        if (square.op(r, c) != adjoint(square.op(r, c))) {
          bad += " (" + std::to_string(r) + "," + std::to_string(c) + ")";
        }
      }
    }
    add_check("all nine operators Hermitian", bad.empty(),
              bad.empty() ? "" : "failing:" + bad);
  }
  {
    std::string bad;
    for (std::size_t r = 0; r < 3; ++r) {
      for (std::size_t c = 0; c < 3; ++c) {
        if (square.op(r, c) * square.op(r, c) != id) {
          bad += " (" + std::to_string(r) + "," + std::to_string(c) + ")";
        }
      }
    }
    add_check("all nine operators square to I", bad.empty(),
              bad.empty() ? "" : "failing:" + bad);
  }
  {
    // Hermitian involution with zero trace <=> eigenvalues +1,+1,-1,-1.
    std::string bad;
    for (std::size_t r = 0; r < 3; ++r) {
      for (std::size_t c = 0; c < 3; ++c) {
        const ComplexMatrix& m = square.op(r, c);
        const bool ok = m == adjoint(m) && m * m == id && trace(m) == Complex{};
        if (!ok) bad += " (" + std::to_string(r) + "," + std::to_string(c) + ")";
      }
    }
    add_check("all nine spectra are ±1, each twofold degenerate", bad.empty(),
              bad.empty() ? "" : "failing:" + bad);
  }

  for (std::size_t r = 0; r < 3; ++r) {
    std::string bad;
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = i + 1; j < 3; ++j) {
        if (square.op(r, i) * square.op(r, j) != square.op(r, j) * square.op(r, i)) {
          bad += " (" + std::to_string(i) + "," + std::to_string(j) + ")";
        }
      }
    }
    add_check("row " + std::to_string(r) + " pairwise commute", bad.empty(),
              bad.empty() ? "" : "noncommuting pairs:" + bad);
  }
  for (std::size_t c = 0; c < 3; ++c) {
    std::string bad;
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = i + 1; j < 3; ++j) {
        if (square.op(i, c) * square.op(j, c) != square.op(j, c) * square.op(i, c)) {
          bad += " (" + std::to_string(i) + "," + std::to_string(j) + ")";
        }
      }
    }
    add_check("column " + std::to_string(c) + " pairwise commute", bad.empty(),
              bad.empty() ? "" : "noncommuting pairs:" + bad);
  }

  const std::array<std::string, 3> row_targets{"+I", "+I", "+I"};
  const std::array<std::string, 3> col_targets{"+I", "+I", "-I"};
  for (std::size_t r = 0; r < 3; ++r) {
    const ComplexMatrix product = square.op(r, 0) * square.op(r, 1) * square.op(r, 2);
    report.row_products[r] = product_label(product);
    add_check("row " + std::to_string(r) + " product is " + row_targets[r],
              report.row_products[r] == row_targets[r],
              "product = " + report.row_products[r]);
  }
  for (std::size_t c = 0; c < 3; ++c) {
    const ComplexMatrix product = square.op(0, c) * square.op(1, c) * square.op(2, c);
    report.column_products[c] = product_label(product);
    add_check("column " + std::to_string(c) + " product is " + col_targets[c],
              report.column_products[c] == col_targets[c],
              "product = " + report.column_products[c]);
  }

  return report;
}

SignAssignment::SignAssignment(std::array<std::array<int, 3>, 3> values)
    : values_(values) {
  for (const auto& row : values_) {
    for (int v : row) {
      if (v != 1 && v != -1) {
        throw Error(ErrorCode::InvalidInput,
                    "sign assignments take values +1 or -1, got " + std::to_string(v));
      }
    }
  }
}

std::vector<std::string> score_assignment(const SignAssignment& assignment,
                                          const ProductTargets& targets) {
  std::vector<std::string> violated;
  for (std::size_t r = 0; r < 3; ++r) {
    const int product =
        assignment.value(r, 0) * assignment.value(r, 1) * assignment.value(r, 2);
    if (product != targets.rows[r]) violated.push_back("R" + std::to_string(r + 1));
  }
  for (std::size_t c = 0; c < 3; ++c) {
    const int product =
        assignment.value(0, c) * assignment.value(1, c) * assignment.value(2, c);
    if (product != targets.cols[c]) violated.push_back("C" + std::to_string(c + 1));
  }
  return violated;
}

SignSearchResult search_sign_assignments(const ProductTargets& targets) {
  SignSearchResult result;

  // Every cell sits in exactly one row and one column constraint, so the
  // product of all six constraint products is the product of the squares of
  // the nine entries: +1 for any assignment whatsoever.
  int appearance[3][3] = {};
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) {
      appearance[r][c] += 1;  // row constraint r
      appearance[r][c] += 1;  // column constraint c
    }
  }
  bool all_even = true;
  for (const auto& row : appearance) {
    for (int count : row) all_even = all_even && count % 2 == 0;
  }
  int required = 1;
  for (int t : targets.rows) required *= t;
  for (int t : targets.cols) required *= t;
  result.certificate = ParityCertificate{required, all_even ? 1 : 0, all_even};

  for (unsigned bits = 0; bits < 512; ++bits) {
    std::array<std::array<int, 3>, 3> values{};
    for (std::size_t r = 0; r < 3; ++r) {
      for (std::size_t c = 0; c < 3; ++c) {
        values[r][c] = (bits >> (r * 3 + c)) & 1 ? 1 : -1;
      }
    }
    SignAssignment assignment(values);
    ++result.checked;
    if (score_assignment(assignment, targets).empty()) {
      result.solutions.push_back(std::move(assignment));
    }
  }
  return result;
}

}  // namespace framekit
