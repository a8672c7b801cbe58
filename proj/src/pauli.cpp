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

#include "framekit/pauli.hpp"

namespace framekit {

ComplexMatrix sigma_x() {
  return ComplexMatrix::from_rows({{0, 1}, {1, 0}});
}

ComplexMatrix sigma_y() {
  return ComplexMatrix::from_rows({{0, Complex(0, -1)}, {Complex(0, 1), 0}});
}

ComplexMatrix sigma_z() {
  return ComplexMatrix::from_rows({{1, 0}, {0, -1}});
}

ComplexMatrix pauli_word(std::string_view label) {
  if (label.empty()) {
    throw Error(ErrorCode::InvalidInput, "empty Pauli word");
  }
  ComplexMatrix result = ComplexMatrix::identity(1);
  for (char c : label) {
    ComplexMatrix factor = ComplexMatrix::identity(2);
    switch (c) {
      case 'I': break;
      case 'X': factor = sigma_x(); break;
      case 'Y': factor = sigma_y(); break;
      case 'Z': factor = sigma_z(); break;
      default:
        throw Error(ErrorCode::InvalidInput,
                    std::string("bad Pauli label character '") + c + "'");
    }
    result = tensor(result, factor);
  }
  return result;
}

}  // namespace framekit
