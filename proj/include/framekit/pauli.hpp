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

#include <string_view>

#include "framekit/matrix.hpp"

namespace framekit {

// Entries of everything built here stay in {0, ±1, ±i}, so products and
// commutators computed from these generators are bit-exact.

ComplexMatrix sigma_x();
ComplexMatrix sigma_y();
ComplexMatrix sigma_z();

/// Tensor word from a label like "XI", "YY", "XYZ" (I, X, Y, Z per slot);
/// slot 0 is the leftmost tensor factor.
ComplexMatrix pauli_word(std::string_view label);

}  // namespace framekit
