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

#include <vector>

#include "framekit/matrix.hpp"

namespace framekit {

struct SpectralPair {
  double eigenvalue;
  ComplexMatrix projector;
};

/// Spectral decomposition of a Hermitian matrix: A = Σ aⱼ Dⱼ with the
/// eigenvalues strictly decreasing, eigenvalues closer than eps merged into
/// one cluster, and the Dⱼ mutually orthogonal projectors summing to I.
///
/// Involutions get an exact treatment: when A·A equals the identity
/// bit-for-bit, the pairs are (±1, (I ± A)/2) computed in dyadic arithmetic
/// with no floating eigensolver involved, which keeps the two-spin operator
/// identities exact end to end. Everything else goes through a dense
/// self-adjoint solve; per-cluster projectors are accumulated from the
/// orthonormal eigenbasis and symmetrized as (P + P†)/2.
///
/// Throws NotHermitian if ‖A − A†‖_F > eps.
std::vector<SpectralPair> eigen_decompose_hermitian(const ComplexMatrix& a,
                                                    const ToleranceContext& tol);

}  // namespace framekit
