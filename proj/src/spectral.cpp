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

#include "framekit/spectral.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <numeric>

namespace framekit {

namespace {

Eigen::MatrixXcd to_eigen(const ComplexMatrix& m) {
  Eigen::MatrixXcd out(m.dim(), m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) {
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m.at(i, j);
    }
  }
  return out;
}

// (±1, (I ± A)/2), dropping a zero cell when A = ±I. Exact for exact inputs.
std::vector<SpectralPair> involution_pairs(const ComplexMatrix& a) {
  const ComplexMatrix id = ComplexMatrix::identity(a.dim());
  std::vector<SpectralPair> out;
  ComplexMatrix plus = (id + a) * Complex(0.5, 0.0);
  ComplexMatrix minus = (id - a) * Complex(0.5, 0.0);
  if (frobenius_norm(plus) != 0.0) out.push_back({+1.0, std::move(plus)});
  if (frobenius_norm(minus) != 0.0) out.push_back({-1.0, std::move(minus)});
  return out;
}

}  // namespace

std::vector<SpectralPair> eigen_decompose_hermitian(const ComplexMatrix& a,
                                                    const ToleranceContext& tol) {
  if (!is_hermitian(a, tol)) {
    throw Error(ErrorCode::NotHermitian,
                "matrix is not Hermitian within eps = " + std::to_string(tol.eps()));
  }

  if (a * a == ComplexMatrix::identity(a.dim())) {
    return involution_pairs(a);
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(to_eigen(a));
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::NotHermitian, "eigensolver failed to converge");
  }

  const std::size_t n = a.dim();
  // Descending eigenvalue order (solver returns ascending).
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::reverse(order.begin(), order.end());

  std::vector<SpectralPair> out;
  std::size_t pos = 0;
  while (pos < n) {
    // Greedy cluster: chain adjacent eigenvalues while the gap stays <= eps.
    std::size_t end = pos + 1;
    while (end < n) {
      double prev = solver.eigenvalues()(static_cast<Eigen::Index>(order[end - 1]));
      double next = solver.eigenvalues()(static_cast<Eigen::Index>(order[end]));
      if (prev - next > tol.eps()) break;
      ++end;
    }

    double value_sum = 0.0;
    ComplexMatrix projector(n);
    for (std::size_t r = pos; r < end; ++r) {
      const Eigen::Index col = static_cast<Eigen::Index>(order[r]);
      value_sum += solver.eigenvalues()(col);
      const auto vec = solver.eigenvectors().col(col);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          projector.at(i, j) += vec(static_cast<Eigen::Index>(i)) *
                                std::conj(vec(static_cast<Eigen::Index>(j)));
        }
      }
    }
    projector = (projector + adjoint(projector)) * Complex(0.5, 0.0);
    out.push_back({value_sum / static_cast<double>(end - pos), std::move(projector)});
    pos = end;
  }
  return out;
}

}  // namespace framekit
