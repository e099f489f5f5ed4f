// Copyright 2026 The zzcode Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "zzcode/dense.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace zzcode {

Eigen::Index dimension_for(int nspins) {
  if (nspins < 0 || nspins > kMaxSpins) {
    throw std::length_error("spin count " + std::to_string(nspins) + " outside [0, " +
                            std::to_string(kMaxSpins) + "]");
  }
  return Eigen::Index{1} << nspins;
}

int spins_for_dimension(Eigen::Index dim) {
  if (!is_power_of_two(dim)) {
    throw std::invalid_argument("matrix dimension " + std::to_string(dim) +
                                " is not a power of two");
  }
  int n = 0;
  while ((Eigen::Index{1} << n) < dim) ++n;
  return n;
}

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("max_abs_diff: shape mismatch");
  }
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

bool is_unitary(const DenseMatrix& u, double tol) {
  if (u.rows() != u.cols()) return false;
  const DenseMatrix id = DenseMatrix::Identity(u.rows(), u.cols());
  return max_abs_diff(u * u.adjoint(), id) < tol;
}

bool is_hermitian(const DenseMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return max_abs_diff(m, m.adjoint()) < tol;
}

DenseMatrix conjugate(const DenseMatrix& rho, const DenseMatrix& u) {
  if (rho.rows() != u.cols() || rho.cols() != u.cols()) {
    throw std::invalid_argument("conjugate: dimension mismatch");
  }
  return u * rho * u.adjoint();
}

DenseMatrix partial_trace(const DenseMatrix& m, int nspins, std::span<const int> traced) {
  const Eigen::Index dim = dimension_for(nspins);
  if (m.rows() != dim || m.cols() != dim) {
    throw std::invalid_argument("partial_trace: matrix does not match spin count");
  }
  std::vector<bool> is_traced(static_cast<std::size_t>(nspins), false);
  for (int s : traced) {
    if (s < 0 || s >= nspins) throw std::out_of_range("partial_trace: spin index out of range");
    is_traced[static_cast<std::size_t>(s)] = true;
  }
  std::vector<int> kept;
  std::vector<int> gone;
  for (int s = 0; s < nspins; ++s) {
    (is_traced[static_cast<std::size_t>(s)] ? gone : kept).push_back(s);
  }
  const int nk = static_cast<int>(kept.size());
  const int ng = static_cast<int>(gone.size());
  // Compose a full index from a kept-index and a traced-index.
  auto compose = [&](std::uint32_t ki, std::uint32_t gi) {
    std::uint32_t full = 0;
    for (int b = 0; b < nk; ++b) {
      if ((ki >> (nk - 1 - b)) & 1u) full |= 1u << (nspins - 1 - kept[static_cast<std::size_t>(b)]);
    }
    for (int b = 0; b < ng; ++b) {
      if ((gi >> (ng - 1 - b)) & 1u) full |= 1u << (nspins - 1 - gone[static_cast<std::size_t>(b)]);
    }
    return static_cast<Eigen::Index>(full);
  };
  const std::uint32_t kdim = 1u << nk;
  const std::uint32_t gdim = 1u << ng;
  DenseMatrix out = DenseMatrix::Zero(kdim, kdim);
  for (std::uint32_t r = 0; r < kdim; ++r) {
    for (std::uint32_t c = 0; c < kdim; ++c) {
      Complex acc = 0.0;
      for (std::uint32_t g = 0; g < gdim; ++g) acc += m(compose(r, g), compose(c, g));
      out(r, c) = acc;
    }
  }
  return out;
}

DenseMatrix projector(const StateVector& psi) { return psi * psi.adjoint(); }

}  // namespace zzcode
