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

#include "zzcode/knill_laflamme.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "zzcode/circuit.hpp"

namespace zzcode {

KlResult kl_check(const std::vector<StateVector>& basis, const std::vector<PauliString>& errors, double tol) {
  if (basis.empty()) throw std::invalid_argument("kl_check: empty basis");
  const auto nb = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXcd states(basis.front().size(), nb);
  for (Eigen::Index i = 0; i < nb; ++i) states.col(i) = basis[static_cast<std::size_t>(i)];
  const Eigen::MatrixXcd gram = states.adjoint() * states;
  if (max_abs_diff(gram, Eigen::MatrixXcd::Identity(nb, nb)) > kOperatorTolerance) {
    throw std::invalid_argument("kl_check: basis is not orthonormal");
  }

  std::vector<Eigen::MatrixXcd> images;
  images.reserve(errors.size());
  for (const PauliString& e : errors) images.push_back(to_dense(e) * states);

  KlResult r;
  const auto ne = static_cast<Eigen::Index>(errors.size());
  r.alpha = Eigen::MatrixXcd::Zero(ne, ne);
  for (Eigen::Index a = 0; a < ne; ++a) {
    for (Eigen::Index b = 0; b < ne; ++b) {
      const Eigen::MatrixXcd m =
          images[static_cast<std::size_t>(a)].adjoint() * images[static_cast<std::size_t>(b)];
      r.alpha(a, b) = m(0, 0);
      for (Eigen::Index i = 0; i < nb; ++i) {
        r.max_diagonal_spread = std::max(r.max_diagonal_spread, std::abs(m(i, i) - m(0, 0)));
        for (Eigen::Index j = 0; j < nb; ++j) {
          if (i != j) r.max_off_diagonal = std::max(r.max_off_diagonal, std::abs(m(i, j)));
        }
      }
    }
  }
  r.correctable = r.max_off_diagonal < tol && r.max_diagonal_spread < tol;
  return r;
}

std::vector<StateVector> code_space_basis(const CodeSpec& code) {
  const DenseMatrix u = circuit_unitary(code.encoder);
  const auto nd = static_cast<int>(code.data_spins.size());
  std::vector<StateVector> out;
  for (std::uint32_t d = 0; d < (1u << nd); ++d) {
    std::uint32_t index = 0;
    for (int k = 0; k < nd; ++k) {
      if ((d >> (nd - 1 - k)) & 1u) index |= 1u << (code.nspins - 1 - code.data_spins[static_cast<std::size_t>(k)]);
    }
    out.emplace_back(u.col(static_cast<Eigen::Index>(index)));
  }
  return out;
}

}  // namespace zzcode
