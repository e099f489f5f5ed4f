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

#pragma once

#include <vector>

#include "zzcode/codes.hpp"
#include "zzcode/dense.hpp"
#include "zzcode/pauli.hpp"

namespace zzcode {

struct KlResult {
  bool correctable = false;
  /** Largest |<psi_i|E^dagger F|psi_j>| over i != j. */
  double max_off_diagonal = 0.0;
  /** Largest |<psi_i|E^dagger F|psi_i> - <psi_0|E^dagger F|psi_0>|. */
  double max_diagonal_spread = 0.0;
  /** alpha_{EF} = <psi_0|E^dagger F|psi_0>, indexed like the error list. */
  Eigen::MatrixXcd alpha;
};

inline constexpr double kKlTolerance = 1e-8;

/**
 * Correctability of an error set on the span of an orthonormal basis.
 * Throws std::invalid_argument when the basis is not orthonormal to 1e-10.
 */
KlResult kl_check(const std::vector<StateVector>& basis, const std::vector<PauliString>& errors,
                  double tol = kKlTolerance);

/** Encoder images of the data basis states with every ancilla in |0>. */
std::vector<StateVector> code_space_basis(const CodeSpec& code);

}  // namespace zzcode
