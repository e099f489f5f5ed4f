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

#include <Eigen/Dense>

#include "zzcode/codes.hpp"
#include "zzcode/dense.hpp"

namespace zzcode {

/** prod_{k<l} exp(-i (pi/2) J_kl t Z_k Z_l), J symmetric in Hz. */
DenseMatrix zz_propagator(const Eigen::MatrixXd& j_hz, double t);

/** exp(-i (phi/2) sum_k Z_k) over every spin. */
DenseMatrix collective_z_propagator(int nspins, double phi);

struct SuppressionResult {
  double infidelity = 0.0;
  /** Set when max |J_kl| t >= 1, outside the short-time regime. */
  bool truncation_warning = false;
};

/**
 * 1 - fidelity of a pure data state after the full coupling propagator
 * and syndrome correction.
 */
SuppressionResult first_order_suppression_test(const CodeSpec& code, const Eigen::MatrixXd& j_hz, double t,
                                               const StateVector& data);

/** 1 - fidelity of a pure data state after an arbitrary error unitary and correction. */
double corrected_infidelity(const CodeSpec& code, const DenseMatrix& error, const StateVector& data);

}  // namespace zzcode
