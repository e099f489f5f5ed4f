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

#include "zzcode/suppression.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "zzcode/pipeline.hpp"

namespace zzcode {

DenseMatrix zz_propagator(const Eigen::MatrixXd& j_hz, double t) {
  const auto n = static_cast<int>(j_hz.rows());
  if (j_hz.cols() != n) throw std::invalid_argument("zz_propagator: coupling matrix must be square");
  const Eigen::Index dim = dimension_for(n);
  // Every factor is diagonal; accumulate the phase of each basis state.
  Eigen::VectorXd angle = Eigen::VectorXd::Zero(dim);
  for (int k = 0; k < n; ++k) {
    for (int l = k + 1; l < n; ++l) {
      const double theta = std::numbers::pi / 2 * j_hz(k, l) * t;
      for (Eigen::Index c = 0; c < dim; ++c) {
        const auto idx = static_cast<std::uint32_t>(c);
        const double zz = spin_bit(idx, k, n) == spin_bit(idx, l, n) ? 1.0 : -1.0;
        angle(c) += theta * zz;
      }
    }
  }
  DenseMatrix u = DenseMatrix::Zero(dim, dim);
  for (Eigen::Index c = 0; c < dim; ++c) u(c, c) = std::polar(1.0, -angle(c));
  return u;
}

DenseMatrix collective_z_propagator(int nspins, double phi) {
  const Eigen::Index dim = dimension_for(nspins);
  DenseMatrix u = DenseMatrix::Zero(dim, dim);
  for (Eigen::Index c = 0; c < dim; ++c) {
    double z = 0.0;
    for (int k = 0; k < nspins; ++k) z += spin_bit(static_cast<std::uint32_t>(c), k, nspins) ? -1.0 : 1.0;
    u(c, c) = std::polar(1.0, -phi / 2 * z);
  }
  return u;
}

double corrected_infidelity(const CodeSpec& code, const DenseMatrix& error, const StateVector& data) {
  const auto na = static_cast<int>(code.ancilla_spins.size());
  const PipelineResult r = run_pipeline(code, data, ancilla_ground(na), error);
  return 1.0 - r.fidelity;
}

SuppressionResult first_order_suppression_test(const CodeSpec& code, const Eigen::MatrixXd& j_hz, double t,
                                               const StateVector& data) {
  if (t < 0) throw std::invalid_argument("first_order_suppression_test: negative time");
  if (j_hz.rows() != code.nspins) throw std::invalid_argument("first_order_suppression_test: coupling matrix size");
  SuppressionResult r;
  r.truncation_warning = j_hz.cwiseAbs().maxCoeff() * t >= 1.0;
  r.infidelity = corrected_infidelity(code, zz_propagator(j_hz, t), data);
  return r;
}

}  // namespace zzcode
