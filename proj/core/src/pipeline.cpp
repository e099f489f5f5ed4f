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

#include "zzcode/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "zzcode/circuit.hpp"

namespace zzcode {

DenseMatrix coherent_error(const PauliString& p, double phi) { return to_dense(exp_pauli(p, phi / 2)); }

OperatorSum ancilla_ground(int nancillas) {
  OperatorSum out = OperatorSum::identity(nancillas);
  for (int a = 0; a < nancillas; ++a) out = out * OperatorSum::idempotent(nancillas, a, true);
  return out;
}

double operator_overlap(const DenseMatrix& a, const DenseMatrix& b) {
  const double na = a.norm();
  const double nb = b.norm();
  if (na == 0.0 || nb == 0.0) return 0.0;
  return (a.adjoint() * b).trace().real() / (na * nb);
}

PipelineResult run_pipeline_unitaries(const CodeSpec& code, const DenseMatrix& encoder,
                                      const DenseMatrix& decoder, const DenseMatrix& correction,
                                      const DataInput& data, const OperatorSum& ancilla_state,
                                      const DenseMatrix& error) {
  const int n = code.nspins;
  const auto nd = static_cast<int>(code.data_spins.size());
  const auto na = static_cast<int>(code.ancilla_spins.size());
  const Eigen::Index dim = dimension_for(n);
  if (!std::is_sorted(code.ancilla_spins.begin(), code.ancilla_spins.end())) {
    throw std::invalid_argument("run_pipeline: ancilla spins must be listed in ascending order");
  }
  if (error.rows() != dim || error.cols() != dim) throw std::invalid_argument("run_pipeline: error has the wrong dimension");
  if (!is_unitary(error)) throw std::invalid_argument("run_pipeline: error operator is not unitary");
  if (ancilla_state.nspins() != na) {
    throw std::invalid_argument("run_pipeline: ancilla state must act on " + std::to_string(na) + " spins");
  }
  if (code.required_ancilla_state == AncillaRequirement::pure_zero &&
      max_abs_diff(to_dense(ancilla_state), to_dense(ancilla_ground(na))) > kOperatorTolerance) {
    throw std::invalid_argument("run_pipeline: code " + code.name + " needs every ancilla in E_+");
  }

  OperatorSum data_op(nd);
  const StateVector* psi = std::get_if<StateVector>(&data);
  if (psi != nullptr) {
    if (psi->size() != dimension_for(nd)) throw std::invalid_argument("run_pipeline: data state has the wrong dimension");
    if (std::abs(psi->norm() - 1.0) > 1e-8) throw std::invalid_argument("run_pipeline: data state is not normalized");
    data_op = from_dense(projector(*psi));
  } else {
    data_op = std::get<OperatorSum>(data);
    if (data_op.nspins() != nd) throw std::invalid_argument("run_pipeline: data operator has the wrong spin count");
  }

  PipelineResult r;
  r.initial = to_dense(embed(data_op, code.data_spins, n) * embed(ancilla_state, code.ancilla_spins, n));
  r.encoded = conjugate(r.initial, encoder);
  r.errored = conjugate(r.encoded, error);
  r.decoded = conjugate(r.errored, decoder);
  r.corrected = conjugate(r.decoded, correction);

  const DenseMatrix rho_data = partial_trace(r.corrected, n, code.ancilla_spins);
  r.data_state = from_dense(rho_data);

  const DenseMatrix rho_anc = partial_trace(r.decoded, n, code.data_spins);
  r.ancilla_populations.resize(static_cast<std::size_t>(rho_anc.rows()));
  for (Eigen::Index i = 0; i < rho_anc.rows(); ++i) r.ancilla_populations[static_cast<std::size_t>(i)] = rho_anc(i, i).real();
  r.syndrome = static_cast<std::uint32_t>(
      std::max_element(r.ancilla_populations.begin(), r.ancilla_populations.end()) - r.ancilla_populations.begin());

  if (psi != nullptr) {
    r.fidelity = (psi->adjoint() * rho_data * *psi)(0, 0).real();
  } else {
    r.fidelity = operator_overlap(to_dense(data_op), rho_data);
  }
  return r;
}

PipelineResult run_pipeline(const CodeSpec& code, const DataInput& data, const OperatorSum& ancilla_state,
                            const DenseMatrix& error) {
  return run_pipeline_unitaries(code, circuit_unitary(code.encoder), circuit_unitary(code.decoder),
                                circuit_unitary(code.correction), data, ancilla_state, error);
}

}  // namespace zzcode
