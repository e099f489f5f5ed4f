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

#include <cstdint>
#include <variant>
#include <vector>

#include "zzcode/codes.hpp"
#include "zzcode/dense.hpp"
#include "zzcode/pauli.hpp"

namespace zzcode {

/** Pure data amplitudes, or a data (deviation) operator. */
using DataInput = std::variant<StateVector, OperatorSum>;

/** exp(-i (phi/2) P) as a dense matrix. */
DenseMatrix coherent_error(const PauliString& p, double phi);

/** Product of E_+ over nancillas spins. */
OperatorSum ancilla_ground(int nancillas);

struct PipelineResult {
  /** Full-register operators after each stage. */
  DenseMatrix initial;
  DenseMatrix encoded;
  DenseMatrix errored;
  DenseMatrix decoded;
  DenseMatrix corrected;

  /** Corrected state with the ancillas traced out. */
  OperatorSum data_state;
  /** z-basis weights of the ancilla-reduced decoded state, ancilla 0 most significant. */
  std::vector<double> ancilla_populations;
  /** Readout pattern with the largest weight. */
  std::uint32_t syndrome = 0;
  double fidelity = 0.0;

  OperatorSum final_state() const { return from_dense(corrected); }
};

/**
 * encode -> error -> decode -> correct -> trace over the ancillas.
 *
 * Pure inputs give fidelity Re<psi|rho_data|psi>; operator inputs give the
 * normalized Hilbert-Schmidt overlap between input and output data operators.
 * Throws std::invalid_argument for a non-unitary error, or for a pure_zero
 * code whose ancilla state is not E_+ on every ancilla.
 */
PipelineResult run_pipeline(const CodeSpec& code, const DataInput& data, const OperatorSum& ancilla_state,
                            const DenseMatrix& error);

/** Same stages for an arbitrary encoder/decoder/correction unitary triple. */
PipelineResult run_pipeline_unitaries(const CodeSpec& code, const DenseMatrix& encoder,
                                      const DenseMatrix& decoder, const DenseMatrix& correction,
                                      const DataInput& data, const OperatorSum& ancilla_state,
                                      const DenseMatrix& error);

/** Normalized Hilbert-Schmidt overlap Re Tr(a^dagger b) / (|a| |b|); 0 if either vanishes. */
double operator_overlap(const DenseMatrix& a, const DenseMatrix& b);

}  // namespace zzcode
