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

#include <string>
#include <string_view>
#include <vector>

#include "zzcode/circuit.hpp"
#include "zzcode/pauli.hpp"

namespace zzcode {

enum class CodeId { fig1, fig3, fig4, fig5, first_order_6q };

inline constexpr CodeId kAllCodes[] = {CodeId::fig1, CodeId::fig3, CodeId::fig4, CodeId::fig5,
                                       CodeId::first_order_6q};

/** "fig1", "fig3", "fig4", "fig5" or "first6". */
std::string_view code_name(CodeId id);
/** Accepts the names above plus "first_order_6q". */
CodeId parse_code_id(std::string_view name);

enum class AncillaRequirement { pure_zero, arbitrary };

struct CodeSpec {
  std::string name;
  int nspins = 0;
  std::vector<int> data_spins;
  std::vector<int> ancilla_spins;
  Circuit encoder;
  Circuit decoder;
  /** Applied after decoding. May be empty. */
  Circuit correction;
  AncillaRequirement required_ancilla_state = AncillaRequirement::pure_zero;
  /** Errors the code corrects; the identity comes first. */
  std::vector<PauliString> declared_errors;
  /** Errors outside the declared set that the code is known not to correct. */
  std::vector<PauliString> failing_probes;
};

/**
 * fig1:   two data spins, one ancilla; phase error sigma_z^1 sigma_z^2.
 * fig3:   same error set, ancilla in any state; the decoder maps the
 *         coupling generator onto sigma_x of the ancilla.
 * fig4:   three-spin phase-flip repetition code, Toffoli correction.
 * fig5:   one data spin, one ancilla; error sigma_z^1 sigma_z^2.
 * first6: two data spins, four ancillas; every single pair error.
 */
CodeSpec build_code(CodeId id);

/**
 * The fig3 decoder unitary U with U exp(i phi/2 Z1 Z2) U^dagger =
 * exp(i phi/2 X_a) for every phi.
 */
DenseMatrix mapping_propagator();
/** Max entry deviation of the identity above at the given angle. */
double mapping_identity_deviation(double phi);

}  // namespace zzcode
