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
#include <map>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "zzcode/dense.hpp"
#include "zzcode/pauli.hpp"

namespace zzcode {

/**
 * Rotation axis: sigma_z, or the transverse axis cos(phase) sigma_x +
 * sin(phase) sigma_y (x = 0, y = pi/2, -x = pi, -y = 3pi/2).
 */
struct Axis {
  bool along_z = false;
  double phase = 0.0;

  static Axis x() { return {false, 0.0}; }
  static Axis y();
  static Axis minus_x();
  static Axis minus_y();
  static Axis z() { return {true, 0.0}; }
  static Axis transverse(double phase) { return {false, phase}; }

  /** "x", "-y", "z", ... or "xy(<phase>)" for other transverse phases. */
  std::string name() const;
  static Axis parse(const std::string& name);
};

// All spin indices below are 0-based.
namespace gate {

struct Hadamard {
  int spin = 0;
};

/** Flips target when control is |1>: sigma_x^t E_-^c + E_+^c. */
struct CNot {
  int control = 0;
  int target = 0;
};

/** exp(-i (angle/2) sum_{k in spins} sigma_axis^k). */
struct Rotation {
  std::vector<int> spins;
  Axis axis;
  double angle = 0.0;
};

struct Toffoli {
  int control1 = 0;
  int control2 = 0;
  int target = 0;
};

/** exp(-i angle P). */
struct PauliExp {
  PauliString generator;
  double angle = 0.0;
};

/**
 * Applies the Hermitian Pauli table[s] whenever the listed ancillas read the
 * z-basis pattern s (ancillas[0] is the most significant bit). Patterns
 * missing from the table apply the identity.
 */
struct SyndromeLookup {
  std::vector<int> ancillas;
  std::map<std::uint32_t, PauliString> table;
};

}  // namespace gate

using Gate = std::variant<gate::Hadamard, gate::CNot, gate::Rotation, gate::Toffoli,
                          gate::PauliExp, gate::SyndromeLookup>;

/** Ordered gate list; gates[0] is applied first. */
struct Circuit {
  int nspins = 0;
  std::vector<Gate> gates;

  Circuit() = default;
  explicit Circuit(int n) : nspins(n) {}

  Circuit& add(Gate g);
  Circuit& append(const Circuit& other);
  bool empty() const { return gates.empty(); }
};

/** Throws std::out_of_range / std::invalid_argument on bad or repeated indices. */
void validate(const Gate& g, int nspins);

DenseMatrix gate_unitary(const Gate& g, int nspins);
/** Ordered product; later gates multiply on the left. */
DenseMatrix circuit_unitary(const Circuit& c);

Gate inverse(const Gate& g);
/** Reversed order with every gate inverted. */
Circuit inverse(const Circuit& c);

/**
 * u op u^dagger as an operator sum. With strict set, a non-unitary u is
 * rejected with std::invalid_argument.
 */
OperatorSum conjugate(const OperatorSum& op, const DenseMatrix& u, bool strict = false);

struct PhaseMatch {
  bool equal = false;
  /** gamma with u = exp(i gamma) v, in (-pi, pi]. */
  double phase = 0.0;
  double max_deviation = 0.0;
};

PhaseMatch equal_up_to_global_phase(const DenseMatrix& u, const DenseMatrix& v,
                                    double tol = kOperatorTolerance);

/**
 * True when u = v (1 (x) A) for some unitary A acting only on the listed
 * spins, i.e. v^dagger u touches nothing else.
 */
bool equal_up_to_local_unitary(const DenseMatrix& u, const DenseMatrix& v,
                               std::span<const int> local_spins, double tol = kOperatorTolerance);

/** Gate records with 1-based spin indices (ancillas last by convention). */
nlohmann::json gate_to_json(const Gate& g);
Gate gate_from_json(const nlohmann::json& j, int nspins);
nlohmann::json circuit_to_json(const Circuit& c);
/** Parses a gate-record array; nspins bounds the indices. */
Circuit circuit_from_json(const nlohmann::json& j, int nspins);

}  // namespace zzcode
