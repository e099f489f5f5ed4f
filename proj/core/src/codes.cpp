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

#include "zzcode/codes.hpp"

#include <numbers>
#include <stdexcept>

#include "zzcode/stabilizer.hpp"

namespace zzcode {
namespace {

constexpr double kPi = std::numbers::pi;

PauliString ps(std::string_view labels) { return PauliString(labels); }

// CNot_AB up to a global phase as commuting exponentials:
// e^{i pi/4 X_B} e^{i pi/4 Z_A} e^{-i pi/4 X_B Z_A}.
void add_cnot_exponentials(Circuit& c, int control, int target) {
  const int n = c.nspins;
  PauliString xz = PauliString::single(n, target, Pauli::X);
  xz = xz * PauliString::single(n, control, Pauli::Z);
  c.add(gate::PauliExp{PauliString::single(n, target, Pauli::X), -kPi / 4});
  c.add(gate::PauliExp{PauliString::single(n, control, Pauli::Z), -kPi / 4});
  c.add(gate::PauliExp{xz, kPi / 4});
}

// Hadamard up to a global phase: e^{-i pi/4 Y} first, then e^{-i pi/2 X}.
void add_hadamard_exponentials(Circuit& c, int spin) {
  const int n = c.nspins;
  c.add(gate::PauliExp{PauliString::single(n, spin, Pauli::Y), kPi / 4});
  c.add(gate::PauliExp{PauliString::single(n, spin, Pauli::X), kPi / 2});
}

// Maps Z1 Z2 onto X_a: CNot(1,2), CNot(a,2), CNot(2,a), H(a).
Circuit mapping_circuit() {
  Circuit w(3);
  add_cnot_exponentials(w, 0, 1);
  add_cnot_exponentials(w, 2, 1);
  add_cnot_exponentials(w, 1, 2);
  add_hadamard_exponentials(w, 2);
  return w;
}

CodeSpec fig1() {
  CodeSpec c;
  c.name = "fig1";
  c.nspins = 3;
  c.data_spins = {0, 1};
  c.ancilla_spins = {2};
  c.encoder = Circuit(3);
  c.encoder.add(gate::CNot{0, 1}).add(gate::CNot{0, 2});
  c.encoder.add(gate::Hadamard{0}).add(gate::Hadamard{1}).add(gate::Hadamard{2});
  c.decoder = inverse(c.encoder);
  c.correction = Circuit(3);
  c.correction.add(gate::CNot{2, 0});
  c.required_ancilla_state = AncillaRequirement::pure_zero;
  c.declared_errors = {ps("III"), ps("ZZI")};
  c.failing_probes = {ps("IZI"), ps("ZII")};
  return c;
}

CodeSpec fig3() {
  CodeSpec c;
  c.name = "fig3";
  c.nspins = 3;
  c.data_spins = {0, 1};
  c.ancilla_spins = {2};
  c.decoder = mapping_circuit();
  c.encoder = inverse(c.decoder);
  c.correction = Circuit(3);
  c.required_ancilla_state = AncillaRequirement::arbitrary;
  c.declared_errors = {ps("III"), ps("ZZI")};
  c.failing_probes = {ps("ZII")};
  return c;
}

CodeSpec fig4() {
  CodeSpec c;
  c.name = "fig4";
  c.nspins = 3;
  c.data_spins = {0};
  c.ancilla_spins = {1, 2};
  c.encoder = Circuit(3);
  c.encoder.add(gate::CNot{0, 1}).add(gate::CNot{0, 2});
  c.encoder.add(gate::Hadamard{0}).add(gate::Hadamard{1}).add(gate::Hadamard{2});
  c.decoder = inverse(c.encoder);
  c.correction = Circuit(3);
  c.correction.add(gate::Toffoli{1, 2, 0});
  c.required_ancilla_state = AncillaRequirement::pure_zero;
  c.declared_errors = {ps("III"), ps("ZII"), ps("IZI"), ps("IIZ")};
  c.failing_probes = {ps("ZZI")};
  return c;
}

CodeSpec fig5() {
  CodeSpec c;
  c.name = "fig5";
  c.nspins = 2;
  c.data_spins = {0};
  c.ancilla_spins = {1};
  c.encoder = Circuit(2);
  c.encoder.add(gate::Hadamard{0}).add(gate::Hadamard{1});
  c.decoder = inverse(c.encoder);
  c.correction = Circuit(2);
  c.correction.add(gate::CNot{1, 0});
  c.required_ancilla_state = AncillaRequirement::pure_zero;
  c.declared_errors = {ps("II"), ps("ZZ")};
  c.failing_probes = {ps("ZI")};
  return c;
}

}  // namespace

std::string_view code_name(CodeId id) {
  switch (id) {
    case CodeId::fig1: return "fig1";
    case CodeId::fig3: return "fig3";
    case CodeId::fig4: return "fig4";
    case CodeId::fig5: return "fig5";
    case CodeId::first_order_6q: return "first6";
  }
  throw std::invalid_argument("unknown code id");
}

CodeId parse_code_id(std::string_view name) {
  if (name == "fig1") return CodeId::fig1;
  if (name == "fig3") return CodeId::fig3;
  if (name == "fig4") return CodeId::fig4;
  if (name == "fig5") return CodeId::fig5;
  if (name == "first6" || name == "first_order_6q") return CodeId::first_order_6q;
  throw std::invalid_argument("unknown code '" + std::string(name) + "'");
}

CodeSpec build_code(CodeId id) {
  switch (id) {
    case CodeId::fig1: return fig1();
    case CodeId::fig3: return fig3();
    case CodeId::fig4: return fig4();
    case CodeId::fig5: return fig5();
    case CodeId::first_order_6q: return build_first_order_code().second;
  }
  throw std::invalid_argument("unknown code id");
}

DenseMatrix mapping_propagator() { return circuit_unitary(mapping_circuit()); }

double mapping_identity_deviation(double phi) {
  const DenseMatrix u = mapping_propagator();
  const DenseMatrix lhs = conjugate(to_dense(exp_pauli(ps("ZZI"), -phi / 2)), u);
  const DenseMatrix rhs = to_dense(exp_pauli(ps("IIX"), -phi / 2));
  return max_abs_diff(lhs, rhs);
}

}  // namespace zzcode
