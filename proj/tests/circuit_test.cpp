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

#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "test_support.hpp"
#include "zzcode/circuit.hpp"

namespace zzcode {
namespace {

using testing::expm_hermitian;
using testing::kron;
using testing::kron_labels;
using testing::sigma;

constexpr double kPi = std::numbers::pi;

// Permutation matrix of a classical bit map on 0-based basis indices.
DenseMatrix permutation(int nspins, auto&& map) {
  const Eigen::Index dim = dimension_for(nspins);
  DenseMatrix u = DenseMatrix::Zero(dim, dim);
  for (Eigen::Index c = 0; c < dim; ++c) u(map(static_cast<std::uint32_t>(c)), c) = 1.0;
  return u;
}

TEST(Gate, CNotFlipsTargetWhenControlIsOne) {
  const DenseMatrix u01 = gate_unitary(gate::CNot{0, 1}, 2);
  DenseMatrix oracle(4, 4);
  oracle << 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0;
  EXPECT_LT(max_abs_diff(u01, oracle), 1e-15);
  const DenseMatrix u20 = gate_unitary(gate::CNot{2, 0}, 3);
  const DenseMatrix p = permutation(3, [](std::uint32_t c) { return (c & 1u) ? c ^ 0b100u : c; });
  EXPECT_LT(max_abs_diff(u20, p), 1e-15);
}

TEST(Gate, ToffoliFlipsTargetWhenBothControlsAreOne) {
  const DenseMatrix u = gate_unitary(gate::Toffoli{1, 2, 0}, 3);
  const DenseMatrix p = permutation(3, [](std::uint32_t c) { return (c & 0b011u) == 0b011u ? c ^ 0b100u : c; });
  EXPECT_LT(max_abs_diff(u, p), 1e-15);
}

TEST(Gate, HadamardAndRotation) {
  const DenseMatrix h = gate_unitary(gate::Hadamard{1}, 2);
  EXPECT_LT(max_abs_diff(h, kron(sigma('I'), (sigma('X') + sigma('Z')) / std::numbers::sqrt2)), 1e-15);
  const DenseMatrix r = gate_unitary(gate::Rotation{{0, 2}, Axis::y(), 0.7}, 3);
  const DenseMatrix gen = kron_labels("YII") + kron_labels("IIY");
  EXPECT_LT(max_abs_diff(r, expm_hermitian(gen, 0.35)), 1e-14);
  const DenseMatrix rmx = gate_unitary(gate::Rotation{{0}, Axis::minus_x(), kPi / 2}, 1);
  EXPECT_LT(max_abs_diff(rmx, expm_hermitian(-sigma('X'), kPi / 4)), 1e-14);
}

// c-NOT_AB = e^{-i pi/4} e^{i pi/4 X_B} e^{i pi/4 Z_A} e^{-i pi/4 X_B Z_A}, exactly.
TEST(Gate, CNotFromCommutingExponentials) {
  Circuit c(2);
  c.add(gate::PauliExp{PauliString("IX"), -kPi / 4});
  c.add(gate::PauliExp{PauliString("ZI"), -kPi / 4});
  c.add(gate::PauliExp{PauliString("ZX"), kPi / 4});
  const DenseMatrix product = std::polar(1.0, -kPi / 4) * circuit_unitary(c);
  EXPECT_LT(max_abs_diff(product, gate_unitary(gate::CNot{0, 1}, 2)), 1e-14);
}

// H = i e^{-i pi/2 X} e^{-i pi/4 Y} = e^{i pi/2 (1 - H)}, exactly.
TEST(Gate, HadamardFromRotations) {
  const DenseMatrix h = gate_unitary(gate::Hadamard{0}, 1);
  const DenseMatrix product =
      Complex(0.0, 1.0) * expm_hermitian(sigma('X'), kPi / 2) * expm_hermitian(sigma('Y'), kPi / 4);
  EXPECT_LT(max_abs_diff(product, h), 1e-14);
  const DenseMatrix single_exp = expm_hermitian(DenseMatrix::Identity(2, 2) - h, -kPi / 2);
  EXPECT_LT(max_abs_diff(single_exp, h), 1e-14);
}

TEST(Gate, SyndromeLookupAppliesTableEntry) {
  gate::SyndromeLookup s;
  s.ancillas = {2};
  s.table.emplace(1u, PauliString("XII"));
  EXPECT_LT(max_abs_diff(gate_unitary(s, 3), gate_unitary(gate::CNot{2, 0}, 3)), 1e-15);
  gate::SyndromeLookup bad = s;
  bad.table.emplace(0u, PauliString("IIX"));
  EXPECT_THROW(validate(bad, 3), std::invalid_argument);
}

TEST(Gate, ValidationRejectsBadIndices) {
  EXPECT_THROW(validate(gate::CNot{0, 0}, 2), std::invalid_argument);
  EXPECT_THROW(validate(gate::Hadamard{3}, 3), std::out_of_range);
  EXPECT_THROW(validate(gate::Toffoli{0, 1, 1}, 3), std::invalid_argument);
  EXPECT_THROW(validate(gate::PauliExp{PauliString("XX", 1), 0.1}, 2), std::invalid_argument);
  Circuit c(2);
  EXPECT_THROW(c.add(gate::Hadamard{2}), std::out_of_range);
}

TEST(Circuit, LaterGatesMultiplyOnTheLeft) {
  Circuit c(2);
  c.add(gate::Hadamard{0}).add(gate::CNot{0, 1});
  const DenseMatrix expected = gate_unitary(gate::CNot{0, 1}, 2) * gate_unitary(gate::Hadamard{0}, 2);
  EXPECT_LT(max_abs_diff(circuit_unitary(c), expected), 1e-15);
}

TEST(CircuitProperty, InverseUndoesRandomCircuits) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> kind(0, 4);
  std::uniform_int_distribution<int> spin(0, 3);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  for (int trial = 0; trial < 20; ++trial) {
    Circuit c(4);
    for (int g = 0; g < 12; ++g) {
      const int a = spin(rng);
      const int b = (a + 1 + spin(rng) % 3) % 4;
      const int t = (b + 1) % 4 == a ? (b + 2) % 4 : (b + 1) % 4;
      switch (kind(rng)) {
        case 0: c.add(gate::Hadamard{a}); break;
        case 1: c.add(gate::CNot{a, b}); break;
        case 2: c.add(gate::Rotation{{a}, Axis::transverse(angle(rng)), angle(rng)}); break;
        case 3: c.add(gate::Toffoli{a, b, t}); break;
        default: c.add(gate::PauliExp{PauliString("XZYI"), angle(rng)}); break;
      }
    }
    const DenseMatrix u = circuit_unitary(c);
    EXPECT_TRUE(is_unitary(u));
    EXPECT_LT(max_abs_diff(circuit_unitary(inverse(c)) * u, DenseMatrix::Identity(16, 16)), 1e-12);
  }
}

TEST(Circuit, GlobalPhaseMatch) {
  const DenseMatrix u = gate_unitary(gate::Hadamard{0}, 2);
  const PhaseMatch m = equal_up_to_global_phase(std::polar(1.0, 0.4) * u, u);
  EXPECT_TRUE(m.equal);
  EXPECT_NEAR(m.phase, 0.4, 1e-14);
  EXPECT_FALSE(equal_up_to_global_phase(u, gate_unitary(gate::Hadamard{1}, 2)).equal);
}

TEST(Circuit, LocalUnitaryEquivalence) {
  const DenseMatrix v = gate_unitary(gate::CNot{0, 1}, 3);
  const DenseMatrix a = gate_unitary(gate::Rotation{{2}, Axis::y(), 0.9}, 3);
  const std::vector<int> anc{2};
  const std::vector<int> other{0};
  EXPECT_TRUE(equal_up_to_local_unitary(v * a, v, anc));
  EXPECT_FALSE(equal_up_to_local_unitary(v * a, v, other));
}

TEST(Circuit, ConjugateActsOnOperators) {
  const DenseMatrix h = gate_unitary(gate::Hadamard{0}, 1);
  const OperatorSum x = OperatorSum::from_pauli(PauliString("X"));
  EXPECT_DOUBLE_EQ(conjugate(x, h).coefficient("Z").real(), 1.0);
  EXPECT_THROW(conjugate(x, DenseMatrix::Ones(2, 2), true), std::invalid_argument);
}

TEST(CircuitJson, RoundTripUsesOneBasedIndices) {
  Circuit c(3);
  gate::SyndromeLookup s;
  s.ancillas = {2};
  s.table.emplace(1u, PauliString("XII"));
  c.add(gate::CNot{0, 2})
      .add(gate::Hadamard{1})
      .add(gate::Toffoli{0, 1, 2})
      .add(gate::Rotation{{0, 1}, Axis::minus_y(), 0.5})
      .add(gate::PauliExp{PauliString("ZXI", 2), 0.25})
      .add(s);
  const nlohmann::json j = circuit_to_json(c);
  EXPECT_EQ(j[0]["control"], 1);
  EXPECT_EQ(j[0]["target"], 3);
  EXPECT_EQ(j[3]["axis"], "-y");
  EXPECT_EQ(j[4]["pauli"], "-ZXI");
  const Circuit back = circuit_from_json(j, 3);
  EXPECT_EQ(circuit_to_json(back), j);
  EXPECT_LT(max_abs_diff(circuit_unitary(back), circuit_unitary(c)), 1e-15);
  nlohmann::json bad = j;
  bad[0]["target"] = 4;
  EXPECT_THROW(circuit_from_json(bad, 3), std::out_of_range);
  EXPECT_THROW(gate_from_json({{"kind", "swap"}}, 3), std::invalid_argument);
}

TEST(Axis, NamesRoundTrip) {
  for (const char* n : {"x", "y", "z", "-x", "-y"}) EXPECT_EQ(Axis::parse(n).name(), n);
  EXPECT_NEAR(Axis::parse(Axis::transverse(0.3).name()).phase, 0.3, 1e-15);
  EXPECT_THROW(Axis::parse("w"), std::invalid_argument);
}

}  // namespace
}  // namespace zzcode
