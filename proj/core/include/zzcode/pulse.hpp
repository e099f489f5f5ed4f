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

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "zzcode/circuit.hpp"
#include "zzcode/dense.hpp"
#include "zzcode/pauli.hpp"
#include "zzcode/spin_system.hpp"

namespace zzcode {

// Spin indices are 0-based.

/** Ideal hard rotation exp(-i angle/2 sum_k sigma_axis^k). */
struct Pulse {
  std::vector<int> spins;
  Axis axis;
  double angle = 0.0;
};

/**
 * Free evolution. Without ideal_coupling the full internal Hamiltonian acts;
 * with it, only (pi/2) J_kl Z_k Z_l for that pair.
 */
struct Delay {
  double duration = 0.0;
  std::optional<std::pair<int, int>> ideal_coupling;
};

/** Pulsed field gradient: keeps the zero-quantum part only. */
struct Crusher {};

struct Acquire {
  std::vector<int> observe;
  std::vector<int> decouple;
  int npoints = 1024;
  double dwell = 1e-3;
};

using PulseEvent = std::variant<Pulse, Delay, Crusher, Acquire>;

struct PulseSequence {
  std::vector<PulseEvent> events;

  PulseSequence& add(PulseEvent e);
  PulseSequence& append(const PulseSequence& other);
  /** True when the sequence has neither crushers nor acquisitions. */
  bool is_unitary() const;
};

/** sum_k (omega_k/2) Z_k + sum_{k<l} (pi/2) J_kl Z_k Z_l with omega = 2 pi nu. */
OperatorSum internal_hamiltonian(const SpinSystem& sys);

/** Diagonal propagator of a delay. */
DenseMatrix delay_propagator(const SpinSystem& sys, const Delay& d);

OperatorSum evolve_delay(const OperatorSum& rho, const SpinSystem& sys, double t,
                         std::optional<std::pair<int, int>> ideal_coupling = std::nullopt);

OperatorSum apply_crusher(const OperatorSum& rho);

/** Throws std::invalid_argument on crushers and acquisitions. */
DenseMatrix sequence_propagator(const PulseSequence& seq, const SpinSystem& sys);

/** Runs pulses, delays and crushers; rejects acquisitions. */
OperatorSum apply_sequence(const OperatorSum& rho, const PulseSequence& seq, const SpinSystem& sys);

enum class InitialState { sx1, sx1sz2 };
InitialState parse_initial_state(const std::string& name);
std::string initial_state_name(InitialState s);

/** (1/2)(Z_1 + Z_2 + Z_a). */
OperatorSum thermal_equilibrium(int nspins);

/** pi/2 on spin 2, crusher, then the selective preparation steps. */
PulseSequence preparation_sequence(const SpinSystem& sys, InitialState which);

/** Thermal equilibrium driven through preparation_sequence. */
OperatorSum prepare_initial(const SpinSystem& sys, InitialState which);

struct CodeSequences {
  PulseSequence encode;
  PulseSequence decode;
  PulseSequence correct;
};

/** Pulse-level encoder, decoder and correction of the fig1 code on three spins. */
CodeSequences code_sequences(const SpinSystem& sys);

/**
 * Coupling evolution of spins 1 and 2 for tau with the offsets and the
 * couplings to the ancilla refocused by pi pulses.
 */
PulseSequence refocused_zz(double tau);

struct EffectiveCoupling {
  /** theta in exp(-i theta Z_1 Z_2). */
  double theta = 0.0;
  /** tau_eff with theta = (pi/2) J_12 tau_eff. */
  double tau_eff = 0.0;
  /** Max deviation from the pure Z_1 Z_2 exponential, global phase removed. */
  double max_deviation = 0.0;
};

EffectiveCoupling effective_coupling(const SpinSystem& sys, double tau);

}  // namespace zzcode
