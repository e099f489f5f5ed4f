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

#include "zzcode/pulse.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace zzcode {
namespace {

constexpr double kPi = std::numbers::pi;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double coupling(const SpinSystem& sys, int k, int l) {
  if (k < 0 || l < 0 || k >= sys.nspins() || l >= sys.nspins() || k == l) {
    throw std::out_of_range("coupling: bad spin pair");
  }
  return sys.j_hz(k, l);
}

DenseMatrix pulse_unitary(const Pulse& p, int nspins) {
  return gate_unitary(gate::Rotation{p.spins, p.axis, p.angle}, nspins);
}

Pulse pulse(std::vector<int> spins, Axis axis, double angle) { return Pulse{std::move(spins), axis, angle}; }

Delay ideal(const SpinSystem& sys, int k, int l) {
  return Delay{1.0 / (2.0 * coupling(sys, k, l)), std::make_pair(k, l)};
}

}  // namespace

PulseSequence& PulseSequence::add(PulseEvent e) {
  if (const auto* d = std::get_if<Delay>(&e); d != nullptr && d->duration < 0) {
    throw std::invalid_argument("PulseSequence: negative delay");
  }
  if (const auto* a = std::get_if<Acquire>(&e); a != nullptr && (a->dwell <= 0 || a->npoints < 1)) {
    throw std::invalid_argument("PulseSequence: acquisition needs a positive dwell and point count");
  }
  events.push_back(std::move(e));
  return *this;
}

PulseSequence& PulseSequence::append(const PulseSequence& other) {
  for (const PulseEvent& e : other.events) events.push_back(e);
  return *this;
}

bool PulseSequence::is_unitary() const {
  for (const PulseEvent& e : events) {
    if (std::holds_alternative<Crusher>(e) || std::holds_alternative<Acquire>(e)) return false;
  }
  return true;
}

OperatorSum internal_hamiltonian(const SpinSystem& sys) {
  const int n = sys.nspins();
  OperatorSum h(n);
  for (int k = 0; k < n; ++k) {
    h.add(PauliString::single(n, k, Pauli::Z), kPi * sys.offsets_hz[static_cast<std::size_t>(k)]);
  }
  for (int k = 0; k < n; ++k) {
    for (int l = k + 1; l < n; ++l) h.add(PauliString::zz(n, k, l), kPi / 2 * sys.j_hz(k, l));
  }
  return h;
}

DenseMatrix delay_propagator(const SpinSystem& sys, const Delay& d) {
  const int n = sys.nspins();
  const Eigen::Index dim = dimension_for(n);
  DenseMatrix u = DenseMatrix::Zero(dim, dim);
  for (Eigen::Index c = 0; c < dim; ++c) {
    const auto idx = static_cast<std::uint32_t>(c);
    auto z = [&](int k) { return spin_bit(idx, k, n) ? -1.0 : 1.0; };
    double energy = 0.0;
    if (d.ideal_coupling) {
      const auto [k, l] = *d.ideal_coupling;
      energy = kPi / 2 * coupling(sys, k, l) * z(k) * z(l);
    } else {
      for (int k = 0; k < n; ++k) energy += kPi * sys.offsets_hz[static_cast<std::size_t>(k)] * z(k);
      for (int k = 0; k < n; ++k) {
        for (int l = k + 1; l < n; ++l) energy += kPi / 2 * sys.j_hz(k, l) * z(k) * z(l);
      }
    }
    u(c, c) = std::polar(1.0, -energy * d.duration);
  }
  return u;
}

OperatorSum evolve_delay(const OperatorSum& rho, const SpinSystem& sys, double t,
                         std::optional<std::pair<int, int>> ideal_coupling) {
  if (t < 0) throw std::invalid_argument("evolve_delay: negative duration");
  return from_dense(conjugate(to_dense(rho), delay_propagator(sys, Delay{t, ideal_coupling})));
}

OperatorSum apply_crusher(const OperatorSum& rho) { return zero_quantum_part(rho); }

DenseMatrix sequence_propagator(const PulseSequence& seq, const SpinSystem& sys) {
  const int n = sys.nspins();
  const Eigen::Index dim = dimension_for(n);
  DenseMatrix u = DenseMatrix::Identity(dim, dim);
  for (const PulseEvent& e : seq.events) {
    std::visit(Overloaded{
                   [&](const Pulse& p) { u = pulse_unitary(p, n) * u; },
                   [&](const Delay& d) { u = delay_propagator(sys, d) * u; },
                   [](const Crusher&) { throw std::invalid_argument("sequence_propagator: crusher is not unitary"); },
                   [](const Acquire&) { throw std::invalid_argument("sequence_propagator: acquisition is not unitary"); },
               },
               e);
  }
  return u;
}

OperatorSum apply_sequence(const OperatorSum& rho, const PulseSequence& seq, const SpinSystem& sys) {
  const int n = sys.nspins();
  if (rho.nspins() != n) throw std::invalid_argument("apply_sequence: state and spin system differ in size");
  DenseMatrix state = to_dense(rho);
  for (const PulseEvent& e : seq.events) {
    std::visit(Overloaded{
                   [&](const Pulse& p) { state = conjugate(state, pulse_unitary(p, n)); },
                   [&](const Delay& d) { state = conjugate(state, delay_propagator(sys, d)); },
                   [&](const Crusher&) { state = to_dense(apply_crusher(from_dense(state))); },
                   [](const Acquire&) { throw std::invalid_argument("apply_sequence: use acquire() for detection"); },
               },
               e);
  }
  return from_dense(state);
}

InitialState parse_initial_state(const std::string& name) {
  if (name == "sx1") return InitialState::sx1;
  if (name == "sx1sz2") return InitialState::sx1sz2;
  throw std::invalid_argument("unknown initial state '" + name + "'");
}

std::string initial_state_name(InitialState s) { return s == InitialState::sx1 ? "sx1" : "sx1sz2"; }

OperatorSum thermal_equilibrium(int nspins) {
  OperatorSum rho(nspins);
  for (int k = 0; k < nspins; ++k) rho.add(PauliString::single(nspins, k, Pauli::Z), 0.5);
  return rho;
}

PulseSequence preparation_sequence(const SpinSystem& sys, InitialState which) {
  if (sys.nspins() != 3) throw std::invalid_argument("preparation_sequence: needs three spins");
  PulseSequence s;
  s.add(pulse({1}, Axis::x(), kPi / 2));
  s.add(Crusher{});
  s.add(pulse({2}, Axis::minus_x(), kPi / 2));
  s.add(ideal(sys, 0, 2));
  s.add(pulse({2}, Axis::y(), kPi / 2));
  if (which == InitialState::sx1) {
    s.add(pulse({0}, Axis::y(), kPi / 2));
  } else {
    s.add(pulse({0}, Axis::x(), kPi / 2));
    s.add(ideal(sys, 0, 1));
  }
  return s;
}

OperatorSum prepare_initial(const SpinSystem& sys, InitialState which) {
  return apply_sequence(thermal_equilibrium(sys.nspins()), preparation_sequence(sys, which), sys);
}

CodeSequences code_sequences(const SpinSystem& sys) {
  if (sys.nspins() != 3) throw std::invalid_argument("code_sequences: needs three spins");
  CodeSequences c;
  c.encode.add(pulse({1, 2}, Axis::x(), kPi / 2))
      .add(pulse({1, 2}, Axis::y(), kPi / 2))
      .add(ideal(sys, 0, 1))
      .add(ideal(sys, 0, 2))
      .add(pulse({0}, Axis::y(), kPi / 2))
      .add(pulse({1, 2}, Axis::x(), kPi));
  // Exact inverse of encode: the pi pulse on spins 2 and a follows the coupling periods.
  c.decode.add(pulse({0}, Axis::minus_y(), kPi / 2))
      .add(ideal(sys, 0, 1))
      .add(ideal(sys, 0, 2))
      .add(pulse({1, 2}, Axis::x(), kPi))
      .add(pulse({1, 2}, Axis::minus_y(), kPi / 2))
      .add(pulse({1, 2}, Axis::minus_x(), kPi / 2));
  c.correct.add(pulse({0}, Axis::minus_y(), kPi / 2))
      .add(ideal(sys, 0, 2))
      .add(pulse({0}, Axis::y(), kPi / 2))
      .add(pulse({0}, Axis::minus_x(), kPi / 2));
  return c;
}

PulseSequence refocused_zz(double tau) {
  if (tau < 0) throw std::invalid_argument("refocused_zz: negative tau");
  const std::vector<int> all{0, 1, 2};
  const Delay eighth{tau / 8, std::nullopt};
  PulseSequence s;
  s.add(eighth).add(pulse({2}, Axis::y(), kPi)).add(eighth);
  s.add(pulse(all, Axis::y(), kPi)).add(eighth);
  s.add(pulse({2}, Axis::minus_y(), kPi)).add(Delay{tau / 4, std::nullopt});
  s.add(pulse({2}, Axis::y(), kPi)).add(eighth);
  s.add(pulse(all, Axis::minus_y(), kPi)).add(eighth);
  s.add(pulse({2}, Axis::minus_y(), kPi)).add(eighth);
  return s;
}

EffectiveCoupling effective_coupling(const SpinSystem& sys, double tau) {
  const DenseMatrix u = sequence_propagator(refocused_zz(tau), sys);
  const double j12 = coupling(sys, 0, 1);
  // |000> has Z1 Z2 = +1 and |010> has Z1 Z2 = -1.
  const double raw = std::arg(u(2, 2) / u(0, 0)) / 2;
  const double nominal = kPi / 2 * j12 * tau;
  EffectiveCoupling ec;
  ec.theta = raw + kPi * std::round((nominal - raw) / kPi);
  ec.tau_eff = 2 * ec.theta / (kPi * j12);
  const DenseMatrix target = to_dense(exp_pauli(PauliString::zz(sys.nspins(), 0, 1), ec.theta));
  ec.max_deviation = equal_up_to_global_phase(u, target).max_deviation;
  return ec;
}

}  // namespace zzcode
