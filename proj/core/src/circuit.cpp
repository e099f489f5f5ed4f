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

#include "zzcode/circuit.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>

namespace zzcode {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void check_indices(std::initializer_list<int> spins, int nspins, const char* what) {
  std::set<int> seen;
  for (int s : spins) {
    if (s < 0 || s >= nspins) {
      throw std::out_of_range(std::string(what) + ": spin index " + std::to_string(s + 1) +
                              " out of range for " + std::to_string(nspins) + " spins");
    }
    if (!seen.insert(s).second) {
      throw std::invalid_argument(std::string(what) + ": repeated spin index " + std::to_string(s + 1));
    }
  }
}

void check_index_list(const std::vector<int>& spins, int nspins, const char* what) {
  std::set<int> seen;
  for (int s : spins) {
    if (s < 0 || s >= nspins) {
      throw std::out_of_range(std::string(what) + ": spin index " + std::to_string(s + 1) +
                              " out of range for " + std::to_string(nspins) + " spins");
    }
    if (!seen.insert(s).second) {
      throw std::invalid_argument(std::string(what) + ": repeated spin index " + std::to_string(s + 1));
    }
  }
}

OperatorSum single_spin(int nspins, int spin, Pauli p) {
  return OperatorSum::from_pauli(PauliString::single(nspins, spin, p));
}

OperatorSum axis_operator(int nspins, int spin, const Axis& axis) {
  if (axis.along_z) return single_spin(nspins, spin, Pauli::Z);
  return single_spin(nspins, spin, Pauli::X) * std::cos(axis.phase) +
         single_spin(nspins, spin, Pauli::Y) * std::sin(axis.phase);
}

DenseMatrix syndrome_lookup_unitary(const gate::SyndromeLookup& g, int nspins) {
  const Eigen::Index dim = dimension_for(nspins);
  DenseMatrix u = DenseMatrix::Zero(dim, dim);
  for (std::uint32_t c = 0; c < static_cast<std::uint32_t>(dim); ++c) {
    std::uint32_t pattern = 0;
    for (int a : g.ancillas) pattern = (pattern << 1) | static_cast<std::uint32_t>(spin_bit(c, a, nspins));
    const auto it = g.table.find(pattern);
    if (it == g.table.end()) {
      u(c, c) = 1.0;
      continue;
    }
    const PauliString& p = it->second;
    const std::uint32_t x = p.x_mask();
    const std::uint32_t z = p.z_mask();
    int ny = 0;
    for (Pauli l : p.labels()) ny += (l == Pauli::Y) ? 1 : 0;
    Complex v = p.phase();
    for (int k = 0; k < ny; ++k) v *= Complex(0.0, 1.0);
    if (std::popcount(c & z) % 2 != 0) v = -v;
    u(static_cast<Eigen::Index>(c ^ x), static_cast<Eigen::Index>(c)) = v;
  }
  return u;
}

}  // namespace

Axis Axis::y() { return {false, std::numbers::pi / 2}; }
Axis Axis::minus_x() { return {false, std::numbers::pi}; }
Axis Axis::minus_y() { return {false, 3 * std::numbers::pi / 2}; }

std::string Axis::name() const {
  if (along_z) return "z";
  const double pi = std::numbers::pi;
  double p = std::fmod(phase, 2 * pi);
  if (p < 0) p += 2 * pi;
  constexpr double kEps = 1e-12;
  if (std::abs(p) < kEps || std::abs(p - 2 * pi) < kEps) return "x";
  if (std::abs(p - pi / 2) < kEps) return "y";
  if (std::abs(p - pi) < kEps) return "-x";
  if (std::abs(p - 3 * pi / 2) < kEps) return "-y";
  std::ostringstream os;
  os.precision(17);
  os << "xy(" << phase << ")";
  return os.str();
}

Axis Axis::parse(const std::string& name) {
  if (name == "x" || name == "+x") return x();
  if (name == "y" || name == "+y") return y();
  if (name == "z" || name == "+z") return z();
  if (name == "-x") return minus_x();
  if (name == "-y") return minus_y();
  if (name.rfind("xy(", 0) == 0 && name.back() == ')') {
    return transverse(std::stod(name.substr(3, name.size() - 4)));
  }
  throw std::invalid_argument("unknown rotation axis '" + name + "'");
}

Circuit& Circuit::add(Gate g) {
  validate(g, nspins);
  gates.push_back(std::move(g));
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.nspins != nspins) throw std::invalid_argument("Circuit::append: mismatched spin counts");
  for (const Gate& g : other.gates) gates.push_back(g);
  return *this;
}

void validate(const Gate& g, int nspins) {
  std::visit(
      Overloaded{
          [&](const gate::Hadamard& h) { check_indices({h.spin}, nspins, "hadamard"); },
          [&](const gate::CNot& c) { check_indices({c.control, c.target}, nspins, "cnot"); },
          [&](const gate::Rotation& r) { check_index_list(r.spins, nspins, "rotation"); },
          [&](const gate::Toffoli& t) {
            check_indices({t.control1, t.control2, t.target}, nspins, "toffoli");
          },
          [&](const gate::PauliExp& p) {
            if (p.generator.nspins() != nspins) {
              throw std::invalid_argument("pauli_exp: generator spin count does not match circuit");
            }
            if (!p.generator.is_hermitian()) {
              throw std::invalid_argument("pauli_exp: generator must be Hermitian");
            }
          },
          [&](const gate::SyndromeLookup& s) {
            check_index_list(s.ancillas, nspins, "syndrome");
            for (const auto& [pattern, p] : s.table) {
              if (p.nspins() != nspins || !p.is_hermitian()) {
                throw std::invalid_argument("syndrome: table entries must be Hermitian " +
                                            std::to_string(nspins) + "-spin Pauli strings");
              }
              if (pattern >= (1u << s.ancillas.size())) {
                throw std::out_of_range("syndrome: pattern wider than the ancilla list");
              }
              for (int a : s.ancillas) {
                if (p[a] != Pauli::I) {
                  throw std::invalid_argument("syndrome: table entries must not act on the ancillas");
                }
              }
            }
          },
      },
      g);
}

DenseMatrix gate_unitary(const Gate& g, int nspins) {
  validate(g, nspins);
  return std::visit(
      Overloaded{
          [&](const gate::Hadamard& h) -> DenseMatrix {
            const OperatorSum op =
                (single_spin(nspins, h.spin, Pauli::X) + single_spin(nspins, h.spin, Pauli::Z)) *
                (1.0 / std::numbers::sqrt2);
            return to_dense(op);
          },
          [&](const gate::CNot& c) -> DenseMatrix {
            const OperatorSum op = OperatorSum::idempotent(nspins, c.control, true) +
                                   single_spin(nspins, c.target, Pauli::X) *
                                       OperatorSum::idempotent(nspins, c.control, false);
            return to_dense(op);
          },
          [&](const gate::Rotation& r) -> DenseMatrix {
            // Single-spin factors on distinct spins commute.
            OperatorSum op = OperatorSum::identity(nspins);
            for (int s : r.spins) {
              const OperatorSum factor = OperatorSum::identity(nspins) * std::cos(r.angle / 2) +
                                         axis_operator(nspins, s, r.axis) *
                                             Complex(0.0, -std::sin(r.angle / 2));
              op = factor * op;
            }
            return to_dense(op);
          },
          [&](const gate::Toffoli& t) -> DenseMatrix {
            const OperatorSum both = OperatorSum::idempotent(nspins, t.control1, false) *
                                     OperatorSum::idempotent(nspins, t.control2, false);
            const OperatorSum flip =
                single_spin(nspins, t.target, Pauli::X) - OperatorSum::identity(nspins);
            return to_dense(OperatorSum::identity(nspins) + both * flip);
          },
          [&](const gate::PauliExp& p) -> DenseMatrix {
            return to_dense(exp_pauli(p.generator, p.angle));
          },
          [&](const gate::SyndromeLookup& s) -> DenseMatrix {
            return syndrome_lookup_unitary(s, nspins);
          },
      },
      g);
}

DenseMatrix circuit_unitary(const Circuit& c) {
  const Eigen::Index dim = dimension_for(c.nspins);
  DenseMatrix u = DenseMatrix::Identity(dim, dim);
  for (const Gate& g : c.gates) u = gate_unitary(g, c.nspins) * u;
  return u;
}

Gate inverse(const Gate& g) {
  return std::visit(
      Overloaded{
          [](const gate::Rotation& r) -> Gate { return gate::Rotation{r.spins, r.axis, -r.angle}; },
          [](const gate::PauliExp& p) -> Gate { return gate::PauliExp{p.generator, -p.angle}; },
          // Hadamard, CNot, Toffoli and Hermitian syndrome lookups are involutions.
          [&](const auto&) -> Gate { return g; },
      },
      g);
}

Circuit inverse(const Circuit& c) {
  Circuit out(c.nspins);
  for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it) out.gates.push_back(inverse(*it));
  return out;
}

OperatorSum conjugate(const OperatorSum& op, const DenseMatrix& u, bool strict) {
  const Eigen::Index dim = dimension_for(op.nspins());
  if (u.rows() != dim || u.cols() != dim) throw std::invalid_argument("conjugate: dimension mismatch");
  if (strict && !is_unitary(u)) throw std::invalid_argument("conjugate: operator is not unitary");
  return from_dense(conjugate(to_dense(op), u));
}

PhaseMatch equal_up_to_global_phase(const DenseMatrix& u, const DenseMatrix& v, double tol) {
  if (u.rows() != v.rows() || u.cols() != v.cols()) {
    throw std::invalid_argument("equal_up_to_global_phase: dimension mismatch");
  }
  PhaseMatch out;
  const Complex overlap = (v.adjoint() * u).trace();
  if (std::abs(overlap) < tol) {
    out.max_deviation = (u - v).cwiseAbs().maxCoeff();
    return out;
  }
  out.phase = std::arg(overlap);
  out.max_deviation = max_abs_diff(u, std::polar(1.0, out.phase) * v);
  out.equal = out.max_deviation < tol;
  return out;
}

bool equal_up_to_local_unitary(const DenseMatrix& u, const DenseMatrix& v,
                               std::span<const int> local_spins, double tol) {
  const int n = spins_for_dimension(u.rows());
  const DenseMatrix w = v.adjoint() * u;
  std::vector<int> rest;
  for (int s = 0; s < n; ++s) {
    if (std::find(local_spins.begin(), local_spins.end(), s) == local_spins.end()) rest.push_back(s);
  }
  const DenseMatrix a = partial_trace(w, n, rest) / std::ldexp(1.0, static_cast<int>(rest.size()));
  if (!is_unitary(a, tol)) return false;
  std::vector<int> local(local_spins.begin(), local_spins.end());
  std::sort(local.begin(), local.end());
  const DenseMatrix lifted = to_dense(embed(from_dense(a), local, n));
  return max_abs_diff(w, lifted) < tol;
}

}  // namespace zzcode
