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

#include <cmath>
#include <stdexcept>
#include <string>

#include "zzcode/pauli.hpp"
#include "pauli_detail.hpp"

namespace zzcode {

OperatorSum::OperatorSum(int nspins, double prune_threshold)
    : nspins_(nspins), prune_threshold_(prune_threshold) {
  dimension_for(nspins);
}

OperatorSum OperatorSum::identity(int nspins) {
  return from_pauli(PauliString::identity(nspins));
}

OperatorSum OperatorSum::from_pauli(const PauliString& p, Complex coefficient) {
  OperatorSum out(p.nspins());
  out.add(p, coefficient);
  return out;
}

OperatorSum OperatorSum::idempotent(int nspins, int spin, bool plus) {
  OperatorSum out(nspins);
  out.add(PauliString::identity(nspins), 0.5);
  out.add(PauliString::single(nspins, spin, Pauli::Z), plus ? 0.5 : -0.5);
  return out;
}

Complex OperatorSum::coefficient(std::string_view label) const {
  const auto it = terms_.find(std::string(label));
  return it == terms_.end() ? Complex{} : it->second;
}

void OperatorSum::add(std::string_view label, Complex coefficient) {
  if (static_cast<int>(label.size()) != nspins_) {
    throw std::invalid_argument("OperatorSum::add: label '" + std::string(label) +
                                "' does not match " + std::to_string(nspins_) + " spins");
  }
  std::string key(label);
  for (char& c : key) c = to_char(pauli_from_char(c));
  auto [it, inserted] = terms_.try_emplace(key, coefficient);
  if (!inserted) it->second += coefficient;
  if (std::abs(it->second) < prune_threshold_) terms_.erase(it);
}

void OperatorSum::add(const PauliString& p, Complex coefficient) {
  add(p.label_string(), coefficient * p.phase());
}

bool OperatorSum::is_hermitian(double tol) const {
  for (const auto& [label, c] : terms_) {
    if (std::abs(c.imag()) > tol) return false;
  }
  return true;
}

double OperatorSum::normalized_norm2() const {
  double acc = 0.0;
  for (const auto& [label, c] : terms_) acc += std::norm(c);
  return acc;
}

void OperatorSum::check_spins(const OperatorSum& other) const {
  if (other.nspins_ != nspins_) {
    throw std::invalid_argument("OperatorSum: mismatched spin counts (" + std::to_string(nspins_) +
                                " vs " + std::to_string(other.nspins_) + ")");
  }
}

OperatorSum& OperatorSum::operator+=(const OperatorSum& rhs) {
  check_spins(rhs);
  for (const auto& [label, c] : rhs.terms_) add(label, c);
  return *this;
}

OperatorSum& OperatorSum::operator-=(const OperatorSum& rhs) {
  check_spins(rhs);
  for (const auto& [label, c] : rhs.terms_) add(label, -c);
  return *this;
}

OperatorSum& OperatorSum::operator*=(Complex scale) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= scale;
    if (std::abs(it->second) < prune_threshold_) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
  return *this;
}

OperatorSum operator*(const OperatorSum& lhs, const OperatorSum& rhs) {
  lhs.check_spins(rhs);
  OperatorSum out(lhs.nspins(), lhs.prune_threshold());
  for (const auto& [la, ca] : lhs.terms()) {
    for (const auto& [lb, cb] : rhs.terms()) {
      auto [label, turns] = detail::multiply_labels(la, lb);
      out.add(label, ca * cb * detail::i_power(turns));
    }
  }
  return out;
}

OperatorSum exp_pauli(const PauliString& p, double theta) {
  if (!p.is_hermitian()) {
    throw std::invalid_argument("exp_pauli: generator " + p.label_string() + " is not Hermitian");
  }
  // -P folds into the angle.
  const double angle = p.quarter_turns() == 2 ? -theta : theta;
  OperatorSum out(p.nspins());
  out.add(PauliString::identity(p.nspins()), std::cos(angle));
  out.add(p.with_quarter_turns(0), Complex(0.0, -std::sin(angle)));
  return out;
}

DenseMatrix to_dense(const OperatorSum& op) {
  const Eigen::Index dim = dimension_for(op.nspins());
  DenseMatrix m = DenseMatrix::Zero(dim, dim);
  for (const auto& [label, c] : op.terms()) m += c * to_dense(PauliString(label));
  return m;
}

OperatorSum from_dense(const DenseMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("from_dense: matrix is not square");
  const int n = spins_for_dimension(m.rows());
  if (n > kMaxSpins) throw std::length_error("from_dense: more than 10 spins");
  const auto dim = static_cast<std::uint32_t>(m.rows());
  OperatorSum out(n);
  std::string label(static_cast<std::size_t>(n), 'I');
  for (std::uint32_t x = 0; x < dim; ++x) {
    for (std::uint32_t z = 0; z < dim; ++z) {
      int ny = 0;
      for (int k = 0; k < n; ++k) {
        const bool xb = (x >> (n - 1 - k)) & 1u;
        const bool zb = (z >> (n - 1 - k)) & 1u;
        label[static_cast<std::size_t>(k)] = xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : 'I');
        ny += (xb && zb) ? 1 : 0;
      }
      // Tr(P M) with P(c^x, c) = i^#Y (-1)^{c.z}.
      Complex acc = 0.0;
      for (std::uint32_t c = 0; c < dim; ++c) {
        const double sign = (std::popcount(c & z) % 2 == 0) ? 1.0 : -1.0;
        acc += sign * m(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(c ^ x));
      }
      acc *= detail::i_power(ny);
      out.add(label, acc / static_cast<double>(dim));
    }
  }
  return out;
}

OperatorSum tensor(const OperatorSum& a, const OperatorSum& b) {
  OperatorSum out(a.nspins() + b.nspins(), a.prune_threshold());
  for (const auto& [la, ca] : a.terms()) {
    for (const auto& [lb, cb] : b.terms()) out.add(la + lb, ca * cb);
  }
  return out;
}

OperatorSum embed(const OperatorSum& op, std::span<const int> positions, int nspins) {
  if (static_cast<int>(positions.size()) != op.nspins()) {
    throw std::invalid_argument("embed: position count does not match operator spin count");
  }
  std::vector<bool> used(static_cast<std::size_t>(nspins), false);
  for (int p : positions) {
    if (p < 0 || p >= nspins) throw std::out_of_range("embed: position out of range");
    if (used[static_cast<std::size_t>(p)]) throw std::invalid_argument("embed: repeated position");
    used[static_cast<std::size_t>(p)] = true;
  }
  OperatorSum out(nspins, op.prune_threshold());
  for (const auto& [label, c] : op.terms()) {
    std::string full(static_cast<std::size_t>(nspins), 'I');
    for (std::size_t k = 0; k < positions.size(); ++k) {
      full[static_cast<std::size_t>(positions[k])] = label[k];
    }
    out.add(full, c);
  }
  return out;
}

OperatorSum partial_trace(const OperatorSum& op, std::span<const int> traced, bool allow_scalar) {
  const int n = op.nspins();
  std::vector<bool> is_traced(static_cast<std::size_t>(n), false);
  for (int s : traced) {
    if (s < 0 || s >= n) throw std::out_of_range("partial_trace: spin index out of range");
    is_traced[static_cast<std::size_t>(s)] = true;
  }
  int ntraced = 0;
  for (bool t : is_traced) ntraced += t ? 1 : 0;
  const int nkept = n - ntraced;
  if (nkept == 0 && !allow_scalar) {
    throw std::invalid_argument("partial_trace: tracing every spin leaves a scalar");
  }
  const double factor = std::ldexp(1.0, ntraced);
  OperatorSum out(nkept, op.prune_threshold());
  for (const auto& [label, c] : op.terms()) {
    std::string kept;
    bool survives = true;
    for (int k = 0; k < n; ++k) {
      const char ch = label[static_cast<std::size_t>(k)];
      if (is_traced[static_cast<std::size_t>(k)]) {
        if (ch != 'I') {
          survives = false;
          break;
        }
      } else {
        kept.push_back(ch);
      }
    }
    if (survives) out.add(kept, c * factor);
  }
  return out;
}

void to_json(nlohmann::json& j, const OperatorSum& op) {
  j = nlohmann::json::array();
  for (const auto& [label, c] : op.terms()) {
    j.push_back({{"labels", label}, {"re", c.real()}, {"im", c.imag()}});
  }
}

void from_json(const nlohmann::json& j, OperatorSum& op) {
  if (!j.is_array()) throw std::invalid_argument("OperatorSum JSON must be an array of terms");
  if (j.empty()) {
    op = OperatorSum(op.nspins());
    return;
  }
  const int n = static_cast<int>(j.front().at("labels").get<std::string>().size());
  OperatorSum out(n);
  for (const auto& term : j) {
    out.add(term.at("labels").get<std::string>(),
            Complex(term.at("re").get<double>(), term.value("im", 0.0)));
  }
  op = std::move(out);
}

}  // namespace zzcode
