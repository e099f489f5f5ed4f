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

#include <stdexcept>
#include <string>

#include "zzcode/pauli.hpp"
#include "pauli_detail.hpp"

namespace zzcode {

char to_char(Pauli p) {
  static constexpr char kChars[] = {'I', 'X', 'Y', 'Z'};
  return kChars[static_cast<int>(p)];
}

Pauli pauli_from_char(char c) {
  switch (c) {
    case 'I': case 'i': case '1': return Pauli::I;
    case 'X': case 'x': return Pauli::X;
    case 'Y': case 'y': return Pauli::Y;
    case 'Z': case 'z': return Pauli::Z;
    default:
      throw std::invalid_argument(std::string("invalid Pauli label '") + c + "'");
  }
}

namespace detail {

SiteProduct multiply_site(Pauli a, Pauli b) {
  if (a == Pauli::I) return {b, 0};
  if (b == Pauli::I) return {a, 0};
  if (a == b) return {Pauli::I, 0};
  const int ia = static_cast<int>(a);
  const int ib = static_cast<int>(b);
  const auto c = static_cast<Pauli>(6 - ia - ib);
  // X*Y = iZ, Y*Z = iX, Z*X = iY; reversed order gives -i.
  const bool cyclic = (ib - ia + 3) % 3 == 1;
  return {c, cyclic ? 1 : 3};
}

std::pair<std::string, int> multiply_labels(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("Pauli product: mismatched spin counts (" +
                                std::to_string(a.size()) + " vs " + std::to_string(b.size()) + ")");
  }
  std::string out(a.size(), 'I');
  int turns = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const SiteProduct s = multiply_site(pauli_from_char(a[k]), pauli_from_char(b[k]));
    out[k] = to_char(s.label);
    turns += s.quarter_turns;
  }
  return {out, turns % 4};
}

Complex i_power(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

}  // namespace detail

PauliString::PauliString(std::string_view labels, int quarter_turns)
    : quarter_turns_(((quarter_turns % 4) + 4) % 4) {
  labels_.reserve(labels.size());
  for (char c : labels) labels_.push_back(pauli_from_char(c));
  if (nspins() > kMaxSpins) throw std::length_error("PauliString: more than 10 spins");
}

PauliString::PauliString(std::vector<Pauli> labels, int quarter_turns)
    : labels_(std::move(labels)), quarter_turns_(((quarter_turns % 4) + 4) % 4) {
  if (nspins() > kMaxSpins) throw std::length_error("PauliString: more than 10 spins");
}

PauliString PauliString::identity(int nspins) {
  dimension_for(nspins);
  return PauliString(std::vector<Pauli>(static_cast<std::size_t>(nspins), Pauli::I));
}

PauliString PauliString::single(int nspins, int spin, Pauli p) {
  if (spin < 0 || spin >= nspins) throw std::out_of_range("PauliString::single: spin out of range");
  PauliString s = identity(nspins);
  s.labels_[static_cast<std::size_t>(spin)] = p;
  return s;
}

PauliString PauliString::z_string(int nspins, std::uint32_t mask) {
  PauliString s = identity(nspins);
  for (int k = 0; k < nspins; ++k) {
    if ((mask >> (nspins - 1 - k)) & 1u) s.labels_[static_cast<std::size_t>(k)] = Pauli::Z;
  }
  return s;
}

PauliString PauliString::zz(int nspins, int k, int l) {
  if (k == l) throw std::invalid_argument("PauliString::zz: spins must differ");
  PauliString s = single(nspins, k, Pauli::Z);
  if (l < 0 || l >= nspins) throw std::out_of_range("PauliString::zz: spin out of range");
  s.labels_[static_cast<std::size_t>(l)] = Pauli::Z;
  return s;
}

std::string PauliString::label_string() const {
  std::string out;
  out.reserve(labels_.size());
  for (Pauli p : labels_) out.push_back(to_char(p));
  return out;
}

Complex PauliString::phase() const { return detail::i_power(quarter_turns_); }

int PauliString::weight() const {
  int w = 0;
  for (Pauli p : labels_) w += (p != Pauli::I) ? 1 : 0;
  return w;
}

bool PauliString::commutes_with(const PauliString& other) const {
  if (other.nspins() != nspins()) throw std::invalid_argument("commutes_with: mismatched spin counts");
  int anti = 0;
  for (std::size_t k = 0; k < labels_.size(); ++k) {
    const Pauli a = labels_[k];
    const Pauli b = other.labels_[k];
    if (a != Pauli::I && b != Pauli::I && a != b) ++anti;
  }
  return anti % 2 == 0;
}

std::uint32_t PauliString::x_mask() const {
  std::uint32_t m = 0;
  const int n = nspins();
  for (int k = 0; k < n; ++k) {
    const Pauli p = labels_[static_cast<std::size_t>(k)];
    if (p == Pauli::X || p == Pauli::Y) m |= 1u << (n - 1 - k);
  }
  return m;
}

std::uint32_t PauliString::z_mask() const {
  std::uint32_t m = 0;
  const int n = nspins();
  for (int k = 0; k < n; ++k) {
    const Pauli p = labels_[static_cast<std::size_t>(k)];
    if (p == Pauli::Z || p == Pauli::Y) m |= 1u << (n - 1 - k);
  }
  return m;
}

PauliString PauliString::with_quarter_turns(int k) const { return PauliString(labels_, k); }

PauliString PauliString::restricted(std::span<const int> spins) const {
  std::vector<Pauli> out;
  out.reserve(spins.size());
  for (int s : spins) {
    if (s < 0 || s >= nspins()) throw std::out_of_range("PauliString::restricted: spin out of range");
    out.push_back(labels_[static_cast<std::size_t>(s)]);
  }
  return PauliString(std::move(out), quarter_turns_);
}

PauliString pauli_product(const PauliString& a, const PauliString& b) {
  if (a.nspins() != b.nspins()) {
    throw std::invalid_argument("pauli_product: mismatched spin counts (" +
                                std::to_string(a.nspins()) + " vs " + std::to_string(b.nspins()) + ")");
  }
  std::vector<Pauli> out(static_cast<std::size_t>(a.nspins()));
  int turns = a.quarter_turns() + b.quarter_turns();
  for (int k = 0; k < a.nspins(); ++k) {
    const auto s = detail::multiply_site(a[k], b[k]);
    out[static_cast<std::size_t>(k)] = s.label;
    turns += s.quarter_turns;
  }
  return PauliString(std::move(out), turns);
}

DenseMatrix to_dense(const PauliString& p) {
  const int n = p.nspins();
  const Eigen::Index dim = dimension_for(n);
  const std::uint32_t x = p.x_mask();
  const std::uint32_t z = p.z_mask();
  int ny = 0;
  for (Pauli l : p.labels()) ny += (l == Pauli::Y) ? 1 : 0;
  // Y = i X Z on each site, so P = i^(k + #Y) X^x Z^z.
  const Complex base = detail::i_power(p.quarter_turns() + ny);
  DenseMatrix m = DenseMatrix::Zero(dim, dim);
  for (std::uint32_t c = 0; c < static_cast<std::uint32_t>(dim); ++c) {
    const double sign = (std::popcount(c & z) % 2 == 0) ? 1.0 : -1.0;
    m(static_cast<Eigen::Index>(c ^ x), static_cast<Eigen::Index>(c)) = base * sign;
  }
  return m;
}

}  // namespace zzcode
