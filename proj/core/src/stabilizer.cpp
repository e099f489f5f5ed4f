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

#include "zzcode/stabilizer.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace zzcode {
namespace {

constexpr std::uint32_t spin_mask(int spin, int n) { return 1u << (n - 1 - spin); }

}  // namespace

bool pairwise_sums_distinct(const std::vector<std::uint32_t>& columns) {
  std::set<std::uint32_t> seen;
  for (std::size_t k = 0; k < columns.size(); ++k) {
    for (std::size_t l = k + 1; l < columns.size(); ++l) {
      const std::uint32_t s = columns[k] ^ columns[l];
      if (s == 0 || !seen.insert(s).second) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> generators_from_columns(const std::vector<std::uint32_t>& columns, int r) {
  const int n = static_cast<int>(columns.size());
  std::vector<std::uint32_t> rows(static_cast<std::size_t>(r), 0);
  for (int i = 0; i < r; ++i) {
    for (int k = 0; k < n; ++k) {
      if ((columns[static_cast<std::size_t>(k)] >> (r - 1 - i)) & 1u) {
        rows[static_cast<std::size_t>(i)] |= spin_mask(k, n);
      }
    }
  }
  return rows;
}

std::uint32_t syndrome_of(const StabilizerCode& code, const PauliString& error) {
  if (error.nspins() != code.n) throw std::invalid_argument("syndrome_of: error has the wrong spin count");
  const int r = static_cast<int>(code.generators.size());
  std::uint32_t s = 0;
  for (int i = 0; i < r; ++i) {
    // An X-type generator anticommutes with an odd number of Z/Y factors.
    const int overlap = std::popcount(code.generators[static_cast<std::size_t>(i)] & error.z_mask());
    if (overlap % 2 != 0) s |= 1u << (r - 1 - i);
  }
  return s;
}

std::string syndrome_string(std::uint32_t syndrome, int width) {
  std::string s(static_cast<std::size_t>(width), '0');
  for (int k = 0; k < width; ++k) {
    if ((syndrome >> (width - 1 - k)) & 1u) s[static_cast<std::size_t>(k)] = '1';
  }
  return s;
}

Circuit synthesize_encoder(const StabilizerCode& code) {
  const int n = code.n;
  std::vector<std::uint32_t> rows = code.generators;
  std::vector<int> pivots;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    int pivot = -1;
    for (int a : code.ancilla_spins) {
      const bool used = std::find(pivots.begin(), pivots.end(), a) != pivots.end();
      if (!used && (rows[i] & spin_mask(a, n))) {
        pivot = a;
        break;
      }
    }
    if (pivot < 0) {
      throw std::invalid_argument("synthesize_encoder: generators are not independent on the ancillas");
    }
    pivots.push_back(pivot);
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (j != i && (rows[j] & spin_mask(pivot, n))) rows[j] ^= rows[i];
    }
  }

  Circuit c(n);
  for (int p : pivots) c.add(gate::Hadamard{p});
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (int q = 0; q < n; ++q) {
      if (q != pivots[i] && (rows[i] & spin_mask(q, n))) c.add(gate::CNot{pivots[i], q});
    }
  }
  return c;
}

Circuit syndrome_correction(const StabilizerCode& code, const Circuit& encoder,
                            const std::vector<PauliString>& errors) {
  const int n = code.n;
  const DenseMatrix u = circuit_unitary(encoder);
  gate::SyndromeLookup lookup;
  lookup.ancillas = code.ancilla_spins;
  for (const PauliString& e : errors) {
    const OperatorSum decoded = from_dense(u.adjoint() * to_dense(e) * u);
    if (decoded.size() != 1) throw std::logic_error("syndrome_correction: encoder is not Clifford");
    const PauliString d(decoded.terms().begin()->first);
    std::uint32_t pattern = 0;
    std::vector<Pauli> data_part = d.labels();
    for (int a : code.ancilla_spins) {
      const Pauli l = d[a];
      pattern = (pattern << 1) | ((l == Pauli::X || l == Pauli::Y) ? 1u : 0u);
      data_part[static_cast<std::size_t>(a)] = Pauli::I;
    }
    const PauliString fix(data_part);
    if (pattern == 0) {
      if (fix != PauliString::identity(n)) {
        throw std::invalid_argument("syndrome_correction: error " + e.label_string() + " has no syndrome");
      }
      continue;
    }
    auto [it, inserted] = lookup.table.emplace(pattern, fix);
    if (!inserted && it->second != fix) {
      throw std::invalid_argument("syndrome_correction: errors share a readout but need different fixes");
    }
  }
  Circuit c(n);
  c.add(std::move(lookup));
  return c;
}

std::vector<std::uint32_t> first_order_columns() { return {0b0000, 0b0001, 0b0010, 0b0100, 0b1000, 0b1111}; }

std::pair<StabilizerCode, CodeSpec> build_first_order_code() {
  constexpr int kSpins = 6;
  constexpr int kChecks = 4;
  StabilizerCode code;
  code.n = kSpins;
  code.k = kSpins - kChecks;
  code.columns = first_order_columns();
  if (!pairwise_sums_distinct(code.columns)) {
    throw std::runtime_error("build_first_order_code: column set does not separate pair errors");
  }
  code.generators = generators_from_columns(code.columns, kChecks);
  code.data_spins = {0, 1};
  code.ancilla_spins = {2, 3, 4, 5};

  std::vector<PauliString> errors{PauliString::identity(kSpins)};
  for (int k = 0; k < kSpins; ++k) {
    for (int l = k + 1; l < kSpins; ++l) errors.push_back(PauliString::zz(kSpins, k, l));
  }
  std::set<std::uint32_t> seen;
  for (const PauliString& e : errors) {
    const std::uint32_t s = syndrome_of(code, e);
    if (!seen.insert(s).second) throw std::runtime_error("build_first_order_code: syndromes collide");
    code.syndrome_map.emplace(e.label_string(), s);
  }

  CodeSpec spec;
  spec.name = "first6";
  spec.nspins = kSpins;
  spec.data_spins = code.data_spins;
  spec.ancilla_spins = code.ancilla_spins;
  spec.encoder = synthesize_encoder(code);
  spec.decoder = inverse(spec.encoder);
  spec.correction = syndrome_correction(code, spec.encoder, errors);
  spec.required_ancilla_state = AncillaRequirement::pure_zero;
  spec.declared_errors = errors;
  spec.failing_probes = {PauliString("ZZZZII")};
  return {std::move(code), std::move(spec)};
}

}  // namespace zzcode
