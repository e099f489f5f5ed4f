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

#include "zzcode/capacity.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace zzcode {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

int zz_error_order(const PauliString& p) { return p.weight() / 2; }

std::vector<PauliString> enumerate_zz_errors(int nspins, int max_order) {
  if (nspins < 2) throw std::invalid_argument("enumerate_zz_errors: need at least two spins");
  if (nspins > kMaxSpins) throw std::length_error("enumerate_zz_errors: more than 10 spins");
  // Grow the reachable set one pair factor at a time.
  std::set<std::uint32_t> reached{0};
  std::vector<std::uint32_t> frontier{0};
  for (int order = 1; !frontier.empty() && (max_order == kAllOrders || order <= max_order); ++order) {
    std::vector<std::uint32_t> next;
    for (std::uint32_t m : frontier) {
      for (int k = 0; k < nspins; ++k) {
        for (int l = k + 1; l < nspins; ++l) {
          const std::uint32_t p = m ^ (1u << (nspins - 1 - k)) ^ (1u << (nspins - 1 - l));
          if (reached.insert(p).second) next.push_back(p);
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<PauliString> out;
  out.reserve(reached.size());
  for (std::uint32_t m : reached) out.push_back(PauliString::z_string(nspins, m));
  std::stable_sort(out.begin(), out.end(), [](const PauliString& a, const PauliString& b) {
    const int oa = zz_error_order(a);
    const int ob = zz_error_order(b);
    if (oa != ob) return oa < ob;
    return a.label_string() < b.label_string();
  });
  return out;
}

std::uint64_t count_zz_errors(int nspins, int max_order) {
  std::uint64_t total = 0;
  for (int j = 0; 2 * j <= nspins && (max_order == kAllOrders || j <= max_order); ++j) {
    total += binomial(nspins, 2 * j);
  }
  return total;
}

int min_ancillae(int n_data, int m_max) {
  if (n_data < 1 || (m_max < 1 && m_max != kAllOrders)) {
    throw std::invalid_argument("min_ancillae: need n_data >= 1 and m_max >= 1");
  }
  for (int na = 1; na < 63; ++na) {
    if (count_zz_errors(n_data + na, m_max) <= (std::uint64_t{1} << na)) return na;
  }
  throw std::runtime_error("min_ancillae: no ancilla count below 63 suffices");
}

std::uint64_t printed_total_sum(int nspins) {
  std::uint64_t total = 0;
  for (int m = 0; m <= nspins - 1; ++m) total += binomial(nspins - 1, m) << m;
  return total;
}

std::uint64_t printed_capacity_sum(int nspins, int m_max) {
  std::uint64_t total = 0;
  for (int m = 0; m <= m_max && 2 * m <= nspins; ++m) total += binomial(nspins, 2 * m) << m;
  return total;
}

int printed_capacity_min_ancillae(int n_data, int m_max) {
  // The printed sum outgrows 2^N_a for small m_max; give up past 40 ancillas.
  for (int na = 1; na <= 40; ++na) {
    if (printed_capacity_sum(n_data + na, m_max) <= (std::uint64_t{1} << na)) return na;
  }
  return -1;
}

nlohmann::json capacity_report(int n_data, int m_max, int nspins) {
  const int na = min_ancillae(n_data, m_max);
  const int n = nspins > 0 ? nspins : n_data + na;
  if (n < 2) throw std::invalid_argument("capacity_report: need at least two spins");
  nlohmann::json census = nlohmann::json::array();
  std::uint64_t cumulative = 0;
  for (int j = 0; 2 * j <= n && (m_max == kAllOrders || j <= m_max); ++j) {
    const std::uint64_t c = binomial(n, 2 * j);
    cumulative += c;
    census.push_back({{"order", j}, {"count", c}, {"cumulative", cumulative}});
  }
  const int effective_m = m_max == kAllOrders ? n : m_max;
  const int printed_na = printed_capacity_min_ancillae(n_data, effective_m);
  return {
      {"n_data", n_data},
      {"m_max", m_max},
      {"min_ancillae", na},
      {"nspins", n},
      {"error_count", cumulative},
      {"table", census},
      {"closed_forms",
       {{"even_weight_total", std::uint64_t{1} << (n - 1)},
        {"printed_total_sum", printed_total_sum(n)},
        {"printed_capacity_sum", printed_capacity_sum(n, effective_m)},
        {"printed_capacity_min_ancillae", printed_na},
        {"printed_bound_two_m", 2 * effective_m}}},
  };
}

}  // namespace zzcode
