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
#include <vector>

#include <nlohmann/json.hpp>

#include "zzcode/pauli.hpp"

namespace zzcode {

inline constexpr int kAllOrders = -1;

/**
 * Distinct operators in the expansion of prod_{k<l} exp(-i theta_kl Z_k Z_l)
 * built from at most max_order pair factors (kAllOrders for no limit).
 * Sorted by order, then lexicographically; the identity comes first.
 */
std::vector<PauliString> enumerate_zz_errors(int nspins, int max_order);

/** Number of pair factors needed to build a z-string: weight / 2. */
int zz_error_order(const PauliString& p);

/** sum_{j <= m} C(n, 2j). */
std::uint64_t count_zz_errors(int nspins, int max_order);

/**
 * Smallest ancilla count with count_zz_errors(n_data + N_a, m_max) <= 2^N_a.
 * The search starts at one ancilla.
 */
int min_ancillae(int n_data, int m_max);

std::uint64_t binomial(int n, int k);

/** sum_{m=0}^{n-1} C(n-1, m) 2^m. */
std::uint64_t printed_total_sum(int nspins);
/** sum_{m=0}^{m_max} C(n, 2m) 2^m. */
std::uint64_t printed_capacity_sum(int nspins, int m_max);
/** Smallest N_a satisfying the inequality with printed_capacity_sum. */
int printed_capacity_min_ancillae(int n_data, int m_max);

/**
 * Report for the capacity subcommand: min_ancillae, error_count and a
 * per-order census, plus the closed-form comparisons above. nspins
 * overrides n_data + min_ancillae for the census when positive.
 */
nlohmann::json capacity_report(int n_data, int m_max, int nspins = 0);

}  // namespace zzcode
