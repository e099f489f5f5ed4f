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

#include <bit>
#include <chrono>
#include <random>

#include <gtest/gtest.h>

#include "zzcode/capacity.hpp"

namespace zzcode {
namespace {

// Brute-force expansion: the product of exp(-i theta_kl Z_k Z_l) is diagonal;
// its Walsh-Hadamard transform gives the z-string coefficients.
int brute_force_term_count(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> theta(0.1, 1.4);
  const std::uint32_t dim = 1u << n;
  std::vector<Complex> diag(dim, 1.0);
  for (int k = 0; k < n; ++k) {
    for (int l = k + 1; l < n; ++l) {
      const double t = theta(rng);
      for (std::uint32_t c = 0; c < dim; ++c) {
        const int zk = ((c >> (n - 1 - k)) & 1u) ? -1 : 1;
        const int zl = ((c >> (n - 1 - l)) & 1u) ? -1 : 1;
        diag[c] *= std::polar(1.0, -t * zk * zl);
      }
    }
  }
  int count = 0;
  for (std::uint32_t m = 0; m < dim; ++m) {
    Complex acc = 0.0;
    for (std::uint32_t c = 0; c < dim; ++c) acc += (std::popcount(c & m) % 2 == 0 ? 1.0 : -1.0) * diag[c];
    if (std::abs(acc) / dim > 1e-12) {
      ++count;
      EXPECT_EQ(std::popcount(m) % 2, 0) << "odd z-string in the expansion";
    }
  }
  return count;
}

TEST(Capacity, EnumerationMatchesBruteForceExpansion) {
  std::mt19937_64 rng(61);
  for (int n = 2; n <= 8; ++n) {
    const auto all = enumerate_zz_errors(n, kAllOrders);
    EXPECT_EQ(all.size(), std::size_t{1} << (n - 1)) << n;
    EXPECT_EQ(static_cast<int>(all.size()), brute_force_term_count(n, rng)) << n;
    EXPECT_EQ(all.front(), PauliString::identity(n));
  }
}

TEST(Capacity, OrdersAndCensus) {
  const auto first = enumerate_zz_errors(4, 1);
  EXPECT_EQ(first.size(), 7u);
  for (const PauliString& p : first) EXPECT_LE(zz_error_order(p), 1);
  EXPECT_EQ(zz_error_order(PauliString("ZZZZ")), 2);
  for (int n = 2; n <= 10; ++n) {
    std::uint64_t total = 0;
    for (int j = 0; 2 * j <= n; ++j) total += binomial(n, 2 * j);
    EXPECT_EQ(count_zz_errors(n, kAllOrders), total);
    EXPECT_EQ(count_zz_errors(n, 1), 1 + binomial(n, 2));
  }
  EXPECT_EQ(binomial(6, 2), 15u);
  EXPECT_EQ(binomial(3, 5), 0u);
  EXPECT_THROW(enumerate_zz_errors(1, 1), std::invalid_argument);
  EXPECT_THROW(enumerate_zz_errors(11, 1), std::length_error);
}

// Oracle: smallest ancilla count whose syndrome space holds the enumerated set.
TEST(Capacity, MinimalAncillaeMatchEnumeration) {
  for (int n_data = 1; n_data <= 2; ++n_data) {
    for (int m = 1; m <= 2; ++m) {
      int na = 1;
      while (enumerate_zz_errors(n_data + na, m).size() > (std::size_t{1} << na)) ++na;
      EXPECT_EQ(min_ancillae(n_data, m), na) << n_data << "," << m;
    }
  }
  EXPECT_EQ(min_ancillae(2, 1), 4);
  EXPECT_EQ(count_zz_errors(6, 1), 16u);
  EXPECT_EQ(min_ancillae(2, 2), 8);
  EXPECT_THROW(min_ancillae(0, 1), std::invalid_argument);
}

TEST(Capacity, ClosedFormsAsWritten) {
  // The sum over C(N-1, m) 2^m equals 3^(N-1), not 2^(N-1).
  EXPECT_EQ(printed_total_sum(6), 243u);
  for (int n = 2; n <= 10; ++n) {
    std::uint64_t p3 = 1;
    for (int k = 1; k < n; ++k) p3 *= 3;
    EXPECT_EQ(printed_total_sum(n), p3);
  }
  EXPECT_EQ(printed_capacity_sum(6, 1), 1u + 15u * 2u);
  EXPECT_EQ(printed_capacity_min_ancillae(2, 1), 6);
}

TEST(Capacity, ReportFields) {
  const nlohmann::json r = capacity_report(2, 1);
  EXPECT_EQ(r["min_ancillae"], 4);
  EXPECT_EQ(r["error_count"], 16);
  EXPECT_EQ(r["nspins"], 6);
  EXPECT_EQ(r["table"].size(), 2u);
  const nlohmann::json all = capacity_report(1, 99, 5);
  EXPECT_EQ(all["error_count"], 16);
  EXPECT_EQ(capacity_report(2, 2)["min_ancillae"], 8);
}

TEST(Capacity, CountingIsFast) {
  const auto start = std::chrono::steady_clock::now();
  for (int n = 2; n <= 8; ++n) (void)enumerate_zz_errors(n, kAllOrders);
  (void)capacity_report(2, 1);
  (void)capacity_report(2, 2);
  EXPECT_LT(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(), 1.0);
}

}  // namespace
}  // namespace zzcode
