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
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "test_support.hpp"
#include "zzcode/knill_laflamme.hpp"
#include "zzcode/pipeline.hpp"
#include "zzcode/stabilizer.hpp"

namespace zzcode {
namespace {

// Brute-force oracle: all pair sums as a multiset.
bool pair_sums_distinct_oracle(const std::vector<std::uint32_t>& cols) {
  std::multiset<std::uint32_t> sums;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    for (std::size_t l = k + 1; l < cols.size(); ++l) sums.insert(cols[k] ^ cols[l]);
  }
  if (sums.count(0) > 0) return false;
  for (std::uint32_t s : sums) {
    if (sums.count(s) > 1) return false;
  }
  return true;
}

PauliString x_type(std::uint32_t mask, int n) {
  std::string s(static_cast<std::size_t>(n), 'I');
  for (int k = 0; k < n; ++k) {
    if ((mask >> (n - 1 - k)) & 1u) s[static_cast<std::size_t>(k)] = 'X';
  }
  return PauliString(s);
}

TEST(Stabilizer, PairwiseSumsAgreeWithBruteForce) {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<std::uint32_t> col(0, 15);
  int distinct = 0;
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<std::uint32_t> cols(5);
    for (auto& c : cols) c = col(rng);
    const bool expected = pair_sums_distinct_oracle(cols);
    distinct += expected ? 1 : 0;
    EXPECT_EQ(pairwise_sums_distinct(cols), expected);
  }
  EXPECT_GT(distinct, 0);
  EXPECT_TRUE(pairwise_sums_distinct(first_order_columns()));
  EXPECT_FALSE(pairwise_sums_distinct({0b0001, 0b0010, 0b0100, 0b0111}));
}

TEST(Stabilizer, GeneratorsTransposeColumns) {
  const std::vector<std::uint32_t> cols = first_order_columns();
  const std::vector<std::uint32_t> gens = generators_from_columns(cols, 4);
  ASSERT_EQ(gens.size(), 4u);
  // Column 1111 belongs to spin 6, so every generator touches it.
  for (std::uint32_t g : gens) EXPECT_TRUE(g & 1u);
  EXPECT_EQ(gens[3], 0b010001u);
  EXPECT_EQ(gens[0], 0b000011u);
}

TEST(Stabilizer, FirstOrderCodeSeparatesAllPairErrors) {
  const auto [code, spec] = build_first_order_code();
  EXPECT_EQ(code.syndrome_map.size(), 16u);
  std::set<std::uint32_t> syndromes;
  for (const auto& [label, s] : code.syndrome_map) syndromes.insert(s);
  EXPECT_EQ(syndromes.size(), 16u);
  for (int k = 0; k < 6; ++k) {
    for (int l = k + 1; l < 6; ++l) {
      EXPECT_EQ(syndrome_of(code, PauliString::zz(6, k, l)), code.columns[k] ^ code.columns[l]);
    }
  }
  EXPECT_EQ(syndrome_string(0b0101, 4), "0101");
}

TEST(Stabilizer, EncodedStatesAreStabilized) {
  const auto [code, spec] = build_first_order_code();
  for (const StateVector& psi : code_space_basis(spec)) {
    for (std::uint32_t g : code.generators) {
      const StateVector out = to_dense(x_type(g, code.n)) * psi;
      EXPECT_LT((out - psi).norm(), 1e-12);
    }
  }
}

TEST(Stabilizer, EncoderNeedsAncillaPivots) {
  StabilizerCode c;
  c.n = 3;
  c.generators = {0b110, 0b110};
  c.ancilla_spins = {2};
  EXPECT_THROW(synthesize_encoder(c), std::invalid_argument);
}

TEST(Stabilizer, EverySinglePairErrorIsCorrected) {
  const auto [code, spec] = build_first_order_code();
  std::mt19937_64 rng(29);
  for (const PauliString& e : spec.declared_errors) {
    for (double phi : {0.3, 1.2, 3.14159}) {
      const PipelineResult r =
          run_pipeline(spec, testing::random_state(4, rng), ancilla_ground(4), coherent_error(e, phi));
      EXPECT_NEAR(r.fidelity, 1.0, 1e-10) << e.label_string();
    }
  }
}

}  // namespace
}  // namespace zzcode
