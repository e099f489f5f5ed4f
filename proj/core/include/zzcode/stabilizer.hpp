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
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "zzcode/circuit.hpp"
#include "zzcode/codes.hpp"

namespace zzcode {

/**
 * Code with X-type stabilizer generators. Generator i has support mask
 * generators[i] (bit n-1-k is spin k, as in PauliString::z_string). Spin k
 * carries the column c_k whose bit (r-1-i) is set when generator i acts on
 * it, so a syndrome reads like a column.
 */
struct StabilizerCode {
  int n = 0;
  int k = 0;
  std::vector<std::uint32_t> generators;
  std::vector<std::uint32_t> columns;
  std::vector<int> data_spins;
  std::vector<int> ancilla_spins;
  /** Declared error label -> syndrome. */
  std::map<std::string, std::uint32_t> syndrome_map;
};

/** All pairwise sums c_k ^ c_l (k < l) are nonzero and distinct. */
bool pairwise_sums_distinct(const std::vector<std::uint32_t>& columns);

/** Generator rows from per-spin columns of width r. */
std::vector<std::uint32_t> generators_from_columns(const std::vector<std::uint32_t>& columns, int r);

/** Syndrome bits (generator 0 most significant) of a Pauli error. */
std::uint32_t syndrome_of(const StabilizerCode& code, const PauliString& error);

std::string syndrome_string(std::uint32_t syndrome, int width);

/**
 * Encoder preparing the joint +1 eigenspace of the generators with the data
 * spins carrying the logical state: the generator rows are reduced so each
 * owns one ancilla pivot, pivots get a Hadamard and then fan out CNots over
 * the rest of their row. Throws std::invalid_argument when the ancillas do
 * not support a full set of pivots.
 */
Circuit synthesize_encoder(const StabilizerCode& code);

/**
 * Correction after decoding: a syndrome lookup on the ancilla readout that
 * undoes the data part of each decoded error.
 */
Circuit syndrome_correction(const StabilizerCode& code, const Circuit& encoder,
                            const std::vector<PauliString>& errors);

/** Column set {0000, 0001, 0010, 0100, 1000, 1111} on six spins. */
std::vector<std::uint32_t> first_order_columns();

/** The [[6,2]] code correcting every sigma_z^k sigma_z^l. */
std::pair<StabilizerCode, CodeSpec> build_first_order_code();

}  // namespace zzcode
