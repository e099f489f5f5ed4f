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

#include <filesystem>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

namespace zzcode {

/** Weakly coupled spin-1/2 system in the rotating frame. */
struct SpinSystem {
  std::string name;
  std::vector<std::string> labels;
  std::vector<double> offsets_hz;
  /** Symmetric, zero diagonal. */
  Eigen::MatrixXd j_hz;
  /** Stored for completeness; no longitudinal relaxation is modeled. */
  std::vector<double> t1_s;
  /** Used only for exponential line broadening during acquisition. */
  std::vector<double> t2_s;

  int nspins() const { return static_cast<int>(offsets_hz.size()); }
};

/** Throws std::invalid_argument on inconsistent sizes, an asymmetric J or a nonzero diagonal. */
void validate(const SpinSystem& sys);

/** Pairs with |J_kl| > ratio |nu_k - nu_l| (distinct offsets only). */
std::vector<std::string> weak_coupling_warnings(const SpinSystem& sys, double ratio = 0.1);

SpinSystem spin_system_from_json(const nlohmann::json& j);
nlohmann::json to_json(const SpinSystem& sys);
SpinSystem load_spin_system(const std::filesystem::path& path);

/**
 * Directory holding alanine.json and table_fixture.txt: $ZZCODE_DATA_DIR if
 * set, else the source tree, else the install prefix.
 */
std::filesystem::path default_data_dir();

/** Three-carbon alanine system: spin 1 = C-alpha, spin 2 = C', ancilla = C-beta. */
SpinSystem load_alanine();

}  // namespace zzcode
