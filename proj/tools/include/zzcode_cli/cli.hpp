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
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "zzcode/codes.hpp"

namespace zzcode::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitMissingFixtures = 2;
inline constexpr int kExitUsage = 64;

/** Required input file or record is absent. */
class MissingFixture : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Tolerances {
  double operator_equality = 1e-10;
  double pulse_equivalence = 1e-8;
  double kl = 1e-8;
};

nlohmann::json to_json(const Tolerances& t);

/** Code-level checks: inversion, Knill-Laflamme, recovery from declared errors. */
nlohmann::json check_codes(const std::vector<CodeId>& codes, const std::vector<double>& phis, int random_ancillas,
                           std::uint64_t seed, const Tolerances& tol);

/** Pulse-level sequences against the gate-level fig1 pipeline, preparation and refocusing. */
nlohmann::json check_pulses(const std::filesystem::path& system_file, const std::vector<double>& phis,
                            const Tolerances& tol);

/** Entry point; returns the process exit code. */
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace zzcode::cli
