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

#include "zzcode/spin_system.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace zzcode {

void validate(const SpinSystem& sys) {
  const int n = sys.nspins();
  if (n < 1) throw std::invalid_argument("spin system has no spins");
  if (sys.j_hz.rows() != n || sys.j_hz.cols() != n) {
    throw std::invalid_argument("spin system coupling matrix has the wrong size");
  }
  for (int k = 0; k < n; ++k) {
    if (sys.j_hz(k, k) != 0.0) throw std::invalid_argument("spin system coupling matrix has a nonzero diagonal");
    for (int l = 0; l < n; ++l) {
      if (sys.j_hz(k, l) != sys.j_hz(l, k)) throw std::invalid_argument("spin system coupling matrix is not symmetric");
    }
  }
  const auto sz = static_cast<std::size_t>(n);
  if (sys.labels.size() != sz || sys.t1_s.size() != sz || sys.t2_s.size() != sz) {
    throw std::invalid_argument("spin system per-spin lists differ in length");
  }
}

std::vector<std::string> weak_coupling_warnings(const SpinSystem& sys, double ratio) {
  std::vector<std::string> out;
  for (int k = 0; k < sys.nspins(); ++k) {
    for (int l = k + 1; l < sys.nspins(); ++l) {
      const double dnu = std::abs(sys.offsets_hz[static_cast<std::size_t>(k)] - sys.offsets_hz[static_cast<std::size_t>(l)]);
      const double j = std::abs(sys.j_hz(k, l));
      if (dnu > 0.0 && j > ratio * dnu) {
        std::ostringstream os;
        os << "spins " << k + 1 << " and " << l + 1 << ": |J| = " << j << " Hz is not small against the "
           << dnu << " Hz shift difference";
        out.push_back(os.str());
      }
    }
  }
  return out;
}

SpinSystem spin_system_from_json(const nlohmann::json& j) {
  SpinSystem sys;
  sys.name = j.value("name", "");
  const auto& spins = j.at("spins");
  for (const auto& s : spins) {
    sys.labels.push_back(s.value("label", ""));
    sys.offsets_hz.push_back(s.at("offset_hz").get<double>());
    sys.t1_s.push_back(s.value("t1_s", 0.0));
    sys.t2_s.push_back(s.value("t2_s", 0.0));
  }
  const int n = sys.nspins();
  sys.j_hz = Eigen::MatrixXd::Zero(n, n);
  for (const auto& c : j.value("couplings", nlohmann::json::array())) {
    const auto& pair = c.at("spins");
    const int k = pair.at(0).get<int>() - 1;
    const int l = pair.at(1).get<int>() - 1;
    if (k < 0 || l < 0 || k >= n || l >= n || k == l) throw std::invalid_argument("bad coupling spin pair");
    sys.j_hz(k, l) = sys.j_hz(l, k) = c.at("j_hz").get<double>();
  }
  validate(sys);
  return sys;
}

nlohmann::json to_json(const SpinSystem& sys) {
  nlohmann::json spins = nlohmann::json::array();
  for (int k = 0; k < sys.nspins(); ++k) {
    const auto i = static_cast<std::size_t>(k);
    spins.push_back({{"label", sys.labels[i]}, {"offset_hz", sys.offsets_hz[i]}, {"t1_s", sys.t1_s[i]}, {"t2_s", sys.t2_s[i]}});
  }
  nlohmann::json couplings = nlohmann::json::array();
  for (int k = 0; k < sys.nspins(); ++k) {
    for (int l = k + 1; l < sys.nspins(); ++l) {
      if (sys.j_hz(k, l) != 0.0) couplings.push_back({{"spins", {k + 1, l + 1}}, {"j_hz", sys.j_hz(k, l)}});
    }
  }
  return {{"schema", 1}, {"name", sys.name}, {"spins", spins}, {"couplings", couplings}};
}

SpinSystem load_spin_system(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open spin system file " + path.string());
  return spin_system_from_json(nlohmann::json::parse(in));
}

std::filesystem::path default_data_dir() {
  if (const char* env = std::getenv("ZZCODE_DATA_DIR"); env != nullptr && *env != '\0') return env;
  const std::filesystem::path source = ZZCODE_DEFAULT_DATA_DIR;
  if (std::filesystem::exists(source / "alanine.json")) return source;
  return ZZCODE_INSTALLED_DATA_DIR;
}

SpinSystem load_alanine() { return load_spin_system(default_data_dir() / "alanine.json"); }

}  // namespace zzcode
