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

#include "zzcode/circuit.hpp"

namespace zzcode {
namespace {

using nlohmann::json;

// Records carry 1-based spin indices.
int to_index(const json& j) { return j.get<int>() - 1; }

std::vector<int> to_indices(const json& j) {
  std::vector<int> out;
  for (const auto& v : j) out.push_back(to_index(v));
  return out;
}

json from_indices(const std::vector<int>& spins) {
  json out = json::array();
  for (int s : spins) out.push_back(s + 1);
  return out;
}

std::string pattern_string(std::uint32_t pattern, std::size_t width) {
  std::string s(width, '0');
  for (std::size_t k = 0; k < width; ++k) {
    if ((pattern >> (width - 1 - k)) & 1u) s[k] = '1';
  }
  return s;
}

std::uint32_t parse_pattern(const std::string& s, std::size_t width) {
  if (s.size() != width) throw std::invalid_argument("syndrome pattern '" + s + "' has the wrong width");
  std::uint32_t p = 0;
  for (char c : s) {
    if (c != '0' && c != '1') throw std::invalid_argument("syndrome pattern '" + s + "' is not binary");
    p = (p << 1) | static_cast<std::uint32_t>(c - '0');
  }
  return p;
}

json pauli_to_json(const PauliString& p) {
  std::string s = p.label_string();
  if (p.quarter_turns() == 2) s.insert(s.begin(), '-');
  return s;
}

PauliString pauli_from_json(const json& j) {
  std::string s = j.get<std::string>();
  int turns = 0;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    turns = s.front() == '-' ? 2 : 0;
    s.erase(s.begin());
  }
  return PauliString(s, turns);
}

}  // namespace

json gate_to_json(const Gate& g) {
  if (const auto* h = std::get_if<gate::Hadamard>(&g)) return {{"kind", "h"}, {"spin", h->spin + 1}};
  if (const auto* c = std::get_if<gate::CNot>(&g)) {
    return {{"kind", "cnot"}, {"control", c->control + 1}, {"target", c->target + 1}};
  }
  if (const auto* r = std::get_if<gate::Rotation>(&g)) {
    return {{"kind", "rot"}, {"spins", from_indices(r->spins)}, {"axis", r->axis.name()},
            {"angle_rad", r->angle}};
  }
  if (const auto* t = std::get_if<gate::Toffoli>(&g)) {
    return {{"kind", "toffoli"},
            {"controls", json::array({t->control1 + 1, t->control2 + 1})},
            {"target", t->target + 1}};
  }
  if (const auto* p = std::get_if<gate::PauliExp>(&g)) {
    return {{"kind", "pauli_exp"}, {"pauli", pauli_to_json(p->generator)}, {"angle_rad", p->angle}};
  }
  const auto& s = std::get<gate::SyndromeLookup>(g);
  json table = json::array();
  for (const auto& [pattern, p] : s.table) {
    table.push_back({{"syndrome", pattern_string(pattern, s.ancillas.size())}, {"pauli", pauli_to_json(p)}});
  }
  return {{"kind", "syndrome"}, {"ancillas", from_indices(s.ancillas)}, {"table", table}};
}

Gate gate_from_json(const json& j, int nspins) {
  const std::string kind = j.at("kind").get<std::string>();
  Gate g;
  if (kind == "h") {
    g = gate::Hadamard{to_index(j.at("spin"))};
  } else if (kind == "cnot") {
    g = gate::CNot{to_index(j.at("control")), to_index(j.at("target"))};
  } else if (kind == "rot") {
    g = gate::Rotation{to_indices(j.at("spins")), Axis::parse(j.at("axis").get<std::string>()),
                       j.at("angle_rad").get<double>()};
  } else if (kind == "toffoli") {
    const auto& c = j.at("controls");
    if (c.size() != 2) throw std::invalid_argument("toffoli record needs exactly two controls");
    g = gate::Toffoli{to_index(c[0]), to_index(c[1]), to_index(j.at("target"))};
  } else if (kind == "pauli_exp") {
    g = gate::PauliExp{pauli_from_json(j.at("pauli")), j.at("angle_rad").get<double>()};
  } else if (kind == "syndrome") {
    gate::SyndromeLookup s;
    s.ancillas = to_indices(j.at("ancillas"));
    for (const auto& entry : j.at("table")) {
      s.table.emplace(parse_pattern(entry.at("syndrome").get<std::string>(), s.ancillas.size()),
                      pauli_from_json(entry.at("pauli")));
    }
    g = std::move(s);
  } else {
    throw std::invalid_argument("unknown gate kind '" + kind + "'");
  }
  validate(g, nspins);
  return g;
}

json circuit_to_json(const Circuit& c) {
  json out = json::array();
  for (const Gate& g : c.gates) out.push_back(gate_to_json(g));
  return out;
}

Circuit circuit_from_json(const json& j, int nspins) {
  if (!j.is_array()) throw std::invalid_argument("circuit JSON must be an array of gate records");
  Circuit c(nspins);
  for (const auto& record : j) c.add(gate_from_json(record, nspins));
  return c;
}

}  // namespace zzcode
