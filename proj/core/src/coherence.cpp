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

#include <map>
#include <string>
#include <vector>

#include "zzcode/pauli.hpp"

namespace zzcode {
namespace {

// sigma_x = s+ + s-, sigma_y = -i s+ + i s-.
Complex raising_weight(char label) { return label == 'X' ? Complex(1.0, 0.0) : Complex(0.0, -1.0); }
Complex lowering_weight(char label) { return label == 'X' ? Complex(1.0, 0.0) : Complex(0.0, 1.0); }

// Accumulate coefficient * prod_k s_{sign_k} back in the Pauli basis, with
// s+ = (X + iY)/2 and s- = (X - iY)/2 on the transverse sites.
void add_ladder_term(OperatorSum& out, const std::string& base, const std::vector<int>& sites,
                     const std::vector<int>& signs, Complex coefficient) {
  const std::size_t m = sites.size();
  std::string label = base;
  for (std::uint32_t choice = 0; choice < (1u << m); ++choice) {
    Complex c = coefficient;
    for (std::size_t k = 0; k < m; ++k) {
      const bool use_y = (choice >> k) & 1u;
      label[static_cast<std::size_t>(sites[k])] = use_y ? 'Y' : 'X';
      c *= use_y ? Complex(0.0, 0.5 * signs[k]) : Complex(0.5, 0.0);
    }
    out.add(label, c);
  }
}

}  // namespace

std::vector<CoherenceComponent> coherence_decompose(const OperatorSum& op) {
  std::map<int, OperatorSum, std::greater<>> by_order;
  for (const auto& [label, coefficient] : op.terms()) {
    std::vector<int> sites;
    for (int k = 0; k < op.nspins(); ++k) {
      const char ch = label[static_cast<std::size_t>(k)];
      if (ch == 'X' || ch == 'Y') sites.push_back(k);
    }
    const std::size_t m = sites.size();
    std::vector<int> signs(m);
    for (std::uint32_t pattern = 0; pattern < (1u << m); ++pattern) {
      Complex c = coefficient;
      int order = 0;
      for (std::size_t k = 0; k < m; ++k) {
        const char ch = label[static_cast<std::size_t>(sites[k])];
        const bool raise = !((pattern >> k) & 1u);
        signs[k] = raise ? 1 : -1;
        order += signs[k];
        c *= raise ? raising_weight(ch) : lowering_weight(ch);
      }
      auto [it, inserted] = by_order.try_emplace(order, op.nspins(), op.prune_threshold());
      add_ladder_term(it->second, label, sites, signs, c);
    }
  }
  std::vector<CoherenceComponent> out;
  for (auto& [order, component] : by_order) {
    if (!component.empty()) out.push_back({order, std::move(component)});
  }
  return out;
}

OperatorSum zero_quantum_part(const OperatorSum& op) {
  for (auto& component : coherence_decompose(op)) {
    if (component.order == 0) return std::move(component.op);
  }
  return OperatorSum(op.nspins(), op.prune_threshold());
}

}  // namespace zzcode
