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

#include <bit>
#include <string>
#include <string_view>
#include <utility>

#include "zzcode/pauli.hpp"

namespace zzcode::detail {

struct SiteProduct {
  Pauli label;
  int quarter_turns;  // phase i^k of the single-site product
};

SiteProduct multiply_site(Pauli a, Pauli b);

/** Product of two label strings: resulting labels and phase i^k. */
std::pair<std::string, int> multiply_labels(std::string_view a, std::string_view b);

Complex i_power(int k);

}  // namespace zzcode::detail
