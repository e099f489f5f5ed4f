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
#include <vector>

#include "zzcode/dense.hpp"
#include "zzcode/pauli.hpp"
#include "zzcode/spin_system.hpp"

namespace zzcode {

struct Fid {
  std::vector<Complex> samples;
  double dwell = 0.0;
};

struct AcquireOptions {
  std::vector<int> observe{0};
  std::vector<int> decouple;
  int npoints = 1024;
  double dwell = 1e-3;
  /** Multiply each observed spin's signal by exp(-t/T2). */
  bool apodize = false;
};

/**
 * s(n dwell) = Tr[rho(t) sum_k (X_k + i Y_k)] / 2^N under the internal
 * Hamiltonian with every term touching a decoupled spin removed. A positive
 * offset gives a positive frequency.
 */
Fid acquire(const OperatorSum& rho, const SpinSystem& sys, const AcquireOptions& opts);

/** CSV with columns t, re, im. */
void write_fid_csv(const Fid& fid, const std::filesystem::path& path);

}  // namespace zzcode
