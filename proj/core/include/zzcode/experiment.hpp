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

#include <string>

#include "zzcode/pulse.hpp"
#include "zzcode/spectrum.hpp"

namespace zzcode {

struct ExperimentConfig {
  InitialState initial = InitialState::sx1;
  bool corrected = true;
  int n_increments = 32;
  /** Defaults to 1/(16 J_12) when not positive. */
  double increment = 0.0;
  int npoints = 1024;
  double dwell = 1e-3;
  int zero_fill = 2048;
  bool apodize = true;
};

enum class DoubletPhase { in_phase, antiphase, undetermined };
std::string doublet_phase_name(DoubletPhase p);

struct ExperimentResult {
  Spectrum2D spectrum;
  PeakList peaks;
  /** The omega_1 = 0 row. */
  Spectrum1D slice;
  DoubletPhase slice_phase = DoubletPhase::undetermined;
  /** Summed |grid| over |omega_1| in [20, 35] Hz relative to the row holding the largest peak. */
  double cross_fraction = 0.0;
  double effective_tau_ratio = 0.0;
};

/**
 * Doublet centred on 0 Hz. Takes the strongest bin within tol_hz of +J/2 and
 * its mirror bin at -f: a real time signal gives v(f) v(-f) = |v(f)|^2 > 0
 * (in phase), a purely imaginary one gives -|v(f)|^2 (antiphase). This holds
 * for lines that fall between frequency bins, where the dominant quadrature
 * of each peak alone is ambiguous.
 */
DoubletPhase classify_doublet(const Spectrum1D& slice, double j_hz, double tol_hz = 3.0);

/** Summed |grid| over rows with |omega_1| in [lo, hi] over the sum of the row with the global maximum. */
double band_fraction(const Spectrum2D& s, double lo_hz, double hi_hz);

/**
 * For each tau_j = j * increment: prepare the initial state, then either
 * encode, refocused coupling, decode and correct, or the refocused coupling
 * alone; acquire spin 1 with the ancilla decoupled.
 */
ExperimentResult run_2d_experiment(const SpinSystem& sys, const ExperimentConfig& config);

}  // namespace zzcode
