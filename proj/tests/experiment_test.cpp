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

#include <cmath>

#include <gtest/gtest.h>

#include "zzcode/experiment.hpp"

namespace zzcode {
namespace {

SpinSystem alanine() { return load_spin_system(std::string(ZZCODE_TEST_DATA_DIR) + "/alanine.json"); }

ExperimentResult run(InitialState initial, bool corrected) {
  ExperimentConfig c;
  c.initial = initial;
  c.corrected = corrected;
  return run_2d_experiment(alanine(), c);
}

double main_peak(const PeakList& peaks) {
  double m = 0.0;
  for (const Peak& p : peaks) m = std::max(m, p.amplitude);
  return m;
}

TEST(Experiment, UncorrectedShowsCrossPeaksNearTwentySevenHertz) {
  const ExperimentResult r = run(InitialState::sx1, false);
  const double top = main_peak(r.peaks);
  int near_plus = 0;
  int near_minus = 0;
  for (const Peak& p : r.peaks) {
    if (p.amplitude < 0.2 * top) continue;
    near_plus += std::abs(p.f1_hz - 27.1) < 1.0 ? 1 : 0;
    near_minus += std::abs(p.f1_hz + 27.1) < 1.0 ? 1 : 0;
  }
  EXPECT_GT(near_plus, 0);
  EXPECT_GT(near_minus, 0);
  EXPECT_GT(r.cross_fraction, 0.2);
  EXPECT_NEAR(r.effective_tau_ratio, 1.0, 1e-9);
}

TEST(Experiment, CorrectedSuppressesCrossPeaks) {
  for (InitialState s : {InitialState::sx1, InitialState::sx1sz2}) {
    const ExperimentResult r = run(s, true);
    const PeakList all = find_peaks(r.spectrum, 0.01);
    const double top = main_peak(all);
    for (const Peak& p : all) {
      if (std::abs(p.f1_hz) > 10.0) EXPECT_LT(p.amplitude, 0.01 * top) << p.f1_hz;
    }
    EXPECT_LT(r.cross_fraction, 0.01);
  }
}

TEST(Experiment, SliceDoubletPhase) {
  EXPECT_EQ(run(InitialState::sx1, true).slice_phase, DoubletPhase::in_phase);
  EXPECT_EQ(run(InitialState::sx1sz2, true).slice_phase, DoubletPhase::antiphase);
}

TEST(Experiment, GridShapeAndDeterminism) {
  const ExperimentResult a = run(InitialState::sx1sz2, false);
  const ExperimentResult b = run(InitialState::sx1sz2, false);
  EXPECT_EQ(a.spectrum.grid.rows(), 32);
  EXPECT_EQ(a.spectrum.grid.cols(), 2048);
  EXPECT_EQ(a.slice.values.size(), 2048u);
  EXPECT_TRUE(a.spectrum.grid == b.spectrum.grid);
  // omega_1 axis step is 1/(32 * increment) = J/2.
  EXPECT_NEAR(a.spectrum.f1_hz[17] - a.spectrum.f1_hz[16], 54.2 / 2, 1e-9);
}

TEST(Experiment, RejectsBadConfig) {
  ExperimentConfig c;
  c.n_increments = 0;
  EXPECT_THROW(run_2d_experiment(alanine(), c), std::invalid_argument);
}

}  // namespace
}  // namespace zzcode
