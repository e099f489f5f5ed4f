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
#include <filesystem>
#include <fstream>
#include <numbers>

#include <gtest/gtest.h>

#include "zzcode/acquisition.hpp"
#include "zzcode/experiment.hpp"
#include "zzcode/spectrum.hpp"

namespace zzcode {
namespace {

constexpr double kPi = std::numbers::pi;

SpinSystem two_spins(double nu1, double nu2, double j) {
  SpinSystem s;
  s.name = "pair";
  s.labels = {"A", "B"};
  s.offsets_hz = {nu1, nu2};
  s.j_hz = Eigen::MatrixXd::Zero(2, 2);
  s.j_hz(0, 1) = s.j_hz(1, 0) = j;
  s.t1_s = {1.0, 1.0};
  s.t2_s = {0.2, 0.3};
  return s;
}

OperatorSum op(const char* label) {
  OperatorSum o(2);
  o.add(label, 1.0);
  return o;
}

// s(t) = exp(2 pi i nu t) cos(pi J t) for in-phase X, i exp(2 pi i nu t) sin(pi J t) for antiphase X Z.
TEST(Acquisition, MatchesAnalyticDoublets) {
  const SpinSystem s = two_spins(40.0, 300.0, 12.0);
  AcquireOptions o;
  o.npoints = 64;
  o.dwell = 2e-3;
  const Fid inphase = acquire(op("XI"), s, o);
  const Fid anti = acquire(op("XZ"), s, o);
  for (int n = 0; n < o.npoints; ++n) {
    const double t = n * o.dwell;
    const Complex carrier = std::polar(1.0, 2 * kPi * 40.0 * t);
    EXPECT_LT(std::abs(inphase.samples[n] - carrier * std::cos(kPi * 12.0 * t)), 1e-12);
    EXPECT_LT(std::abs(anti.samples[n] - Complex(0.0, 1.0) * carrier * std::sin(kPi * 12.0 * t)), 1e-12);
  }
}

TEST(Acquisition, DecouplingAndApodization) {
  const SpinSystem s = two_spins(40.0, 300.0, 12.0);
  AcquireOptions o;
  o.npoints = 32;
  o.dwell = 1e-3;
  o.decouple = {1};
  o.apodize = true;
  const Fid f = acquire(op("XI"), s, o);
  for (int n = 0; n < o.npoints; ++n) {
    const double t = n * o.dwell;
    EXPECT_LT(std::abs(f.samples[n] - std::polar(std::exp(-t / 0.2), 2 * kPi * 40.0 * t)), 1e-12);
  }
}

TEST(Spectrum, CenteredAxis) {
  const std::vector<double> a = centered_axis(8, 1e-3);
  EXPECT_DOUBLE_EQ(a.front(), -500.0);
  EXPECT_DOUBLE_EQ(a[4], 0.0);
  EXPECT_DOUBLE_EQ(a[5], 125.0);
}

TEST(Spectrum, SingleLineLandsOnItsFrequency) {
  Fid f;
  f.dwell = 1e-3;
  for (int n = 0; n < 256; ++n) f.samples.push_back(std::polar(1.0, 2 * kPi * 125.0 * n * f.dwell));
  const Spectrum1D s = fourier_transform(f, 512);
  ASSERT_EQ(s.values.size(), 512u);
  const PeakList peaks = find_peaks(s, 0.5);
  ASSERT_EQ(peaks.size(), 1u);
  EXPECT_NEAR(peaks[0].f2_hz, 125.0, 1e-9);
  EXPECT_EQ(peaks[0].sign, 1);
  EXPECT_THROW(fourier_transform(Fid{}, 16), std::invalid_argument);
}

TEST(Spectrum, DoubletPhaseClassification) {
  const SpinSystem s = two_spins(0.0, 300.0, 54.2);
  AcquireOptions o;
  o.apodize = false;
  o.decouple = {};
  const Spectrum1D in = fourier_transform(acquire(op("XI"), s, o), 2048);
  const Spectrum1D anti = fourier_transform(acquire(op("XZ"), s, o), 2048);
  EXPECT_EQ(classify_doublet(in, 54.2), DoubletPhase::in_phase);
  EXPECT_EQ(classify_doublet(anti, 54.2), DoubletPhase::antiphase);
  Spectrum1D empty = in;
  for (auto& v : empty.values) v = 0.0;
  EXPECT_EQ(classify_doublet(empty, 54.2), DoubletPhase::undetermined);
  EXPECT_EQ(doublet_phase_name(DoubletPhase::antiphase), "antiphase");
}

TEST(Spectrum, CosineTransformSeparatesModulationFrequency) {
  // Rows modulated by cos(2 pi f tau_j) with f on the omega_1 grid.
  const int n1 = 32;
  const double inc = 1.0 / (16 * 54.2);
  const double f = 4.0 / (n1 * inc);
  std::vector<Fid> fids;
  for (int j = 0; j < n1; ++j) {
    Fid fid;
    fid.dwell = 1e-3;
    for (int n = 0; n < 64; ++n) fid.samples.push_back(std::cos(2 * kPi * f * j * inc) * std::polar(1.0, 2 * kPi * 62.5 * n * 1e-3));
    fids.push_back(fid);
  }
  const Spectrum2D s = assemble_2d(fids, inc, 128);
  const PeakList peaks = find_peaks(s, 0.5);
  ASSERT_EQ(peaks.size(), 2u);
  for (const Peak& p : peaks) {
    EXPECT_NEAR(std::abs(p.f1_hz), f, 1e-9);
    EXPECT_NEAR(p.f2_hz, 62.5, 1e-9);
  }
  EXPECT_GT(band_fraction(s, f - 1, f + 1), 0.9);
}

TEST(Spectrum, CsvAndJsonOutput) {
  const auto dir = std::filesystem::temp_directory_path() / "zzcode_spectrum_test";
  std::filesystem::remove_all(dir);
  Spectrum1D s;
  s.freq_hz = {-1.0, 0.0};
  s.values = {Complex(1.0, 2.0), Complex(0.5, 0.0)};
  write_spectrum_csv(s, dir / "nested" / "s.csv");
  std::ifstream in(dir / "nested" / "s.csv");
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "freq_hz,re,im");
  const nlohmann::json j = to_json(PeakList{{1.0, 2.0, 3.0, -1}});
  EXPECT_EQ(j[0]["sign"], -1);
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace zzcode
