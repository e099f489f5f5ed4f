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

#include "zzcode/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace zzcode {

std::string doublet_phase_name(DoubletPhase p) {
  switch (p) {
    case DoubletPhase::in_phase: return "in_phase";
    case DoubletPhase::antiphase: return "antiphase";
    case DoubletPhase::undetermined: break;
  }
  return "undetermined";
}

DoubletPhase classify_doublet(const Spectrum1D& slice, double j_hz, double tol_hz) {
  const std::size_t n = slice.values.size();
  double global = 0.0;
  for (const Complex& v : slice.values) global = std::max(global, std::abs(v));
  std::size_t best = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(slice.freq_hz[i] - 0.5 * j_hz) > tol_hz) continue;
    if (best == n || std::abs(slice.values[i]) > std::abs(slice.values[best])) best = i;
  }
  if (best == n || global == 0.0) return DoubletPhase::undetermined;
  // Centred axis: bin i sits at (i - n/2) df, so -f is bin n - i.
  const std::size_t mirror = n - best;
  if (mirror >= n || std::abs(slice.freq_hz[mirror] + slice.freq_hz[best]) > 1e-9 * std::max(1.0, j_hz)) {
    return DoubletPhase::undetermined;
  }
  const Complex plus = slice.values[best];
  const Complex minus = slice.values[mirror];
  if (std::min(std::abs(plus), std::abs(minus)) < 0.05 * global) return DoubletPhase::undetermined;
  return (plus * minus).real() > 0 ? DoubletPhase::in_phase : DoubletPhase::antiphase;
}

double band_fraction(const Spectrum2D& s, double lo_hz, double hi_hz) {
  const Eigen::MatrixXd mag = s.grid.cwiseAbs();
  Eigen::Index r_max = 0;
  Eigen::Index c_max = 0;
  mag.maxCoeff(&r_max, &c_max);
  const double main_row = mag.row(r_max).sum();
  if (main_row == 0.0) return 0.0;
  double band = 0.0;
  for (Eigen::Index r = 0; r < mag.rows(); ++r) {
    const double f = std::abs(s.f1_hz[static_cast<std::size_t>(r)]);
    if (f >= lo_hz && f <= hi_hz) band += mag.row(r).sum();
  }
  return band / main_row;
}

ExperimentResult run_2d_experiment(const SpinSystem& sys, const ExperimentConfig& config) {
  if (sys.nspins() != 3) throw std::invalid_argument("run_2d_experiment: needs the three-spin system");
  if (config.n_increments < 2) throw std::invalid_argument("run_2d_experiment: need at least two increments");
  const double j12 = sys.j_hz(0, 1);
  const double increment = config.increment > 0 ? config.increment : 1.0 / (16.0 * j12);

  const OperatorSum rho0 = prepare_initial(sys, config.initial);
  const CodeSequences code = code_sequences(sys);
  const DenseMatrix enc = sequence_propagator(code.encode, sys);
  const DenseMatrix dec = sequence_propagator(code.decode, sys);
  const DenseMatrix cor = sequence_propagator(code.correct, sys);
  const DenseMatrix rho0_dense = to_dense(rho0);

  AcquireOptions acq;
  acq.observe = {0};
  acq.decouple = {2};
  acq.npoints = config.npoints;
  acq.dwell = config.dwell;
  acq.apodize = config.apodize;

  std::vector<Fid> fids;
  fids.reserve(static_cast<std::size_t>(config.n_increments));
  for (int j = 0; j < config.n_increments; ++j) {
    const double tau = j * increment;
    DenseMatrix u = sequence_propagator(refocused_zz(tau), sys);
    if (config.corrected) u = cor * dec * u * enc;
    fids.push_back(acquire(from_dense(conjugate(rho0_dense, u)), sys, acq));
  }

  ExperimentResult r;
  r.spectrum = assemble_2d(fids, increment, config.zero_fill);
  r.peaks = find_peaks(r.spectrum, 0.05);
  const auto zero_row = static_cast<Eigen::Index>(config.n_increments / 2);
  r.slice.freq_hz = r.spectrum.f2_hz;
  r.slice.values.resize(static_cast<std::size_t>(r.spectrum.grid.cols()));
  for (Eigen::Index c = 0; c < r.spectrum.grid.cols(); ++c) {
    r.slice.values[static_cast<std::size_t>(c)] = r.spectrum.grid(zero_row, c);
  }
  r.slice_phase = classify_doublet(r.slice, j12);
  r.cross_fraction = band_fraction(r.spectrum, 20.0, 35.0);
  r.effective_tau_ratio = effective_coupling(sys, increment).tau_eff / increment;
  return r;
}

}  // namespace zzcode
