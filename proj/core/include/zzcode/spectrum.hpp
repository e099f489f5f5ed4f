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

#include <nlohmann/json.hpp>

#include "zzcode/acquisition.hpp"
#include "zzcode/dense.hpp"

namespace zzcode {

struct Spectrum1D {
  std::vector<double> freq_hz;
  std::vector<Complex> values;
};

/** Rows follow omega_1, columns omega_2. */
struct Spectrum2D {
  std::vector<double> f1_hz;
  std::vector<double> f2_hz;
  Eigen::MatrixXcd grid;
};

struct Peak {
  double f1_hz = 0.0;
  double f2_hz = 0.0;
  double amplitude = 0.0;
  int sign = 1;
};

using PeakList = std::vector<Peak>;

/**
 * Centered frequency axis of n bins for sampling interval dt, from
 * -1/(2 dt) in steps of 1/(n dt).
 */
std::vector<double> centered_axis(int n, double dt);

/** First point halved, zero-filled to zero_fill points, FFT, zero frequency centered. */
Spectrum1D fourier_transform(const Fid& fid, int zero_fill);

/**
 * omega_2 FFT of each increment's FID, then the cosine transform
 * G(m) = sum_j S_j cos(2 pi m j / n) across the increments at the bins
 * m/(n increment), m = -n/2 .. n/2 - 1.
 */
Spectrum2D assemble_2d(const std::vector<Fid>& fids, double increment, int zero_fill);

/**
 * Local maxima of |grid| above threshold * max|grid|, sorted by descending
 * magnitude. The sign comes from the larger of the real and imaginary parts.
 */
PeakList find_peaks(const Spectrum2D& s, double threshold = 0.05);

/** Peaks of a 1D spectrum, as a PeakList with f1 = 0. */
PeakList find_peaks(const Spectrum1D& s, double threshold = 0.05);

/** CSV: header of omega_2 bin centers, first column omega_1 bin centers, real part of the grid. */
void write_spectrum_csv(const Spectrum2D& s, const std::filesystem::path& path);
/** CSV: freq_hz, re, im. */
void write_spectrum_csv(const Spectrum1D& s, const std::filesystem::path& path);
nlohmann::json to_json(const PeakList& peaks);

}  // namespace zzcode
