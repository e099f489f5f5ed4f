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

#include "zzcode/spectrum.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "zzcode/io.hpp"

namespace zzcode {
namespace {

int dominant_sign(Complex v) {
  const double d = std::abs(v.imag()) > std::abs(v.real()) ? v.imag() : v.real();
  return d < 0 ? -1 : 1;
}

}  // namespace

std::vector<double> centered_axis(int n, double dt) {
  std::vector<double> axis(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) axis[static_cast<std::size_t>(i)] = (i - n / 2) / (n * dt);
  return axis;
}

Spectrum1D fourier_transform(const Fid& fid, int zero_fill) {
  const int npts = static_cast<int>(fid.samples.size());
  if (npts < 1 || fid.dwell <= 0) throw std::invalid_argument("fourier_transform: empty FID or bad dwell");
  const int n = std::max(zero_fill, npts);
  std::vector<Complex> in(static_cast<std::size_t>(n), Complex{});
  std::vector<Complex> out(static_cast<std::size_t>(n));
  std::copy(fid.samples.begin(), fid.samples.end(), in.begin());
  in[0] *= 0.5;
  fftw_plan plan = fftw_plan_dft_1d(n, reinterpret_cast<fftw_complex*>(in.data()),
                                    reinterpret_cast<fftw_complex*>(out.data()), FFTW_FORWARD, FFTW_ESTIMATE);
  fftw_execute(plan);
  fftw_destroy_plan(plan);

  Spectrum1D s;
  s.freq_hz = centered_axis(n, fid.dwell);
  s.values.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) s.values[static_cast<std::size_t>(i)] = out[static_cast<std::size_t>((i + n / 2) % n)];
  return s;
}

Spectrum2D assemble_2d(const std::vector<Fid>& fids, double increment, int zero_fill) {
  const int n1 = static_cast<int>(fids.size());
  if (n1 < 1 || increment <= 0) throw std::invalid_argument("assemble_2d: need increments and a positive increment");
  std::vector<Spectrum1D> rows;
  rows.reserve(fids.size());
  for (const Fid& f : fids) rows.push_back(fourier_transform(f, zero_fill));
  const auto n2 = static_cast<Eigen::Index>(rows.front().values.size());

  Spectrum2D s;
  s.f1_hz = centered_axis(n1, increment);
  s.f2_hz = rows.front().freq_hz;
  s.grid = Eigen::MatrixXcd::Zero(n1, n2);
  for (int m = 0; m < n1; ++m) {
    const int bin = m - n1 / 2;
    for (int j = 0; j < n1; ++j) {
      const double w = std::cos(2 * std::numbers::pi * bin * j / n1);
      const auto& row = rows[static_cast<std::size_t>(j)].values;
      for (Eigen::Index c = 0; c < n2; ++c) s.grid(m, c) += w * row[static_cast<std::size_t>(c)];
    }
  }
  return s;
}

PeakList find_peaks(const Spectrum2D& s, double threshold) {
  const Eigen::MatrixXd mag = s.grid.cwiseAbs();
  const double cut = threshold * mag.maxCoeff();
  PeakList peaks;
  for (Eigen::Index r = 0; r < mag.rows(); ++r) {
    for (Eigen::Index c = 0; c < mag.cols(); ++c) {
      const double v = mag(r, c);
      if (v <= cut) continue;
      bool is_max = true;
      for (Eigen::Index dr = -1; dr <= 1 && is_max; ++dr) {
        for (Eigen::Index dc = -1; dc <= 1; ++dc) {
          const Eigen::Index rr = r + dr;
          const Eigen::Index cc = c + dc;
          if ((dr == 0 && dc == 0) || rr < 0 || cc < 0 || rr >= mag.rows() || cc >= mag.cols()) continue;
          // Ties go to the earlier cell.
          const bool earlier = dr < 0 || (dr == 0 && dc < 0);
          if (mag(rr, cc) > v || (earlier && mag(rr, cc) == v)) {
            is_max = false;
            break;
          }
        }
      }
      if (is_max) {
        peaks.push_back({s.f1_hz[static_cast<std::size_t>(r)], s.f2_hz[static_cast<std::size_t>(c)], v,
                         dominant_sign(s.grid(r, c))});
      }
    }
  }
  std::stable_sort(peaks.begin(), peaks.end(), [](const Peak& a, const Peak& b) { return a.amplitude > b.amplitude; });
  return peaks;
}

PeakList find_peaks(const Spectrum1D& s, double threshold) {
  Spectrum2D wrapped;
  wrapped.f1_hz = {0.0};
  wrapped.f2_hz = s.freq_hz;
  wrapped.grid = Eigen::MatrixXcd(1, static_cast<Eigen::Index>(s.values.size()));
  for (std::size_t i = 0; i < s.values.size(); ++i) wrapped.grid(0, static_cast<Eigen::Index>(i)) = s.values[i];
  return find_peaks(wrapped, threshold);
}

void write_spectrum_csv(const Spectrum2D& s, const std::filesystem::path& path) {
  std::ostringstream os;
  os << std::setprecision(10) << "f1_hz\\f2_hz";
  for (double f : s.f2_hz) os << ',' << f;
  os << '\n';
  for (Eigen::Index r = 0; r < s.grid.rows(); ++r) {
    os << s.f1_hz[static_cast<std::size_t>(r)];
    for (Eigen::Index c = 0; c < s.grid.cols(); ++c) os << ',' << s.grid(r, c).real();
    os << '\n';
  }
  write_text_atomic(path, os.str());
}

void write_spectrum_csv(const Spectrum1D& s, const std::filesystem::path& path) {
  std::ostringstream os;
  os << std::setprecision(10) << "freq_hz,re,im\n";
  for (std::size_t i = 0; i < s.values.size(); ++i) {
    os << s.freq_hz[i] << ',' << s.values[i].real() << ',' << s.values[i].imag() << '\n';
  }
  write_text_atomic(path, os.str());
}

nlohmann::json to_json(const PeakList& peaks) {
  nlohmann::json out = nlohmann::json::array();
  for (const Peak& p : peaks) {
    out.push_back({{"f1_hz", p.f1_hz}, {"f2_hz", p.f2_hz}, {"amplitude", p.amplitude}, {"sign", p.sign}});
  }
  return out;
}

}  // namespace zzcode
