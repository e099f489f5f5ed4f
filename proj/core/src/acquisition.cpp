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

#include "zzcode/acquisition.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "zzcode/io.hpp"

namespace zzcode {
namespace {

struct Line {
  Complex amplitude;
  double frequency;  // rad/s
  double decay;      // 1/s
};

}  // namespace

Fid acquire(const OperatorSum& rho, const SpinSystem& sys, const AcquireOptions& opts) {
  const int n = sys.nspins();
  if (rho.nspins() != n) throw std::invalid_argument("acquire: state and spin system differ in size");
  if (opts.npoints < 1 || opts.dwell <= 0) throw std::invalid_argument("acquire: need npoints >= 1 and dwell > 0");
  for (int k : opts.observe) {
    if (k < 0 || k >= n) throw std::out_of_range("acquire: observed spin out of range");
    if (std::find(opts.decouple.begin(), opts.decouple.end(), k) != opts.decouple.end()) {
      throw std::invalid_argument("acquire: a spin cannot be observed and decoupled");
    }
  }
  auto decoupled = [&](int k) { return std::find(opts.decouple.begin(), opts.decouple.end(), k) != opts.decouple.end(); };

  const Eigen::Index dim = dimension_for(n);
  Eigen::VectorXd energy = Eigen::VectorXd::Zero(dim);
  for (Eigen::Index c = 0; c < dim; ++c) {
    const auto idx = static_cast<std::uint32_t>(c);
    auto z = [&](int k) { return spin_bit(idx, k, n) ? -1.0 : 1.0; };
    for (int k = 0; k < n; ++k) {
      if (!decoupled(k)) energy(c) += std::numbers::pi * sys.offsets_hz[static_cast<std::size_t>(k)] * z(k);
      for (int l = k + 1; l < n; ++l) {
        if (!decoupled(k) && !decoupled(l)) energy(c) += std::numbers::pi / 2 * sys.j_hz(k, l) * z(k) * z(l);
      }
    }
  }

  // H is diagonal, so rho_ij(t) = rho_ij exp(-i (E_i - E_j) t).
  const DenseMatrix r = to_dense(rho);
  const double norm = static_cast<double>(dim);
  std::vector<Line> lines;
  for (int k : opts.observe) {
    const DenseMatrix detect = to_dense(PauliString::single(n, k, Pauli::X)) +
                               Complex(0.0, 1.0) * to_dense(PauliString::single(n, k, Pauli::Y));
    const double t2 = sys.t2_s[static_cast<std::size_t>(k)];
    const double decay = opts.apodize && t2 > 0 ? 1.0 / t2 : 0.0;
    for (Eigen::Index i = 0; i < dim; ++i) {
      for (Eigen::Index j = 0; j < dim; ++j) {
        const Complex a = r(i, j) * detect(j, i);
        if (std::abs(a) > 1e-15) lines.push_back({a / norm, energy(j) - energy(i), decay});
      }
    }
  }

  Fid fid;
  fid.dwell = opts.dwell;
  fid.samples.resize(static_cast<std::size_t>(opts.npoints));
  for (int s = 0; s < opts.npoints; ++s) {
    const double t = s * opts.dwell;
    Complex acc = 0.0;
    for (const Line& l : lines) acc += l.amplitude * std::polar(std::exp(-l.decay * t), l.frequency * t);
    fid.samples[static_cast<std::size_t>(s)] = acc;
  }
  return fid;
}

void write_fid_csv(const Fid& fid, const std::filesystem::path& path) {
  std::ostringstream os;
  os << std::setprecision(12) << "t,re,im\n";
  for (std::size_t s = 0; s < fid.samples.size(); ++s) {
    os << static_cast<double>(s) * fid.dwell << ',' << fid.samples[s].real() << ',' << fid.samples[s].imag() << '\n';
  }
  write_text_atomic(path, os.str());
}

}  // namespace zzcode
