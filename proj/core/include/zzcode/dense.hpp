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

#include <complex>
#include <cstdint>
#include <span>

#include <Eigen/Dense>

namespace zzcode {

using Complex = std::complex<double>;
using DenseMatrix = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;

inline constexpr int kMaxSpins = 10;
/** Default tolerance for operator equality (max-abs entry difference). */
inline constexpr double kOperatorTolerance = 1e-10;

constexpr bool is_power_of_two(std::int64_t n) { return n > 0 && (n & (n - 1)) == 0; }

/** 2^nspins; throws std::length_error above kMaxSpins. */
Eigen::Index dimension_for(int nspins);
/** log2(dim); throws std::invalid_argument unless dim is a power of two. */
int spins_for_dimension(Eigen::Index dim);

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b);
bool is_unitary(const DenseMatrix& u, double tol = kOperatorTolerance);
bool is_hermitian(const DenseMatrix& m, double tol = kOperatorTolerance);

/** u * rho * u^dagger */
DenseMatrix conjugate(const DenseMatrix& rho, const DenseMatrix& u);

/** Trace out the listed 0-based spins of an nspins-spin operator. */
DenseMatrix partial_trace(const DenseMatrix& m, int nspins, std::span<const int> traced);

/** |psi><psi| */
DenseMatrix projector(const StateVector& psi);

/** Bit of spin k (0-based, spin 0 most significant) in a basis index. */
constexpr int spin_bit(std::uint32_t index, int spin, int nspins) {
  return static_cast<int>((index >> (nspins - 1 - spin)) & 1u);
}

}  // namespace zzcode
