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
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "zzcode/dense.hpp"

namespace zzcode {

/** Single-spin Pauli operators (and identity). */
enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char to_char(Pauli p);
Pauli pauli_from_char(char c);

/**
 * A tensor product of single-spin Pauli operators with a phase i^k.
 *
 * Position 0 is spin 1, the leftmost tensor factor and the most significant
 * bit of a computational-basis index.
 */
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(std::string_view labels, int quarter_turns = 0);
  PauliString(std::vector<Pauli> labels, int quarter_turns = 0);

  static PauliString identity(int nspins);
  static PauliString single(int nspins, int spin, Pauli p);
  /** Product of Z on every spin whose bit is set; bit (n-1-k) is spin k. */
  static PauliString z_string(int nspins, std::uint32_t mask);
  /** sigma_z^k sigma_z^l on 0-based spins k and l. */
  static PauliString zz(int nspins, int k, int l);

  int nspins() const { return static_cast<int>(labels_.size()); }
  Pauli operator[](int spin) const { return labels_[static_cast<std::size_t>(spin)]; }
  const std::vector<Pauli>& labels() const { return labels_; }
  std::string label_string() const;

  /** Phase is i^quarter_turns(), quarter_turns() in [0, 4). */
  int quarter_turns() const { return quarter_turns_; }
  Complex phase() const;
  bool is_hermitian() const { return quarter_turns_ % 2 == 0; }

  int weight() const;
  bool commutes_with(const PauliString& other) const;
  /** Bit mask of spins carrying X or Y (the flip pattern of the operator). */
  std::uint32_t x_mask() const;
  std::uint32_t z_mask() const;

  PauliString with_quarter_turns(int k) const;
  /** Restrict to the listed spins, in the listed order. Phase is kept. */
  PauliString restricted(std::span<const int> spins) const;

  friend bool operator==(const PauliString&, const PauliString&) = default;

 private:
  std::vector<Pauli> labels_;
  int quarter_turns_ = 0;
};

/** The unique Pauli string c with matrix(a) * matrix(b) == matrix(c). */
PauliString pauli_product(const PauliString& a, const PauliString& b);
inline PauliString operator*(const PauliString& a, const PauliString& b) {
  return pauli_product(a, b);
}

inline constexpr double kPruneThreshold = 1e-14;

/**
 * Linear combination of Pauli strings over a fixed number of spins.
 *
 * Terms are keyed by their label string ("XZI") and kept in lexicographic
 * order so that iteration and serialization are deterministic. Coefficients
 * whose magnitude falls below the prune threshold are dropped on insertion.
 */
class OperatorSum {
 public:
  using Terms = std::map<std::string, Complex>;

  explicit OperatorSum(int nspins = 0, double prune_threshold = kPruneThreshold);

  static OperatorSum identity(int nspins);
  static OperatorSum from_pauli(const PauliString& p, Complex coefficient = 1.0);
  /** E_+ = (1 + sigma_z)/2 on one spin; E_- when plus is false. */
  static OperatorSum idempotent(int nspins, int spin, bool plus = true);

  int nspins() const { return nspins_; }
  double prune_threshold() const { return prune_threshold_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  Complex coefficient(std::string_view label) const;
  void add(std::string_view label, Complex coefficient);
  void add(const PauliString& p, Complex coefficient = 1.0);

  /** True iff every coefficient is real within tol (Pauli strings are Hermitian). */
  bool is_hermitian(double tol = 1e-12) const;
  /** Hilbert-Schmidt norm squared divided by the Hilbert-space dimension. */
  double normalized_norm2() const;

  OperatorSum& operator+=(const OperatorSum& rhs);
  OperatorSum& operator-=(const OperatorSum& rhs);
  OperatorSum& operator*=(Complex scale);

  friend OperatorSum operator+(OperatorSum lhs, const OperatorSum& rhs) { return lhs += rhs; }
  friend OperatorSum operator-(OperatorSum lhs, const OperatorSum& rhs) { return lhs -= rhs; }
  friend OperatorSum operator*(OperatorSum lhs, Complex s) { return lhs *= s; }
  friend OperatorSum operator*(Complex s, OperatorSum rhs) { return rhs *= s; }
  friend OperatorSum operator*(const OperatorSum& lhs, const OperatorSum& rhs);

 private:
  void check_spins(const OperatorSum& other) const;

  int nspins_ = 0;
  double prune_threshold_ = kPruneThreshold;
  Terms terms_;
};

/** exp(-i theta P) = cos(theta) I - i sin(theta) P for a Hermitian Pauli string. */
OperatorSum exp_pauli(const PauliString& p, double theta);

DenseMatrix to_dense(const PauliString& p);
DenseMatrix to_dense(const OperatorSum& op);
/** Pauli decomposition c_P = Tr(P M) / 2^n. */
OperatorSum from_dense(const DenseMatrix& m);

/** Tensor product a (x) b, with a on the leading spins. */
OperatorSum tensor(const OperatorSum& a, const OperatorSum& b);
/**
 * Place op (on op.nspins() spins) onto the given 0-based positions of an
 * nspins-spin system; identity elsewhere.
 */
OperatorSum embed(const OperatorSum& op, std::span<const int> positions, int nspins);

/**
 * Trace out the listed spins. Each identity factor on a traced spin
 * contributes Tr(1) = 2, any other factor contributes 0. Tracing every spin
 * yields a 0-spin sum holding the scalar under the empty label, unless
 * allow_scalar is false, in which case std::invalid_argument is thrown.
 */
OperatorSum partial_trace(const OperatorSum& op, std::span<const int> traced,
                          bool allow_scalar = true);

/** One coherence-order component of an operator. */
struct CoherenceComponent {
  int order = 0;
  OperatorSum op;
};

/**
 * Split an operator into components of definite coherence order
 * p = #sigma_+ - #sigma_-, sorted by descending order. The components are
 * mutually orthogonal and sum to the input.
 */
std::vector<CoherenceComponent> coherence_decompose(const OperatorSum& op);

/** The order-0 part of op. */
OperatorSum zero_quantum_part(const OperatorSum& op);

void to_json(nlohmann::json& j, const OperatorSum& op);
void from_json(const nlohmann::json& j, OperatorSum& op);

}  // namespace zzcode
