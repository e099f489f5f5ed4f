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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "zzcode/circuit.hpp"
#include "zzcode/knill_laflamme.hpp"
#include "zzcode/pipeline.hpp"
#include "zzcode/pulse.hpp"
#include "zzcode/spin_system.hpp"
#include "zzcode_cli/cli.hpp"

namespace zzcode::cli {
namespace {

using nlohmann::json;

constexpr int kStatesPerError = 5;

StateVector random_state(Eigen::Index dim, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  StateVector v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v(i) = Complex(g(rng), g(rng));
  return v / v.norm();
}

DenseMatrix random_density(Eigen::Index dim, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  DenseMatrix a(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) a(i, j) = Complex(g(rng), g(rng));
  }
  const DenseMatrix rho = a * a.adjoint();
  return rho / rho.trace().real();
}

json check_one_code(CodeId id, const std::vector<double>& phis, int random_ancillas, std::mt19937_64& rng,
                    const Tolerances& tol) {
  const CodeSpec code = build_code(id);
  const auto nd = static_cast<int>(code.data_spins.size());
  const auto na = static_cast<int>(code.ancilla_spins.size());
  const Eigen::Index ddim = dimension_for(nd);
  const Eigen::Index adim = dimension_for(na);
  const DenseMatrix enc = circuit_unitary(code.encoder);
  const DenseMatrix dec = circuit_unitary(code.decoder);
  const DenseMatrix cor = circuit_unitary(code.correction);

  const double inverse_dev =
      equal_up_to_global_phase(dec * enc, DenseMatrix::Identity(enc.rows(), enc.cols())).max_deviation;

  const std::vector<StateVector> basis = code_space_basis(code);
  const KlResult kl = kl_check(basis, code.declared_errors, tol.kl);
  json probes = json::array();
  bool probes_fail = !code.failing_probes.empty();
  for (const PauliString& p : code.failing_probes) {
    std::vector<PauliString> errs = code.declared_errors;
    errs.push_back(p);
    const bool ok = kl_check(basis, errs, tol.kl).correctable;
    probes_fail = probes_fail && !ok;
    probes.push_back({{"error", p.label_string()}, {"correctable", ok}});
  }

  double worst = 0.0;
  const bool arbitrary = code.required_ancilla_state == AncillaRequirement::arbitrary;
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  for (const PauliString& e : code.declared_errors) {
    for (double phi : phis) {
      for (int s = 0; s < kStatesPerError; ++s) {
        const OperatorSum anc = arbitrary ? from_dense(random_density(adim, rng)) : ancilla_ground(na);
        const PipelineResult r =
            run_pipeline_unitaries(code, enc, dec, cor, random_state(ddim, rng), anc, coherent_error(e, phi));
        worst = std::max(worst, std::abs(1.0 - r.fidelity));
      }
    }
  }

  json out = {{"code", std::string(code_name(id))},
              {"inverse_deviation", inverse_dev},
              {"kl",
               {{"correctable", kl.correctable},
                {"max_off_diagonal", kl.max_off_diagonal},
                {"max_diagonal_spread", kl.max_diagonal_spread}}},
              {"probes", probes},
              {"max_infidelity", worst}};
  bool pass = inverse_dev < tol.operator_equality && kl.correctable && probes_fail && worst < tol.operator_equality;

  if (arbitrary) {
    // Random ancilla states and angles; at phi = pi the ancilla is conjugated by sigma_x.
    double worst_random = 0.0;
    double worst_flip = 0.0;
    const PauliString coupling = code.declared_errors.back();
    DenseMatrix x_a = DenseMatrix::Identity(adim, adim);
    for (int k = 0; k < na; ++k) x_a = to_dense(PauliString::single(na, k, Pauli::X)) * x_a;
    for (int i = 0; i < random_ancillas; ++i) {
      const DenseMatrix rho_a = random_density(adim, rng);
      for (int j = 0; j < random_ancillas; ++j) {
        const PipelineResult r = run_pipeline_unitaries(code, enc, dec, cor, random_state(ddim, rng),
                                                        from_dense(rho_a), coherent_error(coupling, angle(rng)));
        worst_random = std::max(worst_random, std::abs(1.0 - r.fidelity));
      }
      const PipelineResult flip = run_pipeline_unitaries(code, enc, dec, cor, random_state(ddim, rng),
                                                         from_dense(rho_a), coherent_error(coupling, std::numbers::pi));
      const DenseMatrix anc_out = partial_trace(flip.corrected, code.nspins, code.data_spins);
      worst_flip = std::max(worst_flip, max_abs_diff(anc_out, x_a * rho_a * x_a));
    }
    out["random_ancillas"] = random_ancillas;
    out["random_ancilla_max_infidelity"] = worst_random;
    out["ancilla_flip_deviation"] = worst_flip;
    pass = pass && worst_random < tol.operator_equality && worst_flip < tol.operator_equality;
  }
  out["pass"] = pass;
  return out;
}

}  // namespace

json to_json(const Tolerances& t) {
  return {{"operator_equality", t.operator_equality}, {"pulse_equivalence", t.pulse_equivalence}, {"kl", t.kl}};
}

json check_codes(const std::vector<CodeId>& codes, const std::vector<double>& phis, int random_ancillas,
                 std::uint64_t seed, const Tolerances& tol) {
  std::mt19937_64 rng(seed);
  json results = json::array();
  bool pass = true;
  for (CodeId id : codes) {
    json r = check_one_code(id, phis, random_ancillas, rng, tol);
    pass = pass && r["pass"].get<bool>();
    results.push_back(std::move(r));
  }
  return {{"codes", results}, {"pass", pass}};
}

json check_pulses(const std::filesystem::path& system_file, const std::vector<double>& phis, const Tolerances& tol) {
  if (!std::filesystem::exists(system_file)) throw MissingFixture("spin system file not found: " + system_file.string());
  const SpinSystem sys = load_spin_system(system_file);
  if (sys.nspins() != 3) throw std::invalid_argument("pulse checks need a three-spin system");
  const CodeSpec code = build_code(CodeId::fig1);
  const CodeSequences seq = code_sequences(sys);
  const DenseMatrix pe = sequence_propagator(seq.encode, sys);
  const DenseMatrix pd = sequence_propagator(seq.decode, sys);
  const DenseMatrix pc = sequence_propagator(seq.correct, sys);
  const DenseMatrix ge = circuit_unitary(code.encoder);
  const DenseMatrix gd = circuit_unitary(code.decoder);
  const DenseMatrix gc = circuit_unitary(code.correction);

  const PhaseMatch enc_match = equal_up_to_global_phase(pe, ge, tol.operator_equality);
  const PhaseMatch dec_match = equal_up_to_global_phase(pd * pe, DenseMatrix::Identity(8, 8), tol.operator_equality);
  const std::vector<int> ancilla{2};
  const bool corr_local = equal_up_to_local_unitary(pc.adjoint(), gc.adjoint(), ancilla, tol.operator_equality) ||
                          equal_up_to_local_unitary(pc, gc, ancilla, tol.operator_equality);

  double worst = 0.0;
  const OperatorSum anc = ancilla_ground(1);
  for (const char* name : {"II", "XI", "YI", "ZI", "IX", "XX", "YX", "ZX", "IY", "XY", "YY", "ZY", "IZ",
                                  "XZ", "YZ", "ZZ"}) {
    OperatorSum b(2);
    b.add(name, 1.0);
    for (double phi : phis) {
      const DenseMatrix err = coherent_error(PauliString("ZZI"), phi);
      const PipelineResult g = run_pipeline_unitaries(code, ge, gd, gc, b, anc, err);
      const PipelineResult p = run_pipeline_unitaries(code, pe, pd, pc, b, anc, err);
      worst = std::max(worst, max_abs_diff(to_dense(p.data_state), to_dense(g.data_state)));
    }
  }

  // Refocused coupling: pure Z1 Z2 evolution, unchanged when the offsets and
  // the ancilla couplings are altered.
  SpinSystem altered = sys;
  altered.offsets_hz = {317.0, -2210.0, 5123.0};
  altered.j_hz(0, 2) = altered.j_hz(2, 0) = 71.3;
  altered.j_hz(1, 2) = altered.j_hz(2, 1) = -8.4;
  const double increment = 1.0 / (16.0 * sys.j_hz(0, 1));
  double refocus_dev = 0.0;
  double refocus_indep = 0.0;
  double worst_ratio = 0.0;
  for (int j = 0; j < 32; ++j) {
    const double tau = j * increment;
    const EffectiveCoupling ec = effective_coupling(sys, tau);
    refocus_dev = std::max(refocus_dev, ec.max_deviation);
    if (tau > 0) worst_ratio = std::max(worst_ratio, std::abs(ec.tau_eff / tau - 1.0));
    const PhaseMatch same = equal_up_to_global_phase(sequence_propagator(refocused_zz(tau), sys),
                                                     sequence_propagator(refocused_zz(tau), altered));
    refocus_indep = std::max(refocus_indep, same.max_deviation);
  }

  const OperatorSum sx1 = prepare_initial(sys, InitialState::sx1);
  const OperatorSum sx1sz2 = prepare_initial(sys, InitialState::sx1sz2);
  OperatorSum want_sx1(3);
  want_sx1.add("XII", 0.5);
  want_sx1.add("XIZ", 0.5);
  OperatorSum want_sx1sz2(3);
  want_sx1sz2.add("XZI", 0.5);
  want_sx1sz2.add("XZZ", 0.5);
  const double prep_dev = std::max(max_abs_diff(to_dense(sx1), to_dense(want_sx1)),
                                   max_abs_diff(to_dense(sx1sz2), to_dense(want_sx1sz2)));

  const bool pass = enc_match.equal && dec_match.equal && corr_local && worst < tol.pulse_equivalence &&
                    refocus_dev < tol.operator_equality && refocus_indep < tol.operator_equality &&
                    worst_ratio < 1e-9 && prep_dev < tol.operator_equality;
  return {{"encode_vs_circuit", {{"equal_up_to_phase", enc_match.equal}, {"phase", enc_match.phase},
                                 {"max_deviation", enc_match.max_deviation}}},
          {"decode_after_encode", {{"identity_up_to_phase", dec_match.equal}, {"max_deviation", dec_match.max_deviation}}},
          {"correct_vs_circuit_up_to_ancilla_unitary", corr_local},
          {"pipeline_max_deviation", worst},
          {"refocused_max_deviation", refocus_dev},
          {"refocused_parameter_dependence", refocus_indep},
          {"refocused_tau_eff_relative_error", worst_ratio},
          {"preparation_max_deviation", prep_dev},
          {"pass", pass}};
}

}  // namespace zzcode::cli
