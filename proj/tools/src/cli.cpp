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

#include "zzcode_cli/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <iterator>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "zzcode/capacity.hpp"
#include "zzcode/circuit.hpp"
#include "zzcode/experiment.hpp"
#include "zzcode/io.hpp"
#include "zzcode/spectrum.hpp"
#include "zzcode/spin_system.hpp"
#include "zzcode/table.hpp"

namespace zzcode::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr int kSchemaVersion = 1;
// Suppression check: no |omega_1| > 10 Hz peak above 1% of the main peak.
constexpr double kCrossBandHz = 10.0;
constexpr double kSuppressionLevel = 0.01;

struct Options {
  std::string out_dir;
  std::string data_dir;
  std::uint64_t seed = 1;
  std::optional<double> tol;

  std::vector<double> phis;
  std::string fixtures;
  std::vector<std::string> codes;
  int random_ancillas = 20;
  std::string system;

  int n_data = 0;
  int m_max = 0;
  int nspins = 0;

  std::string code_name;
  std::string emit;

  std::string initial;
  bool corrected = true;
  bool uncorrected = false;
  double threshold = 0.05;
  bool no_apodize = false;
};

std::vector<double> default_phis() {
  const double pi = std::numbers::pi;
  return {0.0, pi / 7, pi / 2, pi};
}

fs::path data_dir(const Options& o) { return o.data_dir.empty() ? default_data_dir() : fs::path(o.data_dir); }

fs::path out_dir(const Options& o) {
  if (!o.out_dir.empty()) return o.out_dir;
  if (const char* env = std::getenv("ZZCODE_OUT_DIR"); env != nullptr && *env != '\0') return env;
  return ".";
}

Tolerances tolerances(const Options& o) {
  Tolerances t;
  if (o.tol) t.operator_equality = *o.tol;
  return t;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void write_report(const fs::path& path, json report, const Tolerances& tol, std::ostream& out) {
  report["schema"] = kSchemaVersion;
  report["tolerances"] = to_json(tol);
  write_text_atomic(path, dump(report));
  out << "wrote " << path.string() << "\n";
}

int verify_table_cmd(const Options& o, std::ostream& out, std::ostream& err) {
  const fs::path fixtures = o.fixtures.empty() ? data_dir(o) / "table_fixture.txt" : fs::path(o.fixtures);
  if (!fs::exists(fixtures)) throw MissingFixture("table fixture not found: " + fixtures.string());
  std::vector<TableRow> rows;
  try {
    rows = load_table_fixture(fixtures);
  } catch (const std::exception& e) {
    throw MissingFixture(std::string("unreadable table fixture: ") + e.what());
  }
  const Tolerances tol = tolerances(o);
  const std::vector<double> phis = o.phis.empty() ? default_phis() : o.phis;
  const TableReport report = verify_table(rows, phis, tol.operator_equality);
  json j = to_json(report);
  j["phis"] = phis;
  write_report(out_dir(o) / "verify_table.json", std::move(j), tol, out);
  if (!report.missing_rows.empty()) {
    for (const std::string& r : report.missing_rows) err << "missing fixture row " << r << "\n";
    return kExitMissingFixtures;
  }
  for (const RowCheck& r : report.rows) {
    if (!r.pass) err << "row " << r.row << " failed\n";
  }
  out << "table: " << (report.pass ? "pass" : "FAIL") << "\n";
  return report.pass ? kExitOk : kExitCheckFailed;
}

int verify_codes_cmd(const Options& o, std::ostream& out, std::ostream& err) {
  std::vector<CodeId> ids;
  for (const std::string& name : o.codes) ids.push_back(parse_code_id(name));
  if (ids.empty()) ids.assign(std::begin(kAllCodes), std::end(kAllCodes));
  const Tolerances tol = tolerances(o);
  const std::vector<double> phis = o.phis.empty() ? default_phis() : o.phis;
  json j = check_codes(ids, phis, o.random_ancillas, o.seed, tol);
  j["phis"] = phis;
  j["seed"] = o.seed;
  const bool pass = j["pass"].get<bool>();
  for (const json& c : j["codes"]) {
    if (!c["pass"].get<bool>()) err << "code " << c["code"].get<std::string>() << " failed\n";
  }
  write_report(out_dir(o) / "verify_codes.json", std::move(j), tol, out);
  out << "codes: " << (pass ? "pass" : "FAIL") << "\n";
  return pass ? kExitOk : kExitCheckFailed;
}

int verify_pulses_cmd(const Options& o, std::ostream& out, std::ostream& err) {
  const fs::path system = o.system.empty() ? data_dir(o) / "alanine.json" : fs::path(o.system);
  const Tolerances tol = tolerances(o);
  const std::vector<double> phis = o.phis.empty() ? default_phis() : o.phis;
  json j = check_pulses(system, phis, tol);
  j["phis"] = phis;
  const bool pass = j["pass"].get<bool>();
  if (!pass) err << "pulse-level checks failed\n";
  write_report(out_dir(o) / "verify_pulses.json", std::move(j), tol, out);
  out << "pulses: " << (pass ? "pass" : "FAIL") << "\n";
  return pass ? kExitOk : kExitCheckFailed;
}

int capacity_cmd(const Options& o, std::ostream& out) {
  json j = capacity_report(o.n_data, o.m_max, o.nspins);
  j["schema"] = kSchemaVersion;
  out << dump(j);
  return kExitOk;
}

json code_record(const CodeSpec& c) {
  auto one_based = [](const std::vector<int>& spins) {
    json a = json::array();
    for (int s : spins) a.push_back(s + 1);
    return a;
  };
  json errors = json::array();
  for (const PauliString& p : c.declared_errors) errors.push_back(p.label_string());
  json probes = json::array();
  for (const PauliString& p : c.failing_probes) probes.push_back(p.label_string());
  return {{"schema", kSchemaVersion},
          {"code", c.name},
          {"nspins", c.nspins},
          {"data_spins", one_based(c.data_spins)},
          {"ancilla_spins", one_based(c.ancilla_spins)},
          {"required_ancilla_state",
           c.required_ancilla_state == AncillaRequirement::arbitrary ? "arbitrary" : "pure_zero"},
          {"encoder", circuit_to_json(c.encoder)},
          {"decoder", circuit_to_json(c.decoder)},
          {"correction", circuit_to_json(c.correction)},
          {"declared_errors", errors},
          {"failing_probes", probes}};
}

int code_build_cmd(const Options& o, std::ostream& out) {
  const CodeSpec code = build_code(parse_code_id(o.code_name));
  const std::string text = dump(code_record(code));
  if (o.emit.empty()) {
    out << text;
  } else {
    fs::path path(o.emit);
    if (path.is_relative() && !o.out_dir.empty()) path = fs::path(o.out_dir) / path;
    write_text_atomic(path, text);
    out << "wrote " << path.string() << "\n";
  }
  return kExitOk;
}

int experiment_cmd(const Options& o, std::ostream& out) {
  const fs::path system = o.system.empty() ? data_dir(o) / "alanine.json" : fs::path(o.system);
  if (!fs::exists(system)) throw MissingFixture("spin system file not found: " + system.string());
  const SpinSystem sys = load_spin_system(system);
  ExperimentConfig config;
  config.initial = parse_initial_state(o.initial);
  config.corrected = !o.uncorrected;
  config.apodize = !o.no_apodize;
  ExperimentResult r = run_2d_experiment(sys, config);
  if (o.threshold != 0.05) r.peaks = find_peaks(r.spectrum, o.threshold);

  double main_peak = 0.0;
  for (const Peak& p : find_peaks(r.spectrum, kSuppressionLevel)) main_peak = std::max(main_peak, p.amplitude);
  json offending = json::array();
  for (const Peak& p : find_peaks(r.spectrum, kSuppressionLevel)) {
    if (std::abs(p.f1_hz) > kCrossBandHz && p.amplitude > kSuppressionLevel * main_peak) {
      offending.push_back({{"f1_hz", p.f1_hz}, {"f2_hz", p.f2_hz}, {"relative", p.amplitude / main_peak}});
    }
  }

  const std::string tag = initial_state_name(config.initial) + (config.corrected ? "_corrected" : "_uncorrected");
  const fs::path dir = out_dir(o);
  write_spectrum_csv(r.spectrum, dir / ("spectrum_" + tag + ".csv"));
  write_spectrum_csv(r.slice, dir / ("slice_" + tag + ".csv"));
  const json peaks = {{"schema", kSchemaVersion},
                      {"initial", initial_state_name(config.initial)},
                      {"corrected", config.corrected},
                      {"threshold", o.threshold},
                      {"peaks", to_json(r.peaks)},
                      {"slice_phase", doublet_phase_name(r.slice_phase)},
                      {"cross_fraction", r.cross_fraction},
                      {"effective_tau_ratio", r.effective_tau_ratio},
                      {"suppression",
                       {{"band_hz", kCrossBandHz},
                        {"level", kSuppressionLevel},
                        {"offending_peaks", offending},
                        {"suppressed", offending.empty()}}},
                      {"tolerances", to_json(tolerances(o))}};
  write_text_atomic(dir / ("peaks_" + tag + ".json"), dump(peaks));
  out << "wrote spectrum_" << tag << ".csv, slice_" << tag << ".csv, peaks_" << tag << ".json to "
      << dir.string() << "\n";
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Coherent ZZ error correction: code verification, capacity counting and 2D NMR simulation"};
  app.name("zzcode");
  app.require_subcommand(1);
  app.add_option("--out", o.out_dir, "Output directory (default: $ZZCODE_OUT_DIR or .)");
  app.add_option("--data-dir", o.data_dir, "Directory with alanine.json and table_fixture.txt");
  app.add_option("--seed", o.seed, "Random seed")->capture_default_str();
  app.add_option("--tol", o.tol, "Operator-equality tolerance override");

  CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->require_subcommand(1);
  CLI::App* v_table = verify->add_subcommand("table", "Check the transformation table fixture");
  v_table->add_option("--phi", o.phis, "Comma-separated error angles in radians")->delimiter(',');
  v_table->add_option("--fixtures", o.fixtures, "Table fixture file");
  CLI::App* v_codes = verify->add_subcommand("codes", "Check code inversion, correctability and recovery");
  v_codes->add_option("--code", o.codes, "Code name (repeatable; default: all)")
      ->check(CLI::IsMember({"fig1", "fig3", "fig4", "fig5", "first6"}));
  v_codes->add_option("--random-ancilla", o.random_ancillas, "Random ancilla states for arbitrary-ancilla codes")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  v_codes->add_option("--phi", o.phis, "Comma-separated error angles in radians")->delimiter(',');
  CLI::App* v_pulses = verify->add_subcommand("pulses", "Check pulse sequences against the gate circuits");
  v_pulses->add_option("--system", o.system, "Spin system JSON");
  v_pulses->add_option("--phi", o.phis, "Comma-separated error angles in radians")->delimiter(',');

  CLI::App* capacity = app.add_subcommand("capacity", "Minimal ancilla count and ZZ error census");
  capacity->add_option("n_data", o.n_data, "Data spins")->required()->check(CLI::PositiveNumber);
  capacity->add_option("m_max", o.m_max, "Maximum error order")->required()->check(CLI::PositiveNumber);
  capacity->add_option("--nspins", o.nspins, "Count errors on this many spins instead");

  CLI::App* code = app.add_subcommand("code", "Code circuits");
  code->require_subcommand(1);
  CLI::App* build = code->add_subcommand("build", "Emit encoder, decoder and correction records");
  build->add_option("name", o.code_name, "Code name")
      ->required()
      ->check(CLI::IsMember({"fig1", "fig3", "fig4", "fig5", "first6"}));
  build->add_option("--emit", o.emit, "Output JSON file (default: stdout)");

  CLI::App* experiment = app.add_subcommand("experiment", "Simulate a 2D spectrum on alanine");
  experiment->add_option("initial", o.initial, "Initial state")->required()->check(CLI::IsMember({"sx1", "sx1sz2"}));
  CLI::Option* corr = experiment->add_flag("--corrected", o.corrected, "Run with the code (default)");
  CLI::Option* uncorr = experiment->add_flag("--uncorrected", o.uncorrected, "Run the bare coupling evolution");
  corr->excludes(uncorr);
  experiment->add_option("--threshold", o.threshold, "Peak threshold relative to the main peak")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  experiment->add_flag("--no-apodize", o.no_apodize, "Disable T2 line broadening");
  experiment->add_option("--system", o.system, "Spin system JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code_ = app.exit(e, out, err);
    return code_ == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*v_table) return verify_table_cmd(o, out, err);
    if (*v_codes) return verify_codes_cmd(o, out, err);
    if (*v_pulses) return verify_pulses_cmd(o, out, err);
    if (*capacity) return capacity_cmd(o, out);
    if (*build) return code_build_cmd(o, out);
    if (*experiment) return experiment_cmd(o, out);
  } catch (const MissingFixture& e) {
    err << "error: " << e.what() << "\n";
    return kExitMissingFixtures;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace zzcode::cli
