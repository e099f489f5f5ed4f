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

#include "zzcode/table.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "zzcode/circuit.hpp"
#include "zzcode/codes.hpp"
#include "zzcode/pipeline.hpp"

namespace zzcode {
namespace {

constexpr int kTableSpins = 3;

int column_index(TableColumn c) { return static_cast<int>(c); }

std::optional<TableColumn> parse_column(const std::string& s) {
  if (s == "initial") return TableColumn::initial;
  if (s == "encoded") return TableColumn::encoded;
  if (s == "decoded") return TableColumn::decoded;
  if (s == "corrected") return TableColumn::corrected;
  return std::nullopt;
}

[[noreturn]] void fail(int line, const std::string& what) {
  throw std::runtime_error("table fixture line " + std::to_string(line) + ": " + what);
}

bool is_number(const std::string& s) {
  if (s.empty()) return false;
  char* end = nullptr;
  std::strtod(s.c_str(), &end);
  return end == s.c_str() + s.size();
}

std::vector<TableTerm> parse_terms(std::istringstream& in, int line) {
  std::vector<TableTerm> terms;
  std::string tok;
  while (in >> tok) {
    if (tok == "cos" || tok == "sin") {
      if (terms.empty() || terms.back().factor != TrigFactor::none || terms.back().label.empty()) {
        fail(line, "trig factor '" + tok + "' without a term");
      }
      terms.back().factor = tok == "cos" ? TrigFactor::cos : TrigFactor::sin;
    } else if (is_number(tok)) {
      if (!terms.empty() && terms.back().label.empty()) fail(line, "coefficient without a label");
      terms.push_back({std::stod(tok), "", TrigFactor::none});
    } else {
      if (terms.empty() || !terms.back().label.empty()) fail(line, "label '" + tok + "' without a coefficient");
      if (static_cast<int>(tok.size()) != kTableSpins) fail(line, "label '" + tok + "' is not three spins wide");
      for (char c : tok) {
        if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') fail(line, "bad Pauli label '" + tok + "'");
      }
      terms.back().label = tok;
    }
  }
  if (!terms.empty() && terms.back().label.empty()) fail(line, "dangling coefficient");
  return terms;
}

std::string diagnose(const DenseMatrix& fixture, const DenseMatrix& computed, double tol) {
  if (max_abs_diff(fixture, -computed) < tol) return "sign";
  if (from_dense(fixture - computed).size() <= 2) return "term";
  return "other";
}

std::string issue_name(KnownIssue k) {
  switch (k) {
    case KnownIssue::sign: return "sign";
    case KnownIssue::term: return "term";
    case KnownIssue::none: break;
  }
  return "none";
}

}  // namespace

std::string column_name(TableColumn c) {
  switch (c) {
    case TableColumn::initial: return "initial";
    case TableColumn::encoded: return "encoded";
    case TableColumn::decoded: return "decoded";
    case TableColumn::corrected: return "corrected";
  }
  return "?";
}

std::string status_name(CellStatus s) {
  switch (s) {
    case CellStatus::match: return "match";
    case CellStatus::transcription_issue: return "transcription_issue";
    case CellStatus::mismatch: return "mismatch";
  }
  return "?";
}

std::vector<TableRow> parse_table_fixture(std::istream& in) {
  std::vector<TableRow> rows;
  std::optional<TableRow> current;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "row") {
      if (current) fail(line, "row '" + current->name + "' is missing 'end'");
      current.emplace();
      if (!(ls >> current->name)) fail(line, "row without a name");
      current->line = line;
    } else if (head == "end") {
      if (!current) fail(line, "'end' outside a row");
      rows.push_back(std::move(*current));
      current.reset();
    } else if (head == "known") {
      if (!current) fail(line, "'known' outside a row");
      std::string col, kind;
      ls >> col >> kind;
      const auto c = parse_column(col);
      if (!c) fail(line, "unknown column '" + col + "'");
      if (kind == "sign") {
        current->issues[column_index(*c)] = KnownIssue::sign;
      } else if (kind == "term") {
        current->issues[column_index(*c)] = KnownIssue::term;
      } else {
        fail(line, "unknown issue kind '" + kind + "'");
      }
    } else if (const auto c = parse_column(head)) {
      if (!current) fail(line, "cell outside a row");
      current->cells[column_index(*c)] = parse_terms(ls, line);
    } else {
      fail(line, "unexpected keyword '" + head + "'");
    }
  }
  if (current) fail(line, "row '" + current->name + "' is missing 'end'");
  return rows;
}

std::vector<TableRow> load_table_fixture(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open table fixture " + path.string());
  return parse_table_fixture(in);
}

OperatorSum evaluate_cell(const std::vector<TableTerm>& terms, int nspins, double phi) {
  OperatorSum out(nspins);
  for (const TableTerm& t : terms) {
    double w = t.coefficient;
    if (t.factor == TrigFactor::cos) w *= std::cos(phi);
    if (t.factor == TrigFactor::sin) w *= std::sin(phi);
    out.add(t.label, w);
  }
  return out;
}

std::vector<std::string> expected_table_rows() {
  return {"II", "XI", "YI", "ZI", "IX", "XX", "YX", "ZX", "IY", "XY", "YY", "ZY", "IZ", "XZ", "YZ", "ZZ"};
}

TableReport verify_table(const std::vector<TableRow>& rows, const std::vector<double>& phis, double tol) {
  TableReport report;
  report.tolerance = tol;
  for (const std::string& name : expected_table_rows()) {
    bool found = false;
    for (const TableRow& r : rows) found = found || r.name == name;
    if (!found) report.missing_rows.push_back(name);
  }

  const CodeSpec code = build_code(CodeId::fig1);
  const DenseMatrix enc = circuit_unitary(code.encoder);
  const DenseMatrix dec = circuit_unitary(code.decoder);
  const DenseMatrix cor = circuit_unitary(code.correction);
  const OperatorSum anc = ancilla_ground(1);

  bool all_pass = report.missing_rows.empty();
  for (const TableRow& row : rows) {
    RowCheck rc;
    rc.row = row.name;
    bool row_pass = true;
    OperatorSum b(2);
    try {
      b.add(row.name, 1.0);
    } catch (const std::exception&) {
      rc.pass = false;
      report.rows.push_back(rc);
      all_pass = false;
      continue;
    }
    const DenseMatrix b_dense = to_dense(b);
    for (double phi : phis) {
      const DenseMatrix err = coherent_error(PauliString("ZZI"), phi);
      const PipelineResult r = run_pipeline_unitaries(code, enc, dec, cor, b, anc, err);
      // Stage maps from the initial operator, for back-propagating cells.
      const DenseMatrix to_stage[4] = {DenseMatrix::Identity(8, 8), enc, dec * err * enc, cor * dec * err * enc};
      const DenseMatrix* computed[4] = {&r.initial, &r.encoded, &r.decoded, &r.corrected};
      for (TableColumn col : kTableColumns) {
        const int ci = column_index(col);
        CellCheck cc;
        cc.column = col;
        cc.phi = phi;
        const DenseMatrix fixture = to_dense(evaluate_cell(row.cells[ci], kTableSpins, phi));
        cc.max_deviation = max_abs_diff(fixture, *computed[ci]);
        if (cc.max_deviation < tol) {
          cc.status = row.issues[ci] == KnownIssue::none ? CellStatus::match : CellStatus::mismatch;
          if (row.issues[ci] != KnownIssue::none) cc.diagnosis = "annotation on a matching cell";
        } else {
          cc.diagnosis = diagnose(fixture, *computed[ci], tol);
          const DenseMatrix back = to_stage[ci].adjoint() * fixture * to_stage[ci];
          const bool back_differs = max_abs_diff(back, r.initial) >= tol;
          const bool confirmed = row.issues[ci] != KnownIssue::none && cc.diagnosis == issue_name(row.issues[ci]);
          cc.status = confirmed && back_differs ? CellStatus::transcription_issue : CellStatus::mismatch;
        }
        row_pass = row_pass && cc.status != CellStatus::mismatch;
        rc.cells.push_back(cc);
      }
      rc.recovery_deviation =
          std::max(rc.recovery_deviation, max_abs_diff(to_dense(r.data_state), b_dense));
    }
    rc.pass = row_pass && rc.recovery_deviation < tol;
    all_pass = all_pass && rc.pass;
    report.rows.push_back(std::move(rc));
  }
  report.pass = all_pass;
  return report;
}

nlohmann::json to_json(const TableReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const RowCheck& rc : report.rows) {
    nlohmann::json cells = nlohmann::json::array();
    double worst = 0.0;
    for (const CellCheck& cc : rc.cells) {
      nlohmann::json c = {{"column", column_name(cc.column)},
                          {"phi", cc.phi},
                          {"max_deviation", cc.max_deviation},
                          {"status", status_name(cc.status)}};
      if (!cc.diagnosis.empty()) c["diagnosis"] = cc.diagnosis;
      if (cc.status == CellStatus::match) worst = std::max(worst, cc.max_deviation);
      cells.push_back(std::move(c));
    }
    rows.push_back({{"code", "fig1"},
                    {"row", rc.row},
                    {"max_deviation", worst},
                    {"recovery_deviation", rc.recovery_deviation},
                    {"pass", rc.pass},
                    {"cells", cells}});
  }
  return {{"tolerance", report.tolerance},
          {"missing_rows", report.missing_rows},
          {"pass", report.pass},
          {"rows", rows}};
}

}  // namespace zzcode
