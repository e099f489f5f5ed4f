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
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "zzcode/pauli.hpp"

namespace zzcode {

enum class TrigFactor { none, cos, sin };

/** coefficient * label * {1, cos(phi), sin(phi)} */
struct TableTerm {
  double coefficient = 0.0;
  std::string label;
  TrigFactor factor = TrigFactor::none;
};

enum class TableColumn { initial, encoded, decoded, corrected };
inline constexpr TableColumn kTableColumns[] = {TableColumn::initial, TableColumn::encoded,
                                                TableColumn::decoded, TableColumn::corrected};
std::string column_name(TableColumn c);

/** Recorded transcription defect of one cell. */
enum class KnownIssue { none, sign, term };

struct TableRow {
  std::string name;
  std::vector<TableTerm> cells[4];
  KnownIssue issues[4] = {KnownIssue::none, KnownIssue::none, KnownIssue::none, KnownIssue::none};
  int line = 0;
};

/**
 * Parse the fixture format:
 *
 *   row <name>
 *   initial   +0.5 XII +0.5 XIZ
 *   decoded   +0.5 XII +0.5 XIZ cos -0.5 IIY sin
 *   known encoded sign
 *   end
 *
 * Throws std::runtime_error with the line number on malformed input.
 */
std::vector<TableRow> parse_table_fixture(std::istream& in);
std::vector<TableRow> load_table_fixture(const std::filesystem::path& path);

/** Dense operator of a cell at the given angle. */
OperatorSum evaluate_cell(const std::vector<TableTerm>& terms, int nspins, double phi);

enum class CellStatus { match, transcription_issue, mismatch };
std::string status_name(CellStatus s);

struct CellCheck {
  TableColumn column = TableColumn::initial;
  double phi = 0.0;
  double max_deviation = 0.0;
  CellStatus status = CellStatus::match;
  /** For mismatches: what the difference looks like ("sign", "term", "other"). */
  std::string diagnosis;
};

struct RowCheck {
  std::string row;
  std::vector<CellCheck> cells;
  /** max over phi of |Tr_a[corrected] - B|. */
  double recovery_deviation = 0.0;
  bool pass = false;
};

struct TableReport {
  std::vector<RowCheck> rows;
  std::vector<std::string> missing_rows;
  double tolerance = 0.0;
  bool pass = false;
};

/** Names of the 16 rows in the order of the two-spin product-operator basis. */
std::vector<std::string> expected_table_rows();

/**
 * Compare every fixture cell against the fig1 pipeline at each angle.
 *
 * A mismatching cell counts as a transcription issue only if the fixture
 * annotates it and the dense oracle confirms the annotated defect: "sign"
 * requires the cell to equal minus the computed operator, "term" requires
 * the difference to live on at most two Pauli labels. The back-propagated
 * cell must also fail to reproduce the row's initial operator. Rows pass
 * when every cell matches or is a confirmed transcription issue and the
 * traced corrected state equals B_i.
 */
TableReport verify_table(const std::vector<TableRow>& rows, const std::vector<double>& phis,
                         double tol = 1e-10);

nlohmann::json to_json(const TableReport& report);

}  // namespace zzcode
