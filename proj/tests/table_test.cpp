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

#include <chrono>
#include <fstream>
#include <numbers>
#include <sstream>

#include <gtest/gtest.h>

#include "zzcode/table.hpp"

namespace zzcode {
namespace {

constexpr double kPi = std::numbers::pi;
const std::vector<double> kPhis{0.0, kPi / 7, kPi / 2, kPi};

std::string fixture_text() {
  std::ifstream in(std::string(ZZCODE_TEST_DATA_DIR) + "/table_fixture.txt");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<TableRow> parse(const std::string& text) {
  std::istringstream in(text);
  return parse_table_fixture(in);
}

// Replace the first occurrence of `from` after the header of row `row`.
std::string edit_row(std::string text, const std::string& row, const std::string& from, const std::string& to) {
  const std::size_t start = text.find("row " + row + "\n");
  const std::size_t at = text.find(from, start);
  text.replace(at, from.size(), to);
  return text;
}

const RowCheck& find_row(const TableReport& r, const std::string& name) {
  for (const RowCheck& row : r.rows) {
    if (row.row == name) return row;
  }
  throw std::runtime_error("row not found: " + name);
}

TEST(Table, FixtureHasAllSixteenRows) {
  const std::vector<TableRow> rows = parse(fixture_text());
  ASSERT_EQ(rows.size(), 16u);
  std::vector<std::string> names;
  for (const TableRow& r : rows) names.push_back(r.name);
  EXPECT_EQ(names, expected_table_rows());
}

TEST(Table, EveryRowReproducedAtEveryAngle) {
  const auto start = std::chrono::steady_clock::now();
  const TableReport report = verify_table(parse(fixture_text()), kPhis);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  EXPECT_TRUE(report.pass);
  EXPECT_TRUE(report.missing_rows.empty());
  ASSERT_EQ(report.rows.size(), 16u);
  int issues = 0;
  for (const RowCheck& r : report.rows) {
    EXPECT_TRUE(r.pass) << r.row;
    EXPECT_LT(r.recovery_deviation, 1e-10) << r.row;
    EXPECT_EQ(r.cells.size(), 16u);
    for (const CellCheck& c : r.cells) {
      EXPECT_NE(c.status, CellStatus::mismatch) << r.row << " " << column_name(c.column);
      issues += c.status == CellStatus::transcription_issue ? 1 : 0;
    }
  }
  EXPECT_GT(issues, 0);
  EXPECT_LT(seconds, 5.0);
}

TEST(Table, CorruptedCellFailsItsRowOnly) {
  const std::string bad = edit_row(fixture_text(), "ZI", "corrected +0.5", "corrected +0.7");
  const TableReport report = verify_table(parse(bad), kPhis);
  EXPECT_FALSE(report.pass);
  for (const RowCheck& r : report.rows) EXPECT_EQ(r.pass, r.row != "ZI") << r.row;
}

TEST(Table, AnnotationOnCorrectCellIsAMismatch) {
  const std::string bad = edit_row(fixture_text(), "II", "end", "known decoded sign\nend");
  const TableReport report = verify_table(parse(bad), kPhis);
  EXPECT_FALSE(find_row(report, "II").pass);
}

TEST(Table, UnannotatedSignFlipIsAMismatch) {
  const std::string bad = edit_row(fixture_text(), "XI", "known encoded sign\n", "");
  const TableReport report = verify_table(parse(bad), kPhis);
  const RowCheck& row = find_row(report, "XI");
  EXPECT_FALSE(row.pass);
  bool diagnosed = false;
  for (const CellCheck& c : row.cells) diagnosed = diagnosed || c.diagnosis == "sign";
  EXPECT_TRUE(diagnosed);
}

TEST(Table, WrongAnnotationKindIsAMismatch) {
  const std::string bad = edit_row(fixture_text(), "XI", "known encoded sign", "known encoded term");
  EXPECT_FALSE(find_row(verify_table(parse(bad), kPhis), "XI").pass);
}

TEST(Table, MissingRowIsReported) {
  std::string text = fixture_text();
  const std::size_t start = text.find("row ZZ\n");
  const std::size_t stop = text.find("end\n", start) + 4;
  text.erase(start, stop - start);
  const TableReport report = verify_table(parse(text), kPhis);
  EXPECT_FALSE(report.pass);
  EXPECT_EQ(report.missing_rows, std::vector<std::string>{"ZZ"});
}

TEST(Table, MalformedInputNamesTheLine) {
  EXPECT_THROW(parse("row XI\ninitial +0.5 XII bogus\nend\n"), std::runtime_error);
  EXPECT_THROW(parse("row XI\nsideways +0.5 XII\nend\n"), std::runtime_error);
  EXPECT_THROW(parse("row XI\ninitial +0.5 XII\n"), std::runtime_error);
  try {
    parse("\nrow XI\ninitial +0.5 XQI\nend\n");
    FAIL();
  } catch (const std::runtime_error& e) {
    EXPECT_NE(std::string(e.what()).find("3"), std::string::npos) << e.what();
  }
  EXPECT_THROW(load_table_fixture("/nonexistent/table.txt"), std::runtime_error);
}

TEST(Table, EvaluateCellAppliesTrigFactors) {
  const std::vector<TableTerm> terms{{0.5, "III", TrigFactor::none}, {0.5, "IIZ", TrigFactor::cos},
                                     {-0.5, "XIY", TrigFactor::sin}};
  const OperatorSum op = evaluate_cell(terms, 3, kPi / 3);
  EXPECT_DOUBLE_EQ(op.coefficient("III").real(), 0.5);
  EXPECT_NEAR(op.coefficient("IIZ").real(), 0.25, 1e-15);
  EXPECT_NEAR(op.coefficient("XIY").real(), -0.5 * std::sin(kPi / 3), 1e-15);
}

TEST(Table, ReportJsonListsRows) {
  const nlohmann::json j = to_json(verify_table(parse(fixture_text()), {0.0}));
  EXPECT_EQ(j["rows"].size(), 16u);
  EXPECT_TRUE(j["pass"].get<bool>());
}

}  // namespace
}  // namespace zzcode
