// Copyright 2026 The sdcmask Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sdcmask/stats.hpp"

namespace sdcmask {

/// A CSV table held as raw cell text.
///
/// Every cell keeps the exact bytes it had in the file (quotes included), so
/// columns that are never touched are written back byte for byte. Numeric
/// access parses on demand; replacing a column renders its values with 17
/// significant digits.
class Dataset {
 public:
  Dataset() = default;
  /// Throws MalformedHeader on empty or duplicate names.
  explicit Dataset(std::vector<std::string> raw_header);

  [[nodiscard]] std::size_t num_columns() const noexcept {
    return header_.size();
  }
  [[nodiscard]] std::size_t num_rows() const noexcept { return rows_; }

  /// Unquoted column names in file order.
  [[nodiscard]] const std::vector<std::string>& names() const noexcept {
    return names_;
  }
  [[nodiscard]] std::size_t column_index(std::string_view name) const;

  /// Appends one record of raw fields. Throws RaggedRows on a width mismatch.
  void add_row(std::vector<std::string> raw_fields);

  [[nodiscard]] const std::string& raw_cell(std::size_t row,
                                            std::size_t column) const {
    return cells_[column][row];
  }

  /// Strictly parses a column as finite reals. Throws ColumnNotFound,
  /// ParseError (data row and column in the message, 1-based row in
  /// Error::index()) or EmptyColumn for a dataset with no rows.
  [[nodiscard]] ColumnVector numeric_column(std::string_view name) const;

  /// Replaces the cells of `name` with the rendered values.
  void set_numeric_column(std::string_view name, std::span<const double> values);

  /// Appends a new column. Throws MalformedHeader on a duplicate name and
  /// RaggedRows on a length mismatch (any length is fine for the first one).
  void add_numeric_column(std::string name, std::span<const double> values);

  [[nodiscard]] std::string to_csv() const;

 private:
  std::vector<std::string> header_;  // raw header fields
  std::vector<std::string> names_;
  std::vector<std::vector<std::string>> cells_;  // column-major
  std::size_t rows_ = 0;
};

/// 17 significant digits, as "%.17g"; parses back to the same double.
[[nodiscard]] std::string format_real(double v);

/// Parses RFC 4180 text: comma delimiter, double-quote quoting with ""
/// escapes, CRLF or LF records, optional trailing newline.
[[nodiscard]] Dataset parse_csv(std::string_view text);

/// Throws FileNotFound, MalformedHeader, ParseError, RaggedRows.
[[nodiscard]] Dataset load_csv(const std::string& path);

/// Writes atomically (temp file + rename). Throws IoError.
void save_csv(const Dataset& dataset, const std::string& path);

[[nodiscard]] std::string read_file(const std::string& path);

/// Writes all files or none: every file goes to a sibling temp file first
/// and the renames happen only after all writes succeeded. Throws IoError.
void write_files_atomic(
    std::span<const std::pair<std::string, std::string>> path_and_content);

}  // namespace sdcmask
