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

#include "sdcmask/dataset.hpp"

#include <unistd.h>

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <system_error>

#include "sdcmask/error.hpp"

namespace sdcmask {

namespace {

namespace fs = std::filesystem;

std::string unquote(std::string_view raw) {
  if (raw.size() < 2 || raw.front() != '"' || raw.back() != '"') {
    return std::string(raw);
  }
  std::string out;
  raw = raw.substr(1, raw.size() - 2);
  for (std::size_t i = 0; i < raw.size(); ++i) {
    out.push_back(raw[i]);
    if (raw[i] == '"' && i + 1 < raw.size() && raw[i + 1] == '"') ++i;
  }
  return out;
}

std::string quote_if_needed(std::string_view name) {
  if (name.find_first_of(",\"\r\n") == std::string_view::npos) {
    return std::string(name);
  }
  std::string out = "\"";
  for (char c : name) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

// Splits text into records of raw fields. Quoted fields may span lines.
std::vector<std::vector<std::string>> split_records(std::string_view text) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> fields;
  std::string field;
  bool in_quotes = false;
  std::size_t line = 1;

  auto end_field = [&] {
    fields.push_back(std::move(field));
    field.clear();
  };
  auto end_record = [&] {
    end_field();
    records.push_back(std::move(fields));
    fields.clear();
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (in_quotes) {
      field.push_back(c);
      if (c == '\n') ++line;
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          in_quotes = false;
        }
      }
      continue;
    }
    if (c == '"') {
      if (!field.empty()) {
        throw Error(Errc::kParseError,
                    "stray quote inside an unquoted field on line " +
                        std::to_string(line));
      }
      in_quotes = true;
      field.push_back(c);
    } else if (c == ',') {
      end_field();
    } else if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') {
      // CR of a CRLF terminator
    } else if (c == '\n') {
      end_record();
      ++line;
    } else {
      if (!field.empty() && field.front() == '"') {
        throw Error(Errc::kParseError,
                    "text after a closing quote on line " +
                        std::to_string(line));
      }
      field.push_back(c);
    }
  }
  if (in_quotes) {
    throw Error(Errc::kParseError, "unterminated quoted field");
  }
  if (!field.empty() || !fields.empty()) end_record();
  return records;
}

std::optional<double> parse_real(std::string_view text) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || !std::isfinite(v)) return std::nullopt;
  return v;
}

fs::path temp_sibling(const fs::path& target, std::size_t k) {
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(k);
  return tmp;
}

}  // namespace

Dataset::Dataset(std::vector<std::string> raw_header)
    : header_(std::move(raw_header)) {
  for (const auto& raw : header_) {
    std::string name = unquote(raw);
    if (name.empty()) throw Error(Errc::kMalformedHeader, "empty column name");
    for (const auto& existing : names_) {
      if (existing == name) {
        throw Error(Errc::kMalformedHeader, "duplicate column name: " + name);
      }
    }
    names_.push_back(std::move(name));
  }
  cells_.resize(header_.size());
}

std::size_t Dataset::column_index(std::string_view name) const {
  for (std::size_t c = 0; c < names_.size(); ++c) {
    if (names_[c] == name) return c;
  }
  throw Error(Errc::kColumnNotFound, "no column named " + std::string(name));
}

void Dataset::add_row(std::vector<std::string> raw_fields) {
  if (raw_fields.size() != header_.size()) {
    throw Error(Errc::kRaggedRows,
                "data row " + std::to_string(rows_ + 1) + " has " +
                    std::to_string(raw_fields.size()) + " fields, expected " +
                    std::to_string(header_.size()),
                rows_ + 1);
  }
  for (std::size_t c = 0; c < raw_fields.size(); ++c) {
    cells_[c].push_back(std::move(raw_fields[c]));
  }
  ++rows_;
}

ColumnVector Dataset::numeric_column(std::string_view name) const {
  const std::size_t c = column_index(name);
  if (rows_ == 0) {
    throw Error(Errc::kEmptyColumn, "column " + std::string(name) + " is empty");
  }
  std::vector<double> values(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    const std::string text = unquote(cells_[c][r]);
    const auto v = parse_real(text);
    if (!v) {
      throw Error(Errc::kParseError,
                  "row " + std::to_string(r + 1) + ", column " +
                      std::string(name) + ": not a finite number: \"" + text +
                      "\"",
                  r + 1);
    }
    values[r] = *v;
  }
  return ColumnVector(std::move(values));
}

void Dataset::set_numeric_column(std::string_view name,
                                 std::span<const double> values) {
  const std::size_t c = column_index(name);
  if (values.size() != rows_) {
    throw Error(Errc::kLengthMismatch,
                "replacement column has the wrong length");
  }
  for (std::size_t r = 0; r < rows_; ++r) cells_[c][r] = format_real(values[r]);
}

void Dataset::add_numeric_column(std::string name,
                                 std::span<const double> values) {
  for (const auto& existing : names_) {
    if (existing == name) {
      throw Error(Errc::kMalformedHeader, "duplicate column name: " + name);
    }
  }
  if (header_.empty()) {
    rows_ = values.size();
  } else if (values.size() != rows_) {
    throw Error(Errc::kRaggedRows, "new column has the wrong length");
  }
  header_.push_back(quote_if_needed(name));
  names_.push_back(std::move(name));
  auto& column = cells_.emplace_back();
  column.reserve(values.size());
  for (double v : values) column.push_back(format_real(v));
}

std::string Dataset::to_csv() const {
  std::string out;
  auto append_record = [&](auto&& field_at) {
    for (std::size_t c = 0; c < header_.size(); ++c) {
      if (c > 0) out.push_back(',');
      out += field_at(c);
    }
    out.push_back('\n');
  };
  append_record([&](std::size_t c) -> const std::string& { return header_[c]; });
  for (std::size_t r = 0; r < rows_; ++r) {
    append_record(
        [&](std::size_t c) -> const std::string& { return cells_[c][r]; });
  }
  return out;
}

std::string format_real(double v) {
  char buf[64];
  const auto [ptr, ec] =
      std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, ptr);
}

Dataset parse_csv(std::string_view text) {
  auto records = split_records(text);
  if (records.empty()) throw Error(Errc::kMalformedHeader, "file has no header");
  Dataset dataset(std::move(records.front()));
  for (std::size_t r = 1; r < records.size(); ++r) {
    dataset.add_row(std::move(records[r]));
  }
  return dataset;
}

std::string read_file(const std::string& path) {
  std::error_code ec;
  if (!fs::is_regular_file(path, ec)) {
    throw Error(Errc::kFileNotFound, "cannot open " + path);
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::kFileNotFound, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw Error(Errc::kIoError, "failed reading " + path);
  return std::move(buffer).str();
}

Dataset load_csv(const std::string& path) { return parse_csv(read_file(path)); }

void save_csv(const Dataset& dataset, const std::string& path) {
  const std::pair<std::string, std::string> file{path, dataset.to_csv()};
  write_files_atomic({&file, 1});
}

void write_files_atomic(
    std::span<const std::pair<std::string, std::string>> path_and_content) {
  std::vector<fs::path> temps;
  auto discard = [&] {
    std::error_code ignored;
    for (const auto& t : temps) fs::remove(t, ignored);
  };
  for (std::size_t k = 0; k < path_and_content.size(); ++k) {
    const auto& [path, content] = path_and_content[k];
    const fs::path tmp = temp_sibling(path, k);
    temps.push_back(tmp);
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.close();
    if (!out) {
      discard();
      throw Error(Errc::kIoError, "cannot write " + path);
    }
  }
  for (std::size_t k = 0; k < temps.size(); ++k) {
    std::error_code ec;
    fs::rename(temps[k], path_and_content[k].first, ec);
    if (ec) {
      // Undo the renames already done so no partial set is left behind.
      std::error_code ignored;
      for (std::size_t j = 0; j < k; ++j) {
        fs::remove(path_and_content[j].first, ignored);
      }
      discard();
      throw Error(Errc::kIoError, "cannot create " + path_and_content[k].first +
                                      ": " + ec.message());
    }
  }
}

}  // namespace sdcmask
