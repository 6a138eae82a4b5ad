// Copyright 2026 The Oneway Authors
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

#ifndef ONEWAY_HARNESS_REPORT_H
#define ONEWAY_HARNESS_REPORT_H

#include <cstdint>
#include <nlohmann/json.hpp>
#include <string>
#include <variant>
#include <vector>

namespace oneway::harness {

/// A report cell. monostate is "not applicable": null in JSON, empty in CSV.
using Cell = std::variant<std::monostate, bool, std::int64_t, double, std::string>;

/// Tabular report with a metadata block. Column order is fixed by the
/// command; every row carries exactly one cell per column.
struct Report {
    nlohmann::ordered_json meta = nlohmann::ordered_json::object();
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    explicit Report(std::vector<std::string> cols) : columns(std::move(cols)) {}

    /// Throws std::logic_error on a width mismatch.
    void add_row(std::vector<Cell> row);
    std::size_t column(const std::string &name) const;
};

/// {"meta": ..., "columns": [...], "rows": [{column: value, ...}, ...]},
/// two-space indented with a trailing newline.
std::string to_json_text(const Report &report);

/// Header line then one line per row. Doubles use the shortest
/// representation that round-trips; strings are quoted only when needed.
std::string to_csv_text(const Report &report);

/// Splits CSV text into records of raw fields (RFC 4180 quoting).
std::vector<std::vector<std::string>> parse_csv(const std::string &text);

/// Shortest round-trip text for a double.
std::string format_double(double value);

}  // namespace oneway::harness

#endif  // ONEWAY_HARNESS_REPORT_H
