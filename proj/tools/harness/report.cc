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

#include "harness/report.h"

#include <fmt/format.h>

#include <cmath>
#include <stdexcept>

namespace oneway::harness {

void Report::add_row(std::vector<Cell> row) {
    if (row.size() != columns.size()) {
        throw std::logic_error(fmt::format("report row has {} cells, expected {}", row.size(), columns.size()));
    }
    rows.push_back(std::move(row));
}

std::size_t Report::column(const std::string &name) const {
    for (std::size_t k = 0; k < columns.size(); k++) {
        if (columns[k] == name) {
            return k;
        }
    }
    throw std::out_of_range("no report column '" + name + "'");
}

std::string format_double(double value) {
    if (!std::isfinite(value)) {
        throw std::domain_error("non-finite value in report");
    }
    // Avoid "-0" so that signed zeros from rounding do not leak into files.
    if (value == 0) {
        value = 0;
    }
    return fmt::format("{}", value);
}

namespace {

nlohmann::ordered_json cell_json(const Cell &cell) {
    return std::visit(
        [](const auto &v) -> nlohmann::ordered_json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::monostate>) {
                return nullptr;
            } else if constexpr (std::is_same_v<T, double>) {
                // Parse the formatted text back so JSON and CSV carry the same value.
                return std::stod(format_double(v));
            } else {
                return v;
            }
        },
        cell);
}

std::string csv_quote(const std::string &s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string cell_csv(const Cell &cell) {
    return std::visit(
        [](const auto &v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::monostate>) {
                return "";
            } else if constexpr (std::is_same_v<T, bool>) {
                return v ? "true" : "false";
            } else if constexpr (std::is_same_v<T, std::int64_t>) {
                return fmt::format("{}", v);
            } else if constexpr (std::is_same_v<T, double>) {
                return format_double(v);
            } else {
                return csv_quote(v);
            }
        },
        cell);
}

}  // namespace

std::string to_json_text(const Report &report) {
    nlohmann::ordered_json doc;
    doc["meta"] = report.meta;
    doc["columns"] = report.columns;
    auto rows = nlohmann::ordered_json::array();
    for (const auto &row : report.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t k = 0; k < row.size(); k++) {
            obj[report.columns[k]] = cell_json(row[k]);
        }
        rows.push_back(std::move(obj));
    }
    doc["rows"] = std::move(rows);
    return doc.dump(2) + "\n";
}

std::string to_csv_text(const Report &report) {
    std::string out;
    for (std::size_t k = 0; k < report.columns.size(); k++) {
        if (k) out += ',';
        out += csv_quote(report.columns[k]);
    }
    out += '\n';
    for (const auto &row : report.rows) {
        for (std::size_t k = 0; k < row.size(); k++) {
            if (k) out += ',';
            out += cell_csv(row[k]);
        }
        out += '\n';
    }
    return out;
}

std::vector<std::vector<std::string>> parse_csv(const std::string &text) {
    std::vector<std::vector<std::string>> records;
    std::vector<std::string> record;
    std::string field;
    bool quoted = false;
    bool pending = false;
    for (std::size_t i = 0; i < text.size(); i++) {
        char c = text[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field += '"';
                    i++;
                } else {
                    quoted = false;
                }
            } else {
                field += c;
            }
            continue;
        }
        pending = true;
        if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            record.push_back(std::move(field));
            field.clear();
        } else if (c == '\n') {
            record.push_back(std::move(field));
            field.clear();
            records.push_back(std::move(record));
            record.clear();
            pending = false;
        } else if (c != '\r') {
            field += c;
        }
    }
    if (quoted) {
        throw std::invalid_argument("unterminated quoted CSV field");
    }
    if (pending) {
        record.push_back(std::move(field));
        records.push_back(std::move(record));
    }
    return records;
}

}  // namespace oneway::harness
