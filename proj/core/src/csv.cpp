// Copyright 2026 The bosim Authors
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

#include "bosim/csv.hpp"

#include <charconv>
#include <cstdio>
#include <stdexcept>

#include "bosim/matrix_io.hpp"

namespace bosim {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

bool parse_row(std::string_view line, std::vector<double> &row) {
    row.clear();
    size_t start = 0;
    while (true) {
        const size_t comma = line.find(',', start);
        std::string_view field = trim(line.substr(start, comma == std::string_view::npos ? line.size() - start
                                                                                         : comma - start));
        double value = 0.0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
            return false;
        }
        row.push_back(value);
        if (comma == std::string_view::npos) {
            return true;
        }
        start = comma + 1;
    }
}

}  // namespace

NumericTable parse_csv_table(std::string_view text) {
    NumericTable table;
    std::vector<double> row;
    size_t line_no = 0;
    bool first_content = true;
    size_t pos = 0;
    while (pos <= text.size()) {
        const size_t nl = text.find('\n', pos);
        std::string_view line = trim(text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos));
        pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
        line_no++;
        if (line.empty() || line.front() == '#') {
            continue;
        }
        if (!parse_row(line, row)) {
            if (first_content) {
                first_content = false;
                continue;
            }
            throw std::invalid_argument("csv line " + std::to_string(line_no) + ": non-numeric field");
        }
        first_content = false;
        if (!table.empty() && row.size() != table.front().size()) {
            throw std::invalid_argument("csv line " + std::to_string(line_no) + ": ragged row");
        }
        table.push_back(row);
    }
    return table;
}

NumericTable read_csv_table(const std::filesystem::path &path) { return parse_csv_table(read_text_file(path)); }

std::vector<double> read_csv_vector(const std::filesystem::path &path) {
    const NumericTable table = read_csv_table(path);
    std::vector<double> out;
    if (table.size() == 1) {
        return table.front();
    }
    for (const auto &row : table) {
        if (row.size() != 1) {
            throw std::invalid_argument("csv '" + path.string() + "': expected a single column");
        }
        out.push_back(row.front());
    }
    return out;
}

std::string format_double(double x) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    (void)ec;
    return std::string(buf, ptr);
}

std::string format_csv_table(const NumericTable &table) {
    std::string out;
    for (const auto &row : table) {
        for (size_t k = 0; k < row.size(); k++) {
            if (k > 0) {
                out.push_back(',');
            }
            out += format_double(row[k]);
        }
        out.push_back('\n');
    }
    return out;
}

std::string pmf_to_csv(const Pmf &pmf) {
    std::string out = "outcome_modes,probability\n";
    for (size_t i = 0; i < pmf.size(); i++) {
        auto o = pmf.outcome(i);
        for (size_t k = 0; k < o.size(); k++) {
            if (k > 0) {
                out.push_back(' ');
            }
            out += std::to_string(o[k] + 1);
        }
        out.push_back(',');
        out += format_double(pmf.probability(i));
        out.push_back('\n');
    }
    return out;
}

}  // namespace bosim
