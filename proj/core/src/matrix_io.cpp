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

#include "bosim/matrix_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace bosim {

using nlohmann::json;

std::string hash_hex(uint64_t hash) {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string out = "0x";
    for (int shift = 60; shift >= 0; shift -= 4) {
        out.push_back(kDigits[(hash >> shift) & 0xfU]);
    }
    return out;
}

uint64_t parse_hash_hex(std::string_view text) {
    if (text.starts_with("0x") || text.starts_with("0X")) {
        text.remove_prefix(2);
    }
    uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value, 16);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
        throw std::invalid_argument("malformed matrix hash '" + std::string(text) + "'");
    }
    return value;
}

std::string matrix_to_json(const TransferMatrix &u) {
    const size_t m = u.modes();
    json re = json::array();
    json im = json::array();
    for (size_t r = 0; r < m; r++) {
        json re_row = json::array();
        json im_row = json::array();
        for (size_t c = 0; c < m; c++) {
            re_row.push_back(u(r, c).real());
            im_row.push_back(u(r, c).imag());
        }
        re.push_back(std::move(re_row));
        im.push_back(std::move(im_row));
    }
    json doc;
    doc["m"] = m;
    doc["re"] = std::move(re);
    doc["im"] = std::move(im);
    doc["fingerprint"] = hash_hex(fingerprint(u.elements));
    doc["version"] = std::string(kVersion);
    return doc.dump() + "\n";
}

TransferMatrix matrix_from_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw std::invalid_argument(std::string("matrix json: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("m") || !doc.contains("re") || !doc.contains("im")) {
        throw std::invalid_argument("matrix json: expected keys m, re, im");
    }
    if (!doc["m"].is_number_integer() || doc["m"].get<long long>() < 1) {
        throw std::invalid_argument("matrix json: m must be a positive integer");
    }
    const size_t m = doc["m"].get<size_t>();
    const json &re = doc["re"];
    const json &im = doc["im"];
    if (!re.is_array() || !im.is_array() || re.size() != m || im.size() != m) {
        throw std::invalid_argument("matrix json: re and im must each have m rows");
    }
    CMatrix elements(m, m);
    for (size_t r = 0; r < m; r++) {
        if (!re[r].is_array() || !im[r].is_array() || re[r].size() != m || im[r].size() != m) {
            throw std::invalid_argument("matrix json: row " + std::to_string(r + 1) + " does not have m entries");
        }
        for (size_t c = 0; c < m; c++) {
            if (!re[r][c].is_number() || !im[r][c].is_number()) {
                throw std::invalid_argument("matrix json: non-numeric entry");
            }
            elements(r, c) = cplx(re[r][c].get<double>(), im[r][c].get<double>());
        }
    }
    TransferMatrix u{std::move(elements), false};
    u.validate();
    const UnitarityReport report = unitarity_report(u.elements);
    u.unitary = report.max_offdiagonal <= kUnitarityTolerance && report.max_diagonal_deviation <= kUnitarityTolerance;
    return u;
}

std::string read_text_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::invalid_argument("cannot open '" + path.string() + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::filesystem::path &path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::invalid_argument("cannot write '" + path.string() + "'");
    }
    out << text;
}

void write_matrix(const std::filesystem::path &path, const TransferMatrix &u) {
    write_text_file(path, matrix_to_json(u));
}

TransferMatrix read_matrix(const std::filesystem::path &path) { return matrix_from_json(read_text_file(path)); }

}  // namespace bosim
