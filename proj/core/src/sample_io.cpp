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

#include "bosim/sample_io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "bosim/matrix_io.hpp"
#include "json.hpp"

namespace bosim {

using nlohmann::json;

std::string sample_header_line(const SampleHeader &header, uint64_t count) {
    json doc;
    doc["format"] = "bosim.samples";
    doc["version"] = std::string(kVersion);
    doc["model"] = std::string(to_string(header.model));
    doc["m"] = header.m;
    doc["n"] = header.n;
    json input = json::array();
    for (int c : header.input) {
        input.push_back(c + 1);
    }
    doc["input"] = std::move(input);
    doc["seed"] = header.seed;
    doc["matrix_hash"] = hash_hex(header.matrix_hash);
    doc["space"] = std::string(to_string(header.space));
    doc["count"] = count;
    return doc.dump();
}

std::string sample_draw_line(uint64_t index, std::span<const int> ascending_modes) {
    std::string line = "{\"i\":" + std::to_string(index) + ",\"out\":[";
    for (size_t k = 0; k < ascending_modes.size(); k++) {
        if (k > 0) {
            line.push_back(',');
        }
        line += std::to_string(ascending_modes[k] + 1);
    }
    line += "]}";
    return line;
}

void write_samples(std::ostream &out, const SampleSet &set) {
    out << sample_header_line(set.header(), set.size()) << '\n';
    for (size_t i = 0; i < set.size(); i++) {
        out << sample_draw_line(i, set.draw(i)) << '\n';
    }
}

void write_samples(const std::filesystem::path &path, const SampleSet &set) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::invalid_argument("cannot write '" + path.string() + "'");
    }
    write_samples(out, set);
}

SampleSet read_samples(std::istream &in) {
    std::string line;
    if (!std::getline(in, line)) {
        throw std::invalid_argument("sample file: missing header line");
    }
    SampleHeader header;
    uint64_t count = 0;
    try {
        const json doc = json::parse(line);
        if (doc.value("format", std::string()) != "bosim.samples") {
            throw std::invalid_argument("sample file: header is not a bosim.samples header");
        }
        header.model = parse_model(doc.at("model").get<std::string>());
        header.m = doc.at("m").get<int>();
        header.n = doc.at("n").get<int>();
        for (int label : doc.at("input").get<std::vector<int>>()) {
            if (label < 1 || label > header.m) {
                throw std::invalid_argument("sample file: input mode out of range");
            }
            header.input.push_back(label - 1);
        }
        header.seed = doc.at("seed").get<uint64_t>();
        header.matrix_hash = parse_hash_hex(doc.at("matrix_hash").get<std::string>());
        header.space = parse_space(doc.value("space", std::string("full")));
        count = doc.value("count", uint64_t{0});
    } catch (const json::exception &e) {
        throw std::invalid_argument(std::string("sample file header: ") + e.what());
    }
    if (header.m < 1 || header.n < 1) {
        throw std::invalid_argument("sample file: header needs m >= 1 and n >= 1");
    }
    SampleSet set(header);
    set.reserve(count);
    uint64_t expected = 0;
    std::vector<int> modes;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        try {
            const json doc = json::parse(line);
            const uint64_t index = doc.at("i").get<uint64_t>();
            if (index != expected) {
                throw std::invalid_argument("sample file: draw index " + std::to_string(index) + " out of sequence");
            }
            modes = doc.at("out").get<std::vector<int>>();
        } catch (const json::exception &e) {
            throw std::invalid_argument("sample file line " + std::to_string(expected + 2) + ": " + e.what());
        }
        if (static_cast<int>(modes.size()) != header.n) {
            throw std::invalid_argument("sample file: draw " + std::to_string(expected) +
                                        " photon count differs from header");
        }
        for (int &d : modes) {
            if (d < 1 || d > header.m) {
                throw std::invalid_argument("sample file: draw " + std::to_string(expected) + " mode out of range");
            }
            d -= 1;
        }
        if (!std::is_sorted(modes.begin(), modes.end())) {
            throw std::invalid_argument("sample file: draw " + std::to_string(expected) + " is not ascending");
        }
        set.push_back(modes);
        expected++;
    }
    return set;
}

SampleSet read_samples(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::invalid_argument("cannot open '" + path.string() + "'");
    }
    return read_samples(in);
}

}  // namespace bosim
