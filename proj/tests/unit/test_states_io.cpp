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

#include <gtest/gtest.h>

#include <sstream>
#include <stdexcept>

#include "bosim/csv.hpp"
#include "bosim/matrix_io.hpp"
#include "bosim/sample_io.hpp"
#include "bosim/states.hpp"
#include "test_util.hpp"

namespace bosim {
namespace {

TEST(InputConfig, SortsAndValidates) {
    const InputConfig in(6, {4, 1, 2});
    EXPECT_EQ(in.ports(), (std::vector<int>{1, 2, 4}));
    EXPECT_EQ(in.photons(), 3);
    EXPECT_EQ(in.one_based(), (std::vector<int>{2, 3, 5}));
    EXPECT_THROW(InputConfig(4, {1, 1}), std::invalid_argument);
    EXPECT_THROW(InputConfig(4, {4}), std::invalid_argument);
    EXPECT_THROW(InputConfig(4, {-1}), std::invalid_argument);
    EXPECT_THROW(InputConfig(4, {}), std::invalid_argument);
    EXPECT_THROW(InputConfig(0, {0}), std::invalid_argument);
}

TEST(InputConfig, OneBasedLabels) {
    const std::vector<int> labels{1, 2, 4, 7};
    const InputConfig in = InputConfig::from_one_based(8, labels);
    EXPECT_EQ(in.ports(), (std::vector<int>{0, 1, 3, 6}));
    const std::vector<int> bad{0};
    EXPECT_THROW(InputConfig::from_one_based(8, bad), std::invalid_argument);
}

TEST(OutputState, OccupationRoundTrip) {
    const std::vector<int> occ{0, 2, 0, 1};
    const OutputState out = OutputState::from_occupation(occ);
    EXPECT_EQ(out.mode_list(), (std::vector<int>{1, 1, 3}));
    EXPECT_EQ(out.occupation(), occ);
    EXPECT_EQ(out.photons(), 3);
    EXPECT_DOUBLE_EQ(out.occupation_factorial(), 2.0);
    EXPECT_FALSE(out.collision_free());
    EXPECT_TRUE(OutputState(4, {0, 3}).collision_free());
    EXPECT_THROW(OutputState(4, {4}), std::invalid_argument);
    const std::vector<int> neg{1, -1};
    EXPECT_THROW(OutputState::from_occupation(neg), std::invalid_argument);
}

TEST(OutputState, OccupationFactorial) {
    const std::vector<int> a{2, 2, 2, 5, 5};
    EXPECT_DOUBLE_EQ(occupation_factorial(a), 12.0);
    const std::vector<int> b{0, 1, 2};
    EXPECT_DOUBLE_EQ(occupation_factorial(b), 1.0);
}

TEST(Colex, MultisetEnumerationCountsFullSpace) {
    std::vector<int> modes{0, 0, 0};
    std::vector<std::vector<int>> seen{modes};
    while (next_multiset_colex(modes, 4)) {
        EXPECT_TRUE(colex_less(seen.back(), modes));
        seen.push_back(modes);
    }
    EXPECT_EQ(seen.size(), 20u);
}

TEST(Colex, CombinationEnumerationCountsCollisionFreeSpace) {
    std::vector<int> modes{0, 1};
    size_t count = 1;
    std::vector<int> prev = modes;
    while (next_combination_colex(modes, 60)) {
        EXPECT_TRUE(colex_less(prev, modes));
        EXPECT_LT(modes[0], modes[1]);
        prev = modes;
        count++;
    }
    EXPECT_EQ(count, 1770u);
}

TEST(Model, StringRoundTrip) {
    for (Model m : {Model::boson, Model::distinguishable, Model::uniform, Model::lossy, Model::partial}) {
        EXPECT_EQ(parse_model(to_string(m)), m);
    }
    EXPECT_EQ(parse_space("collision-free"), OutcomeSpace::collision_free);
    EXPECT_EQ(parse_space("full"), OutcomeSpace::full);
    EXPECT_THROW(parse_model("bosons"), std::invalid_argument);
    EXPECT_THROW(parse_space("sparse"), std::invalid_argument);
}

SampleSet small_set() {
    SampleHeader h;
    h.model = Model::boson;
    h.m = 5;
    h.n = 2;
    h.input = {0, 3};
    h.matrix_hash = 0xdeadbeefULL;
    h.seed = 17;
    h.space = OutcomeSpace::full;
    SampleSet s(h);
    s.push_back(std::vector<int>{0, 0});
    s.push_back(std::vector<int>{1, 4});
    s.push_back(std::vector<int>{2, 3});
    return s;
}

TEST(SampleIo, RoundTrip) {
    const SampleSet s = small_set();
    std::stringstream buf;
    write_samples(buf, s);
    const std::string text = buf.str();
    EXPECT_NE(text.find(R"("format":"bosim.samples")"), std::string::npos);
    EXPECT_NE(text.find(R"({"i":1,"out":[2,5]})"), std::string::npos);
    EXPECT_NE(text.find(R"("input":[1,4])"), std::string::npos);
    std::stringstream in(text);
    const SampleSet back = read_samples(in);
    EXPECT_EQ(back.header(), s.header());
    EXPECT_EQ(back.storage(), s.storage());
}

TEST(SampleIo, FileRoundTrip) {
    testing_util::TempDir dir("samples");
    const SampleSet s = small_set();
    write_samples(dir / "s.jsonl", s);
    const SampleSet back = read_samples(dir / "s.jsonl");
    EXPECT_EQ(back.storage(), s.storage());
}

TEST(SampleIo, RejectsCorruptFiles) {
    const SampleSet s = small_set();
    std::stringstream buf;
    write_samples(buf, s);
    const std::string text = buf.str();
    const std::string header = text.substr(0, text.find('\n') + 1);
    auto read = [](const std::string &t) {
        std::stringstream in(t);
        return read_samples(in);
    };
    EXPECT_THROW(read(""), std::invalid_argument);
    EXPECT_THROW(read(header + R"({"i":1,"out":[1,2]})" "\n"), std::invalid_argument);
    EXPECT_THROW(read(header + R"({"i":0,"out":[2,1]})" "\n"), std::invalid_argument);
    EXPECT_THROW(read(header + R"({"i":0,"out":[1,6]})" "\n"), std::invalid_argument);
    EXPECT_THROW(read(header + R"({"i":0,"out":[1]})" "\n"), std::invalid_argument);
    EXPECT_THROW(read(R"({"format":"other"})" "\n"), std::invalid_argument);
}

TEST(Csv, ParsesHeaderCommentsAndRows) {
    const NumericTable t = parse_csv_table("a,b\n# note\n1, 2\n3,4.5\n\n");
    ASSERT_EQ(t.size(), 2u);
    EXPECT_EQ(t[1][1], 4.5);
    EXPECT_THROW(parse_csv_table("1,2\n3\n"), std::invalid_argument);
    EXPECT_THROW(parse_csv_table("1,2\nx,y\n"), std::invalid_argument);
}

TEST(Csv, FormatRoundTripsDoubles) {
    const NumericTable t{{0.1, 1.0 / 3.0}, {-2.5e-300, 7.0}};
    EXPECT_EQ(parse_csv_table(format_csv_table(t)), t);
}

TEST(Csv, VectorFromColumnOrRow) {
    testing_util::TempDir dir("csv");
    write_text_file(dir / "col.csv", "eff\n0.5\n0.75\n");
    write_text_file(dir / "row.csv", "0.5,0.75\n");
    EXPECT_EQ(read_csv_vector(dir / "col.csv"), (std::vector<double>{0.5, 0.75}));
    EXPECT_EQ(read_csv_vector(dir / "row.csv"), (std::vector<double>{0.5, 0.75}));
}

TEST(Csv, PmfExportUsesOneBasedModes) {
    Pmf p(3, 2);
    p.push_back(std::vector<int>{0, 0}, 0.25);
    p.push_back(std::vector<int>{0, 2}, 0.75);
    EXPECT_EQ(pmf_to_csv(p), "outcome_modes,probability\n1 1,0.25\n1 3,0.75\n");
}

TEST(Pmf, LookupAndOrdering) {
    Pmf p(4, 2);
    p.push_back(std::vector<int>{0, 1}, 0.2);
    p.push_back(std::vector<int>{1, 2}, 0.3);
    p.push_back(std::vector<int>{0, 3}, 0.5);
    EXPECT_DOUBLE_EQ(p.probability_of(std::vector<int>{1, 2}), 0.3);
    EXPECT_DOUBLE_EQ(p.probability_of(std::vector<int>{2, 3}), 0.0);
    EXPECT_THROW(p.push_back(std::vector<int>{0, 2}, 0.1), std::invalid_argument);
    EXPECT_THROW(p.push_back(std::vector<int>{3, 3}, -0.1), std::invalid_argument);
    EXPECT_THROW(p.push_back(std::vector<int>{3}, 0.1), std::invalid_argument);
}

TEST(Pmf, NormalizeKeepsRawMass) {
    Pmf p(2, 1);
    p.push_back(std::vector<int>{0}, 1.0);
    p.push_back(std::vector<int>{1}, 3.0);
    p.normalize();
    EXPECT_DOUBLE_EQ(p.raw_mass(), 4.0);
    EXPECT_DOUBLE_EQ(p.probability(1), 0.75);
    Pmf empty(2, 1);
    EXPECT_THROW(empty.normalize(), std::runtime_error);
}

}  // namespace
}  // namespace bosim
