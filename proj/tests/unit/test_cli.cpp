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

#include <algorithm>
#include <complex>
#include <sstream>
#include <string>
#include <vector>

#include "bosim/matrix_io.hpp"
#include "bosim/sample_io.hpp"
#include "bosim/sampling.hpp"
#include "cli.hpp"
#include "json.hpp"
#include "test_util.hpp"

namespace bosim {
namespace {

using testing_util::TempDir;

struct Result {
    int code = 0;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    Result r;
    r.code = cli::run(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

nlohmann::json report(const Result &r) { return nlohmann::json::parse(r.out); }

TEST(CliModeList, CommaRangesAndDots) {
    EXPECT_EQ(cli::parse_mode_list("1,2"), (std::vector<int>{1, 2}));
    EXPECT_EQ(cli::parse_mode_list("1..4"), (std::vector<int>{1, 2, 3, 4}));
    EXPECT_EQ(cli::parse_mode_list("1-3,7"), (std::vector<int>{1, 2, 3, 7}));
    EXPECT_EQ(cli::parse_mode_list("1..20").size(), 20u);
    EXPECT_THROW(cli::parse_mode_list("1,,2"), std::invalid_argument);
    EXPECT_THROW(cli::parse_mode_list("4..2"), std::invalid_argument);
    EXPECT_THROW(cli::parse_mode_list("a"), std::invalid_argument);
}

TEST(CliHaar, WritesUnitaryAndReport) {
    TempDir dir("cli_haar");
    const auto path = (dir / "u.json").string();
    const Result r = run({"haar", "--modes", "60", "--seed", "7", "-o", path});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = report(r);
    EXPECT_EQ(j["m"], 60);
    EXPECT_LT(j["unitarity_deviation"].get<double>(), 1e-12);
    EXPECT_GT(j["amplitude_pvalue"].get<double>(), 0.0);
    EXPECT_GT(j["phase_pvalue"].get<double>(), 0.0);
    const TransferMatrix u = read_matrix(path);
    EXPECT_EQ(u.modes(), 60u);
    EXPECT_EQ(j["matrix_hash"], hash_hex(fingerprint(u.elements)));
}

TEST(CliHaar, RerunIsByteIdentical) {
    TempDir dir("cli_haar_det");
    ASSERT_EQ(run({"haar", "--modes", "12", "--seed", "3", "-o", (dir / "a.json").string()}).code, 0);
    ASSERT_EQ(run({"haar", "--modes", "12", "--seed", "3", "-o", (dir / "b.json").string()}).code, 0);
    EXPECT_EQ(read_text_file(dir / "a.json"), read_text_file(dir / "b.json"));
}

TEST(CliReconstruct, NoiselessRoundTrip) {
    TempDir dir("cli_rec");
    ASSERT_EQ(run({"haar", "--modes", "10", "--seed", "4", "-o", (dir / "u.json").string(), "--measurements-out",
                   (dir / "meas").string()})
                  .code,
              0);
    const Result r = run({"reconstruct", "--amplitudes", (dir / "meas/amplitudes.csv").string(), "--phases",
                          (dir / "meas/phases.csv").string(), "--eff", (dir / "meas/efficiencies.csv").string(),
                          "-o", (dir / "r.json").string()});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = report(r);
    EXPECT_LT(j["unitarity_deviation"].get<double>(), 1e-10);
    EXPECT_EQ(j["normalization"], "column");
    EXPECT_EQ(j["gauge"], "row0col0");
    EXPECT_TRUE(j.contains("amplitude_histogram"));
}

TEST(CliReconstruct, NoisyDeviationNearOnePercent) {
    TempDir dir("cli_rec_noise");
    ASSERT_EQ(run({"haar", "--modes", "60", "--seed", "7", "-o", (dir / "u.json").string(), "--measurements-out",
                   (dir / "meas").string(), "--noise", "0.01"})
                  .code,
              0);
    const Result r = run({"reconstruct", "--amplitudes", (dir / "meas/amplitudes.csv").string(), "--phases",
                          (dir / "meas/phases.csv").string(), "-o", (dir / "r.json").string()});
    ASSERT_EQ(r.code, 0) << r.err;
    const double dev = report(r)["unitarity_deviation"].get<double>();
    EXPECT_GT(dev, 0.01 / 3);
    EXPECT_LT(dev, 0.01 * 3);
}

TEST(CliReconstruct, RejectsUnknownGauge) {
    const Result r = run({"reconstruct", "--amplitudes", "a.csv", "--phases", "p.csv", "--gauge", "diag", "-o", "x"});
    EXPECT_EQ(r.code, 2);
    EXPECT_EQ(r.err.rfind("error: ", 0), 0u);
}

TEST(CliCompose, BalancedSplitter) {
    TempDir dir("cli_compose");
    write_text_file(dir / "c.json", R"({"m":2,"ops":[{"type":"bs","a":1,"b":2,"t":0.5,"phi":0}]})");
    const Result r =
        run({"compose", "--circuit", (dir / "c.json").string(), "-o", (dir / "u.json").string()});
    ASSERT_EQ(r.code, 0) << r.err;
    const TransferMatrix u = read_matrix(dir / "u.json");
    EXPECT_NEAR(std::norm(u(0, 0)), 0.5, 1e-15);
    EXPECT_LT(report(r)["unitarity_deviation"].get<double>(), 1e-15);
}

class CliPipeline : public ::testing::Test {
   protected:
    void SetUp() override {
        ASSERT_EQ(run({"haar", "--modes", "8", "--seed", "11", "-o", matrix()}).code, 0);
    }
    std::string matrix() const { return (dir_ / "u.json").string(); }
    std::string file(const std::string &name) const { return (dir_ / name).string(); }

    TempDir dir_{"cli_pipe"};
};

TEST_F(CliPipeline, SampleMatchesLibraryAndIsWorkerIndependent) {
    const Result r1 =
        run({"sample", "--matrix", matrix(), "--input", "1,2", "--n", "40000", "--seed", "1", "-o", file("a.jsonl")});
    ASSERT_EQ(r1.code, 0) << r1.err;
    EXPECT_NE(r1.err.find("40000/40000"), std::string::npos);
    ASSERT_EQ(run({"--workers", "4", "sample", "--matrix", matrix(), "--input", "1,2", "--count", "40000", "--seed",
                   "1", "-o", file("b.jsonl"), "--quiet"})
                  .code,
              0);
    EXPECT_EQ(read_text_file(file("a.jsonl")), read_text_file(file("b.jsonl")));

    const SampleSet s = read_samples(std::filesystem::path(file("a.jsonl")));
    const TransferMatrix u = read_matrix(matrix());
    const SampleSet lib = sample_boson(u, InputConfig(8, {0, 1}), 40000, 1);
    EXPECT_EQ(s.storage(), lib.storage());
    EXPECT_EQ(s.header(), lib.header());
}

TEST_F(CliPipeline, MetricsReportsFidelityAndSpace) {
    ASSERT_EQ(run({"sample", "--matrix", matrix(), "--input", "1,2", "--n", "100000", "--seed", "1", "-o",
                   file("s.jsonl"), "--quiet"})
                  .code,
              0);
    const Result r = run({"metrics", "--samples", file("s.jsonl"), "--matrix", matrix(), "--pmf-out", file("p.csv")});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = report(r);
    EXPECT_GE(j["F"].get<double>(), 0.99);
    EXPECT_LE(j["D"].get<double>(), 0.05);
    EXPECT_EQ(j["space_full"], "36");
    EXPECT_EQ(j["space_collision_free"], "28");
    EXPECT_EQ(j["bias_warning"], false);
    EXPECT_EQ(read_text_file(file("p.csv")).rfind("# bosim ", 0), 0u);

    const Result d = run({"metrics", "--samples", file("s.jsonl"), "--matrix", matrix(), "--against",
                          "distinguishable"});
    ASSERT_EQ(d.code, 0) << d.err;
    EXPECT_LT(report(d)["F"].get<double>(), report(r)["F"].get<double>());
}

TEST_F(CliPipeline, HashMismatchExitsTwo) {
    ASSERT_EQ(run({"sample", "--matrix", matrix(), "--input", "1,2", "--n", "100", "--seed", "1", "-o",
                   file("s.jsonl"), "--quiet"})
                  .code,
              0);
    ASSERT_EQ(run({"haar", "--modes", "8", "--seed", "12", "-o", file("other.json")}).code, 0);
    for (const char *cmd : {"metrics", "validate"}) {
        std::vector<std::string> args{cmd};
        if (std::string(cmd) == "validate") {
            args.push_back("bayes");
        }
        for (const std::string &a : std::vector<std::string>{"--samples", file("s.jsonl"), "--matrix", file("other.json")}) {
            args.push_back(a);
        }
        const Result r = run(args);
        EXPECT_EQ(r.code, 2);
        EXPECT_NE(r.err.find("matrix hash mismatch"), std::string::npos);
        EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1);
    }
}

TEST_F(CliPipeline, BayesTraceReachesHighConfidence) {
    ASSERT_EQ(run({"sample", "--matrix", matrix(), "--input", "1,2,3", "--n", "300", "--seed", "2", "-o",
                   file("s.jsonl"), "--quiet"})
                  .code,
              0);
    const Result r = run({"validate", "bayes", "--samples", file("s.jsonl"), "--matrix", matrix(), "--meta",
                          file("meta.json"), "--paired-distinguishable"});
    ASSERT_EQ(r.code, 0) << r.err;
    std::istringstream in(r.out);
    std::string line, last;
    std::getline(in, line);
    EXPECT_EQ(line.rfind("# bosim ", 0), 0u);
    std::getline(in, line);
    EXPECT_EQ(line, "draw_index,statistic,paired_statistic");
    int rows = 0;
    while (std::getline(in, line)) {
        last = line;
        rows++;
    }
    EXPECT_EQ(rows, 300);
    const double final_conf = std::stod(last.substr(last.find(',') + 1));
    const double paired_final = std::stod(last.substr(last.rfind(',') + 1));
    EXPECT_GE(final_conf, 0.999);
    EXPECT_LT(paired_final, 0.5);
    const auto meta = nlohmann::json::parse(read_text_file(file("meta.json")));
    EXPECT_EQ(meta["kind"], "bayes_confidence");
    EXPECT_EQ(meta["paired"], "distinguishable");
    EXPECT_EQ(meta["prior"], 0.5);
}

TEST_F(CliPipeline, LossySampleRecordsAllInputs) {
    const Result r = run({"sample", "--matrix", matrix(), "--model", "lossy", "--input", "1..5", "--detect", "3",
                          "--n", "50", "--seed", "4", "--quiet"});
    ASSERT_EQ(r.code, 0) << r.err;
    std::istringstream in(r.out);
    const SampleSet s = read_samples(in);
    EXPECT_EQ(s.photons(), 3);
    EXPECT_EQ(s.header().input.size(), 5u);
    EXPECT_EQ(s.size(), 50u);
}

TEST_F(CliPipeline, PartialNeedsExactlyOneOverlapFlag) {
    EXPECT_EQ(run({"sample", "--matrix", matrix(), "--model", "partial", "--input", "1,2", "--n", "5", "--seed",
                   "1"})
                  .code,
              2);
    EXPECT_EQ(run({"sample", "--matrix", matrix(), "--model", "partial", "--input", "1,2", "--n", "5", "--seed", "1",
                   "--overlap", "0.9", "--indistinguishability", "0.9"})
                  .code,
              2);
    EXPECT_EQ(run({"sample", "--matrix", matrix(), "--model", "partial", "--input", "1,2", "--n", "5", "--seed", "1",
                   "--indistinguishability", "0.954", "--quiet"})
                  .code,
              0);
}

TEST_F(CliPipeline, GuardViolationsExitTwo) {
    TempDir dir("cli_guard");
    ASSERT_EQ(run({"haar", "--modes", "30", "--seed", "1", "-o", (dir / "u.json").string()}).code, 0);
    const Result r =
        run({"sample", "--matrix", (dir / "u.json").string(), "--input", "1..23", "--n", "1", "--seed", "1"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("guard"), std::string::npos);
    EXPECT_EQ(run({"sample", "--matrix", matrix(), "--model", "partial", "--input", "1..7", "--n", "1", "--seed", "1",
                   "--overlap", "1"})
                  .code,
              2);
    EXPECT_EQ(run({"sample", "--matrix", matrix(), "--input", "1,9", "--n", "1", "--seed", "1"}).code, 2);
}

TEST(CliSample, UniformCollisionFree) {
    const Result r = run({"sample", "--model", "uniform", "--space", "collision-free", "--modes", "60", "--photons",
                          "2", "--n", "2000", "--seed", "3", "--quiet"});
    ASSERT_EQ(r.code, 0) << r.err;
    std::istringstream in(r.out);
    const SampleSet s = read_samples(in);
    EXPECT_EQ(s.header().space, OutcomeSpace::collision_free);
    for (size_t i = 0; i < s.size(); i++) {
        EXPECT_LT(s.draw(i)[0], s.draw(i)[1]);
    }
    EXPECT_EQ(s.header().matrix_hash, 0u);
}

TEST(CliSpace, BigCounts) {
    const Result r = run({"space", "--modes", "60", "--photons", "20"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = report(r);
    EXPECT_EQ(j["hilbert_dimension"], "365615844006297600000000000000000000");
    EXPECT_NEAR(j["log2_hilbert_dimension"].get<double>(), 118.138, 1e-3);
    EXPECT_EQ(j["space_collision_free"], "4191844505805495");
}

TEST(CliRates, FitAndTable) {
    const Result f = run({"rates", "--fit", "5:295,10:0.01"});
    ASSERT_EQ(f.code, 0) << f.err;
    EXPECT_NEAR(report(f)["fit_eta"].get<double>(), 0.1277, 1e-3);
    const Result t = run({"rates", "--eta", "0.5", "--pulse-rate", "100", "--table", "2"});
    ASSERT_EQ(t.code, 0) << t.err;
    EXPECT_NE(t.out.find("n,standard_rate,one_loss_rate,enhancement\n1,50,50,1\n2,25,37.5,1.5\n"),
              std::string::npos);
    const Result one = run({"rates", "--eta", "0.5", "--pulse-rate", "100", "--sent", "3", "--detect", "2"});
    ASSERT_EQ(one.code, 0) << one.err;
    EXPECT_DOUBLE_EQ(report(one)["rate"].get<double>(), 37.5);
    EXPECT_EQ(run({"rates", "--eta", "1.5", "--sent", "2"}).code, 2);
}

TEST(CliErrors, UsageErrorsAreSingleLine) {
    for (const auto &args : std::vector<std::vector<std::string>>{
             {}, {"nope"}, {"haar", "--modes", "5"}, {"sample", "--n", "x", "--seed", "1"}, {"validate", "mle"}}) {
        const Result r = run(args);
        EXPECT_EQ(r.code, 2);
        EXPECT_EQ(r.err.rfind("error: ", 0), 0u) << r.err;
        EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1) << r.err;
    }
}

TEST(CliErrors, HelpExitsZero) {
    const Result r = run({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("sample"), std::string::npos);
    EXPECT_EQ(run({"sample", "--help"}).code, 0);
}

TEST(CliErrors, MissingFileExitsTwo) {
    const Result r = run({"metrics", "--samples", "/nonexistent/s.jsonl"});
    EXPECT_EQ(r.code, 2);
}

}  // namespace
}  // namespace bosim
