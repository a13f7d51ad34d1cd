// Copyright 2026 The gleeful Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gleeful/driver.h"

#include <gtest/gtest.h>
#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "gleeful/enumeration.h"
#include "gleeful/errors.h"
#include "oracle.h"

namespace gleeful {
namespace {

namespace fs = std::filesystem;

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("gleeful_driver_" + std::to_string(::getpid()) + "_" +
             ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  fs::path const& path() const { return path_; }

 private:
  fs::path path_;
};

std::string read_file(fs::path const& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string jsonl_of(SweepReport const& report) {
  std::ostringstream out;
  emit_report(report, ReportFormat::kJsonl, out);
  return out.str();
}

TEST(PlanIntervals, PartitionsHalfOpenRange) {
  auto const plan = plan_intervals(100, 30);
  ASSERT_EQ(plan.size(), 4U);
  EXPECT_EQ(plan[0].x1, u128{1});
  EXPECT_EQ(plan[0].x2, u128{31});
  EXPECT_EQ(plan[3].x1, u128{91});
  EXPECT_EQ(plan[3].x2, u128{100});
  for (std::size_t i = 1; i < plan.size(); ++i) EXPECT_EQ(plan[i - 1].x2, plan[i].x1);
  EXPECT_EQ(plan_intervals(2, 1000).size(), 1U);
  EXPECT_THROW(plan_intervals(100, 0), DomainError);
  EXPECT_THROW(plan_intervals(1, 10), DomainError);
}

TEST(DefaultDelta, Floor) {
  EXPECT_EQ(default_delta(1000), u128{1000000});
  EXPECT_EQ(default_delta(parse_u128("10^14")), parse_u128("10^10"));
}

TEST(Validate, RejectsBadConfigs) {
  SweepConfig c;
  c.x_max = 1000;
  EXPECT_THROW(validate(c), DomainError);
  c.k_set = {2, 2};
  EXPECT_THROW(validate(c), DomainError);
  c.k_set = {1};
  EXPECT_THROW(validate(c), DomainError);
  c.k_set = {2};
  c.workers = 0;
  EXPECT_THROW(validate(c), DomainError);
  c.workers = 1;
  c.mode = SweepMode::kDupsCrossK;
  EXPECT_THROW(validate(c), DomainError);
  c.mode = SweepMode::kEnumerate;
  c.checkpoint_path = "x";
  EXPECT_THROW(validate(c), DomainError);
  c.checkpoint_path.reset();
  c.delta = 0;
  EXPECT_THROW(validate(c), DomainError);
}

TEST(ParseEnums, Names) {
  EXPECT_EQ(parse_report_format("csv"), ReportFormat::kCsv);
  EXPECT_EQ(parse_report_format("jsonl"), ReportFormat::kJsonl);
  EXPECT_THROW(parse_report_format("xml"), DomainError);
  for (auto m : {SweepMode::kEnumerate, SweepMode::kCount, SweepMode::kDupsSameK,
                 SweepMode::kDupsCrossK, SweepMode::kBounds, SweepMode::kHeuristic}) {
    EXPECT_EQ(parse_sweep_mode(to_string(m)), m);
  }
  EXPECT_THROW(parse_sweep_mode("nope"), DomainError);
}

TEST(RunSweep, CountMatchesExactForAnyWorkerCount) {
  u128 const x = 1000000;
  for (int k : {2, 3, 5}) {
    auto const exact = count_exact(x, prefix_covering(k, x));
    for (unsigned workers : {1U, 4U, 16U}) {
      SweepConfig c;
      c.k_set = {k};
      c.x_max = x + 1;
      c.delta = 7919;
      c.workers = workers;
      c.mode = SweepMode::kCount;
      auto const report = run_sweep(c);
      ASSERT_EQ(report.summary.totals.size(), 1U);
      EXPECT_EQ(report.summary.totals[0], exact) << k << " " << workers;
      EXPECT_EQ(report.jobs.size(), report.summary.intervals);
    }
  }
}

TEST(RunSweep, CountSeveralExponents) {
  SweepConfig c;
  c.k_set = {3, 2};
  c.x_max = 10001;
  c.delta = 1000;
  auto const report = run_sweep(c);
  EXPECT_EQ(report.summary.totals, (std::vector<std::uint64_t>{29, 132}));
}

TEST(RunSweep, EnumerateSinkInNaturalOrder) {
  SweepConfig c;
  c.k_set = {2};
  c.x_max = 100000;
  c.delta = 777;
  c.workers = 4;
  c.mode = SweepMode::kEnumerate;
  std::vector<Representation> seen;
  run_sweep(c, [&](Representation const& r) { seen.push_back(r); });
  // Interval order, then the enumeration order within each interval.
  auto const prefix = prefix_covering(2, 100000);
  std::vector<Representation> expected;
  for (auto const& iv : plan_intervals(100000, 777)) {
    auto part = enumerate_interval(iv, prefix);
    expected.insert(expected.end(), part.begin(), part.end());
  }
  EXPECT_EQ(seen, expected);
  std::vector<oracle::Chain> chains = oracle::brute_force_chains(2, 1, 100000);
  EXPECT_EQ(seen.size(), chains.size());
}

TEST(RunSweep, CrossKFindsKnownValue) {
  for (auto ks : {std::vector<int>{2, 3}, std::vector<int>{3, 2}}) {
    SweepConfig c;
    c.k_set = ks;
    c.x_max = 100000;
    c.delta = 10000;
    c.workers = 3;
    c.mode = SweepMode::kDupsCrossK;
    auto const report = run_sweep(c);
    ASSERT_EQ(report.duplicates.records.size(), 1U);
    EXPECT_EQ(report.duplicates.records[0].n, u128{23939});
    EXPECT_EQ(report.summary.cross_k, 1U);
    EXPECT_EQ(report.summary.k_set, (std::vector<int>{2, 3}));
  }
}

SweepConfig squares_sweep(u128 x_max, u128 delta, unsigned workers) {
  SweepConfig c;
  c.k_set = {2};
  c.x_max = x_max;
  c.delta = delta;
  c.workers = workers;
  c.mode = SweepMode::kDupsSameK;
  return c;
}

TEST(RunSweep, DeterministicAcrossWorkersAndDelta) {
  auto const base = jsonl_of(run_sweep(squares_sweep(200000000, 10000000, 1)));
  EXPECT_FALSE(base.empty());
  EXPECT_EQ(jsonl_of(run_sweep(squares_sweep(200000000, 10000000, 8))), base);
  EXPECT_EQ(jsonl_of(run_sweep(squares_sweep(200000000, 3000017, 5))), base);
}

TEST(Checkpoint, ResumeAfterTornWrite) {
  TempDir dir;
  auto const ckpt = dir.path() / "sweep.ckpt";
  auto config = squares_sweep(100000000, 5000000, 2);
  auto const reference = run_sweep(config);

  config.checkpoint_path = ckpt;
  auto const first = run_sweep(config);
  EXPECT_EQ(jsonl_of(first), jsonl_of(reference));
  EXPECT_EQ(first.summary.resumed, 0U);

  // Keep the header and half the jobs, then a torn partial line.
  std::vector<std::string> lines;
  {
    std::ifstream in(ckpt);
    for (std::string line; std::getline(in, line);) lines.push_back(line);
  }
  ASSERT_EQ(lines.size(), 1 + first.summary.intervals);
  std::size_t const keep = 1 + first.summary.intervals / 2;
  {
    std::ofstream out(ckpt, std::ios::trunc);
    for (std::size_t i = 0; i < keep; ++i) out << lines[i] << '\n';
    out << lines[keep].substr(0, lines[keep].size() / 2);
  }

  auto const resumed = run_sweep(config);
  EXPECT_EQ(resumed.summary.resumed, keep - 1);
  EXPECT_EQ(jsonl_of(resumed), jsonl_of(reference));
  EXPECT_EQ(resumed.summary.totals, reference.summary.totals);

  // A finished checkpoint resumes everything.
  auto const again = run_sweep(config);
  EXPECT_EQ(again.summary.resumed, again.summary.intervals);
  EXPECT_EQ(jsonl_of(again), jsonl_of(reference));
}

TEST(Checkpoint, RejectsOtherConfiguration) {
  TempDir dir;
  auto const ckpt = dir.path() / "sweep.ckpt";
  auto config = squares_sweep(10000000, 1000000, 1);
  config.checkpoint_path = ckpt;
  run_sweep(config);
  config.delta = 2000000;
  EXPECT_THROW(run_sweep(config), DomainError);
}

TEST(Checkpoint, CorruptMiddleLineIsIoError) {
  TempDir dir;
  auto const ckpt = dir.path() / "sweep.ckpt";
  auto config = squares_sweep(10000000, 1000000, 1);
  config.checkpoint_path = ckpt;
  run_sweep(config);
  auto text = read_file(ckpt);
  auto const second_line = text.find('\n') + 1;
  text.insert(second_line, "garbage\n");
  std::ofstream(ckpt, std::ios::trunc) << text;
  try {
    run_sweep(config);
    FAIL() << "expected IoError";
  } catch (Error const& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kIo);
  }
}

TEST(RunSweep, PrefixOverflowIsExitCodeThree) {
  SweepConfig c;
  c.k_set = {10};
  c.x_max = parse_u128("3e38");
  c.mode = SweepMode::kCount;
  try {
    run_sweep(c);
    FAIL() << "expected an error";
  } catch (Error const& e) {
    EXPECT_EQ(exit_code_for(e.kind()), 3);
  }
}

TEST(Report, JsonlRecordsParse) {
  auto const report = run_sweep(squares_sweep(100000000, 10000000, 2));
  std::istringstream in(jsonl_of(report));
  auto const parsed = read_duplicate_report(in);
  ASSERT_EQ(parsed.size(), report.duplicates.records.size());
  EXPECT_EQ(parsed.front().n, u128{14720439});
}

TEST(Report, CsvFormats) {
  SweepConfig c;
  c.k_set = {2};
  c.x_max = 1001;
  c.mode = SweepMode::kCount;
  std::ostringstream csv;
  emit_report(run_sweep(c), ReportFormat::kCsv, csv);
  EXPECT_EQ(csv.str(), "k,x_max,count\n2,1001,37\n");

  SweepConfig b;
  b.k_set = {2, 3};
  b.mode = SweepMode::kBounds;
  b.m0_list = {6, 100};
  std::ostringstream table;
  emit_report(run_sweep(b), ReportFormat::kCsv, table);
  EXPECT_EQ(table.str(),
            "M0,k,lower,upper\n6,2,0.391504,14.2423\n100,2,1.71182,12.1097\n"
            "6,3,0.580731,23.4232\n100,3,2.72032,18.7705\n");
}

TEST(Report, ComparisonCsv) {
  auto const report = run_sweep(squares_sweep(100000000, 10000000, 1));
  std::ostringstream out;
  write_comparison_csv(report, out);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "x,observed_count,d_of_x,refined_expected");
  std::vector<std::string> rows;
  while (std::getline(in, line)) rows.push_back(line);
  ASSERT_EQ(rows.size(), 8U);
  EXPECT_EQ(rows.back().substr(0, rows.back().find(',', 10)), "100000000,5");
}

TEST(Report, FilesAndSummary) {
  TempDir dir;
  auto const report = run_sweep(squares_sweep(10000000, 1000000, 1));
  ReportFiles files{dir.path() / "dups.jsonl", dir.path() / "summary.csv",
                    dir.path() / "figure.csv"};
  emit_report(report, ReportFormat::kJsonl, files);
  EXPECT_TRUE(read_file(files.main).empty());
  auto const summary = read_file(*files.summary);
  EXPECT_NE(summary.find("mode,dups_same_k\n"), std::string::npos);
  EXPECT_NE(summary.find("intervals,10\n"), std::string::npos);
  ReportFiles bad{dir.path() / "missing" / "x.jsonl", std::nullopt, std::nullopt};
  EXPECT_THROW(emit_report(report, ReportFormat::kJsonl, bad), IoError);
}

}  // namespace
}  // namespace gleeful
