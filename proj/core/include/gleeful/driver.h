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

#ifndef GLEEFUL_DRIVER_H_
#define GLEEFUL_DRIVER_H_

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "gleeful/bounds.h"
#include "gleeful/duplicates.h"
#include "gleeful/enumeration.h"
#include "gleeful/int128.h"

namespace gleeful {

enum class SweepMode {
  kEnumerate,
  kCount,
  kDupsSameK,
  kDupsCrossK,
  kBounds,
  kHeuristic,
};

char const* to_string(SweepMode mode) noexcept;
SweepMode parse_sweep_mode(std::string_view text);

enum class ReportFormat { kJsonl, kCsv };

ReportFormat parse_report_format(std::string_view text);

struct SweepConfig {
  std::vector<int> k_set;
  // Sweeps cover [1, x_max).
  u128 x_max = 0;
  // Interval length; default_delta(x_max) when unset.
  std::optional<u128> delta;
  unsigned workers = 1;
  SweepMode mode = SweepMode::kCount;
  std::filesystem::path output_path;
  std::optional<std::filesystem::path> checkpoint_path;
  // Bounds mode only.
  std::vector<std::uint64_t> m0_list = {6, 100, 10000, 1000000};
};

// max(10^6, x_max / 10^4).
u128 default_delta(u128 x_max);

// Throws DomainError on an invalid configuration.
void validate(SweepConfig const& config);

// [1, 1+d), [1+d, 1+2d), ..., the last one truncated at x_max. A delta of
// at least x_max - 1 yields the single interval [1, x_max).
std::vector<Interval> plan_intervals(u128 x_max, u128 delta);

struct JobResult {
  std::uint64_t index = 0;
  Interval interval;
  // One entry per exponent of the config, in k_set order.
  std::vector<std::uint64_t> representation_counts;
  std::vector<DuplicateRecord> duplicates;
  std::chrono::nanoseconds wall_time{0};
  bool from_checkpoint = false;
};

struct SweepSummary {
  std::vector<int> k_set;
  std::vector<std::uint64_t> totals;
  std::size_t intervals = 0;
  std::size_t same_k = 0;
  std::size_t cross_k = 0;
  std::size_t resumed = 0;
};

struct SweepReport {
  SweepConfig config;
  u128 delta = 0;
  std::vector<JobResult> jobs;
  MergedDuplicates duplicates;
  SweepSummary summary;
  std::vector<BoundsTableRow> bounds;
};

using RepresentationSink = std::function<void(Representation const&)>;

// Runs every interval on a pool of config.workers threads sharing the
// immutable prime and prefix tables. Results are merged in interval order,
// so the report does not depend on the worker count. In enumerate mode the
// representations are passed to `sink` in interval order and are not kept.
//
// With a checkpoint path, each completed interval is appended to the file;
// a rerun with the same configuration skips intervals already recorded.
// Errors name the failing interval and keep their kind.
SweepReport run_sweep(SweepConfig const& config, RepresentationSink const& sink = {});

// Main artifact of a sweep: JSONL or CSV duplicates, count rows, the bounds
// table, or for heuristic mode the comparison CSV.
void emit_report(SweepReport const& report, ReportFormat format, std::ostream& out);

// key,value rows; excludes timings and worker counts.
void write_summary_csv(SweepReport const& report, std::ostream& out);

// x,observed_count,d_of_x,refined_expected at decade checkpoints up to
// x_max (plus x_max itself).
void write_comparison_csv(SweepReport const& report, std::ostream& out);

struct ReportFiles {
  std::filesystem::path main;
  std::optional<std::filesystem::path> summary;
  std::optional<std::filesystem::path> comparison;
};

// File variant of the writers above. Throws IoError for unwritable paths.
void emit_report(SweepReport const& report, ReportFormat format, ReportFiles const& files);

}  // namespace gleeful

#endif  // GLEEFUL_DRIVER_H_
