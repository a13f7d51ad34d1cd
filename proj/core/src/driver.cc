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

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <deque>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <utility>

#include "gleeful/errors.h"
#include "gleeful/heuristics.h"
#include "json.hpp"

namespace gleeful {
namespace {

using Clock = std::chrono::steady_clock;

bool is_cross(SweepConfig const& config) {
  return config.mode == SweepMode::kDupsCrossK ||
         (config.mode == SweepMode::kHeuristic && config.k_set.size() == 2);
}

bool finds_duplicates(SweepMode mode) {
  return mode == SweepMode::kDupsSameK || mode == SweepMode::kDupsCrossK ||
         mode == SweepMode::kHeuristic;
}

[[noreturn]] void throw_kind(ErrorKind kind, std::string const& what) {
  switch (kind) {
    case ErrorKind::kDomain:
      throw DomainError(what);
    case ErrorKind::kCoverage:
      throw CoverageError(what);
    case ErrorKind::kOverflow:
      throw OverflowError(what);
    case ErrorKind::kIo:
      throw IoError(what);
  }
  throw Error(kind, what);
}

std::string describe(std::uint64_t index, Interval const& iv) {
  return "interval " + std::to_string(index) + " [" + to_string(iv.x1) + ", " +
         to_string(iv.x2) + ")";
}

[[noreturn]] void rethrow_for_interval(std::exception_ptr error, std::uint64_t index,
                                       Interval const& iv) {
  try {
    std::rethrow_exception(error);
  } catch (Error const& e) {
    throw_kind(e.kind(), describe(index, iv) + ": " + e.what());
  }
}

// ---- per-interval work -----------------------------------------------------

JobResult run_job(std::uint64_t index, Interval const& iv, SweepConfig const& config,
                  std::vector<PrefixPowerSums> const& prefixes,
                  std::vector<Representation>* enumerated) {
  auto const start = Clock::now();
  JobResult result;
  result.index = index;
  result.interval = iv;
  std::vector<Representation> mixed;
  for (auto const& prefix : prefixes) {
    switch (config.mode) {
      case SweepMode::kEnumerate: {
        auto const before = enumerated->size();
        enumerate_interval(iv, prefix,
                           [enumerated](Representation const& r) { enumerated->push_back(r); });
        result.representation_counts.push_back(enumerated->size() - before);
        break;
      }
      case SweepMode::kCount: {
        auto stats = enumerate_interval(iv, prefix, [](Representation const&) {});
        result.representation_counts.push_back(stats.emitted);
        break;
      }
      default: {
        auto reps = enumerate_interval(iv, prefix);
        result.representation_counts.push_back(reps.size());
        if (is_cross(config)) {
          mixed.insert(mixed.end(), reps.begin(), reps.end());
        } else {
          auto records = collect_same_k(std::move(reps));
          std::move(records.begin(), records.end(), std::back_inserter(result.duplicates));
        }
        break;
      }
    }
  }
  if (is_cross(config)) {
    result.duplicates = collect_cross_k(std::move(mixed));
  } else if (prefixes.size() > 1) {
    std::stable_sort(result.duplicates.begin(), result.duplicates.end(),
                     [](auto const& a, auto const& b) { return a.n < b.n; });
  }
  result.wall_time = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
  return result;
}

// ---- checkpoint file -------------------------------------------------------

nlohmann::json fingerprint(SweepConfig const& config, u128 delta) {
  return nlohmann::json{{"checkpoint", 1},
                        {"mode", to_string(config.mode)},
                        {"k", config.k_set},
                        {"x_max", to_string(config.x_max)},
                        {"delta", to_string(delta)}};
}

std::string checkpoint_line(JobResult const& job) {
  std::string line = "{\"index\":" + std::to_string(job.index) + ",\"counts\":[";
  for (std::size_t i = 0; i < job.representation_counts.size(); ++i) {
    if (i) line += ',';
    line += std::to_string(job.representation_counts[i]);
  }
  line += "],\"dups\":[";
  for (std::size_t i = 0; i < job.duplicates.size(); ++i) {
    if (i) line += ',';
    line += to_jsonl(job.duplicates[i]);
  }
  line += "]}";
  return line;
}

// Loads completed jobs and rewrites the file without any torn trailing line.
std::map<std::uint64_t, JobResult> load_checkpoint(std::filesystem::path const& path,
                                                   SweepConfig const& config, u128 delta,
                                                   std::vector<Interval> const& plan) {
  std::map<std::uint64_t, JobResult> done;
  auto const expected = fingerprint(config, delta);
  std::vector<std::string> kept;
  if (std::filesystem::exists(path)) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read checkpoint " + path.string());
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    if (!lines.empty()) {
      nlohmann::json header;
      try {
        header = nlohmann::json::parse(lines.front());
      } catch (nlohmann::json::exception const&) {
        throw IoError("checkpoint " + path.string() + " has a malformed header");
      }
      if (header != expected) {
        throw DomainError("checkpoint " + path.string() +
                          " was written by a different sweep configuration");
      }
    }
    for (std::size_t i = 1; i < lines.size(); ++i) {
      try {
        auto const j = nlohmann::json::parse(lines[i]);
        JobResult job;
        job.index = j.at("index").get<std::uint64_t>();
        if (job.index >= plan.size()) throw IoError("interval index out of range");
        job.interval = plan[job.index];
        job.representation_counts = j.at("counts").get<std::vector<std::uint64_t>>();
        if (job.representation_counts.size() != config.k_set.size()) {
          throw IoError("count arity mismatch");
        }
        for (auto const& d : j.at("dups")) job.duplicates.push_back(parse_duplicate_jsonl(d.dump()));
        job.from_checkpoint = true;
        done.insert_or_assign(job.index, std::move(job));
        kept.push_back(lines[i]);
      } catch (std::exception const& e) {
        // A kill mid-write leaves at most one torn line, at the end.
        if (i + 1 == lines.size()) break;
        throw IoError("checkpoint " + path.string() + " line " + std::to_string(i + 1) +
                      " is corrupt: " + e.what());
      }
    }
  }
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError("cannot write checkpoint " + path.string());
  out << expected.dump() << '\n';
  for (auto const& line : kept) out << line << '\n';
  if (!out.flush()) throw IoError("cannot write checkpoint " + path.string());
  return done;
}

// ---- worker pool -----------------------------------------------------------

struct Outcome {
  std::uint64_t index = 0;
  JobResult result;
  std::vector<Representation> enumerated;
  std::exception_ptr error;
};

class ResultChannel {
 public:
  void push(Outcome outcome) {
    {
      std::lock_guard lock(mu_);
      queue_.push_back(std::move(outcome));
    }
    cv_.notify_one();
  }

  Outcome pop() {
    std::unique_lock lock(mu_);
    cv_.wait(lock, [this] { return !queue_.empty(); });
    Outcome out = std::move(queue_.front());
    queue_.pop_front();
    return out;
  }

 private:
  std::mutex mu_;
  std::condition_variable cv_;
  std::deque<Outcome> queue_;
};

std::string csv_reps(DuplicateRecord const& record) {
  std::string out;
  for (std::size_t i = 0; i < record.reps.size(); ++i) {
    if (i) out += ';';
    out += std::to_string(record.reps[i].k) + ':' + std::to_string(record.reps[i].m) + ':' +
           std::to_string(record.reps[i].p_start);
  }
  return out;
}

std::ofstream open_for_write(std::filesystem::path const& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  return out;
}

void finish(std::ofstream& out, std::filesystem::path const& path) {
  if (!out.flush()) throw IoError("failed writing " + path.string());
}

}  // namespace

char const* to_string(SweepMode mode) noexcept {
  switch (mode) {
    case SweepMode::kEnumerate:
      return "enumerate";
    case SweepMode::kCount:
      return "count";
    case SweepMode::kDupsSameK:
      return "dups_same_k";
    case SweepMode::kDupsCrossK:
      return "dups_cross_k";
    case SweepMode::kBounds:
      return "bounds";
    case SweepMode::kHeuristic:
      return "heuristic";
  }
  return "unknown";
}

SweepMode parse_sweep_mode(std::string_view text) {
  for (auto mode : {SweepMode::kEnumerate, SweepMode::kCount, SweepMode::kDupsSameK,
                    SweepMode::kDupsCrossK, SweepMode::kBounds, SweepMode::kHeuristic}) {
    if (text == to_string(mode)) return mode;
  }
  throw DomainError("unknown sweep mode '" + std::string(text) + "'");
}

ReportFormat parse_report_format(std::string_view text) {
  if (text == "jsonl") return ReportFormat::kJsonl;
  if (text == "csv") return ReportFormat::kCsv;
  throw DomainError("unknown format '" + std::string(text) + "' (expected jsonl or csv)");
}

u128 default_delta(u128 x_max) { return std::max<u128>(1000000, x_max / 10000); }

void validate(SweepConfig const& config) {
  if (config.k_set.empty()) throw DomainError("sweep: no exponent given");
  std::set<int> distinct(config.k_set.begin(), config.k_set.end());
  if (distinct.size() != config.k_set.size()) throw DomainError("sweep: repeated exponent");
  for (int k : config.k_set) {
    if (k < 2) throw DomainError("sweep: every k must be >= 2");
  }
  if (config.workers < 1) throw DomainError("sweep: workers must be >= 1");
  if (config.mode == SweepMode::kBounds) return;
  if (config.x_max < 2) throw DomainError("sweep: x_max must be >= 2");
  if (config.delta && *config.delta < 1) throw DomainError("sweep: delta must be >= 1");
  if (config.mode == SweepMode::kDupsCrossK && config.k_set.size() != 2) {
    throw DomainError("sweep: cross-k mode needs exactly two exponents");
  }
  if (config.mode == SweepMode::kHeuristic && config.k_set.size() > 2) {
    throw DomainError("sweep: heuristic mode takes one or two exponents");
  }
  if (config.mode == SweepMode::kEnumerate && config.checkpoint_path) {
    throw DomainError("sweep: enumerate mode does not support checkpoints");
  }
}

std::vector<Interval> plan_intervals(u128 x_max, u128 delta) {
  if (delta < 1) throw DomainError("plan_intervals: delta must be >= 1");
  if (x_max < 2) throw DomainError("plan_intervals: x_max must be >= 2");
  std::vector<Interval> plan;
  for (u128 x1 = 1; x1 < x_max;) {
    u128 const x2 = (x_max - x1 > delta) ? x1 + delta : x_max;
    plan.push_back(Interval{x1, x2});
    x1 = x2;
  }
  return plan;
}

SweepReport run_sweep(SweepConfig const& config, RepresentationSink const& sink) {
  validate(config);
  SweepReport report;
  report.config = config;
  report.summary.k_set = config.k_set;
  if (config.mode == SweepMode::kBounds) {
    report.bounds = bounds_table(config.k_set, config.m0_list);
    return report;
  }

  std::vector<int> ks = config.k_set;
  if (is_cross(config)) std::sort(ks.begin(), ks.end());
  report.config.k_set = ks;
  report.summary.k_set = ks;
  report.delta = config.delta.value_or(default_delta(config.x_max));
  auto const plan = plan_intervals(config.x_max, report.delta);

  std::vector<PrefixPowerSums> prefixes;
  for (int k : ks) prefixes.push_back(prefix_covering(k, config.x_max - 1));

  std::map<std::uint64_t, JobResult> done;
  if (config.checkpoint_path) {
    done = load_checkpoint(*config.checkpoint_path, report.config, report.delta, plan);
  }
  std::vector<std::uint64_t> pending;
  for (std::uint64_t i = 0; i < plan.size(); ++i) {
    if (!done.contains(i)) pending.push_back(i);
  }
  report.summary.resumed = done.size();

  std::ofstream checkpoint;
  if (config.checkpoint_path) {
    checkpoint.open(*config.checkpoint_path, std::ios::app);
    if (!checkpoint) throw IoError("cannot append to checkpoint " + config.checkpoint_path->string());
  }

  bool const enumerate_mode = config.mode == SweepMode::kEnumerate;
  ResultChannel channel;
  std::atomic<std::size_t> cursor{0};
  std::atomic<bool> stop{false};
  {
    std::vector<std::jthread> workers;
    unsigned const count = std::min<std::size_t>(config.workers, std::max<std::size_t>(pending.size(), 1));
    for (unsigned w = 0; w < count; ++w) {
      workers.emplace_back([&] {
        while (!stop.load()) {
          std::size_t const slot = cursor.fetch_add(1);
          if (slot >= pending.size()) return;
          std::uint64_t const index = pending[slot];
          Outcome outcome;
          outcome.index = index;
          try {
            outcome.result = run_job(index, plan[index], report.config, prefixes,
                                     enumerate_mode ? &outcome.enumerated : nullptr);
          } catch (...) {
            outcome.error = std::current_exception();
          }
          channel.push(std::move(outcome));
        }
      });
    }

    // Single writer: checkpoint appends, ordered sink emission, and result
    // collection all happen on this thread.
    std::map<std::uint64_t, std::vector<Representation>> held;
    std::uint64_t next_to_emit = 0;
    for (std::size_t received = 0; received < pending.size(); ++received) {
      Outcome outcome = channel.pop();
      if (outcome.error) {
        stop.store(true);
        workers.clear();
        rethrow_for_interval(outcome.error, outcome.index, plan[outcome.index]);
      }
      if (checkpoint.is_open()) {
        checkpoint << checkpoint_line(outcome.result) << '\n';
        if (!checkpoint.flush()) {
          stop.store(true);
          throw IoError("failed appending to checkpoint " + config.checkpoint_path->string());
        }
      }
      if (enumerate_mode) {
        held.emplace(outcome.index, std::move(outcome.enumerated));
        while (!held.empty() && held.begin()->first == next_to_emit) {
          if (sink) {
            for (auto const& rep : held.begin()->second) sink(rep);
          }
          held.erase(held.begin());
          ++next_to_emit;
        }
      }
      done.insert_or_assign(outcome.index, std::move(outcome.result));
    }
  }

  report.summary.intervals = plan.size();
  report.summary.totals.assign(ks.size(), 0);
  std::vector<IntervalDuplicates> per_interval;
  for (auto& [index, job] : done) {
    for (std::size_t i = 0; i < ks.size(); ++i) {
      report.summary.totals[i] += job.representation_counts.at(i);
    }
    if (finds_duplicates(config.mode)) per_interval.push_back({job.interval, job.duplicates});
    report.jobs.push_back(std::move(job));
  }
  report.duplicates = merge_reports(std::move(per_interval));
  report.summary.same_k = report.duplicates.same_k;
  report.summary.cross_k = report.duplicates.cross_k;
  return report;
}

void emit_report(SweepReport const& report, ReportFormat format, std::ostream& out) {
  auto const& config = report.config;
  switch (config.mode) {
    case SweepMode::kEnumerate:
      return;
    case SweepMode::kCount:
      if (format == ReportFormat::kCsv) out << "k,x_max,count\n";
      for (std::size_t i = 0; i < report.summary.k_set.size(); ++i) {
        auto const k = std::to_string(report.summary.k_set[i]);
        auto const total = std::to_string(report.summary.totals[i]);
        if (format == ReportFormat::kCsv) {
          out << k << ',' << to_string(config.x_max) << ',' << total << '\n';
        } else {
          out << "{\"k\":" << k << ",\"x_max\":" << to_string(config.x_max)
              << ",\"count\":" << total << "}\n";
        }
      }
      return;
    case SweepMode::kBounds:
      if (format == ReportFormat::kCsv) {
        out << bounds_table_csv(report.bounds);
      } else {
        for (auto const& row : report.bounds) {
          out << "{\"M0\":" << row.m0 << ",\"k\":" << row.k
              << ",\"lower\":" << six_significant(row.lower)
              << ",\"upper\":" << six_significant(row.upper) << "}\n";
        }
      }
      return;
    case SweepMode::kHeuristic:
      write_comparison_csv(report, out);
      return;
    case SweepMode::kDupsSameK:
    case SweepMode::kDupsCrossK:
      if (format == ReportFormat::kCsv) out << "n,kind,reps\n";
      for (auto const& record : report.duplicates.records) {
        if (format == ReportFormat::kCsv) {
          out << to_string(record.n) << ',' << to_string(record.kind) << ',' << csv_reps(record)
              << '\n';
        } else {
          out << to_jsonl(record) << '\n';
        }
      }
      return;
  }
}

void write_summary_csv(SweepReport const& report, std::ostream& out) {
  out << "key,value\n";
  out << "mode," << to_string(report.config.mode) << '\n';
  if (report.config.mode == SweepMode::kBounds) {
    out << "rows," << report.bounds.size() << '\n';
    return;
  }
  out << "x_max," << to_string(report.config.x_max) << '\n';
  out << "delta," << to_string(report.delta) << '\n';
  out << "intervals," << report.summary.intervals << '\n';
  for (std::size_t i = 0; i < report.summary.k_set.size(); ++i) {
    out << "representations_k" << report.summary.k_set[i] << ',' << report.summary.totals[i]
        << '\n';
  }
  out << "same_k_duplicates," << report.summary.same_k << '\n';
  out << "cross_k_duplicates," << report.summary.cross_k << '\n';
}

void write_comparison_csv(SweepReport const& report, std::ostream& out) {
  auto const& config = report.config;
  if (config.mode == SweepMode::kBounds || config.k_set.empty()) {
    throw DomainError("comparison CSV needs a duplicate sweep");
  }
  bool const cross = config.k_set.size() == 2;
  std::vector<u128> checkpoints;
  for (u128 x = 10; x < config.x_max; x *= 10) checkpoints.push_back(x);
  checkpoints.push_back(config.x_max);

  out << "x,observed_count,d_of_x,refined_expected\n";
  auto const& records = report.duplicates.records;
  std::size_t observed = 0;
  for (u128 x : checkpoints) {
    while (observed < records.size() && records[observed].n <= x) ++observed;
    double const xd = to_double(x);
    double const model =
        cross ? cross_k_classifier(std::min(config.k_set[0], config.k_set[1]),
                                   std::max(config.k_set[0], config.k_set[1]))
                    .at(xd)
                    .expected_count_to_x
              : same_k_duplicate_density(xd, config.k_set[0]).expected_count_to_x;
    out << to_string(x) << ',' << observed << ',' << six_significant(d_of_x(xd)) << ','
        << six_significant(model) << '\n';
  }
}

void emit_report(SweepReport const& report, ReportFormat format, ReportFiles const& files) {
  {
    auto out = open_for_write(files.main);
    emit_report(report, format, out);
    finish(out, files.main);
  }
  if (files.summary) {
    auto out = open_for_write(*files.summary);
    write_summary_csv(report, out);
    finish(out, *files.summary);
  }
  if (files.comparison) {
    auto out = open_for_write(*files.comparison);
    write_comparison_csv(report, out);
    finish(out, *files.comparison);
  }
}

}  // namespace gleeful
