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

#include "cli.h"

#include <algorithm>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gleeful/bounds.h"
#include "gleeful/driver.h"
#include "gleeful/duplicates.h"
#include "gleeful/enumeration.h"
#include "gleeful/errors.h"
#include "gleeful/heuristics.h"
#include "gleeful/int128.h"
#include "gleeful/primes.h"

namespace gleeful::cli {
namespace {

struct GlobalOptions {
  std::string out_path;
  std::string format;
};

// Output goes to --out when given, else to the caller's stream.
class Output {
 public:
  Output(std::string const& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::trunc);
      if (!*file_) throw IoError("cannot open " + path + " for writing");
      stream_ = file_.get();
    }
  }

  std::ostream& stream() { return *stream_; }

  void close() {
    if (!stream_->flush()) throw IoError("failed writing output");
  }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

ReportFormat format_or(GlobalOptions const& g, ReportFormat fallback) {
  if (g.format.empty()) return fallback;
  return parse_report_format(g.format);
}

std::string rep_jsonl(Representation const& rep) {
  return "{\"n\":" + to_string(rep.n) + ",\"k\":" + std::to_string(rep.k) +
         ",\"m\":" + std::to_string(rep.m) + ",\"p_start\":" + std::to_string(rep.p_start) + "}";
}

// ---- enumerate -------------------------------------------------------------

struct EnumerateArgs {
  int k = 2;
  std::string from;
  std::string to;
};

void run_enumerate(EnumerateArgs const& a, GlobalOptions const& g, std::ostream& out) {
  auto const iv = make_interval(parse_u128(a.from), parse_u128(a.to));
  auto const format = format_or(g, ReportFormat::kCsv);
  auto const prefix = prefix_covering(a.k, iv.x2 - 1);
  Output o(g.out_path, out);
  auto& s = o.stream();
  enumerate_interval(iv, prefix, [&](Representation const& rep) {
    s << (format == ReportFormat::kCsv ? to_csv(rep) : rep_jsonl(rep)) << '\n';
  });
  o.close();
}

// ---- count -----------------------------------------------------------------

struct CountArgs {
  int k = 2;
  std::string x;
  unsigned workers = 0;
  std::string delta;
};

void run_count(CountArgs const& a, GlobalOptions const& g, std::ostream& out) {
  u128 const x = parse_u128(a.x);
  std::uint64_t total = 0;
  if (a.workers > 0 || !a.delta.empty()) {
    SweepConfig config;
    config.mode = SweepMode::kCount;
    config.k_set = {a.k};
    config.x_max = x + 1;
    config.workers = std::max(1U, a.workers);
    if (!a.delta.empty()) config.delta = parse_u128(a.delta);
    total = run_sweep(config).summary.totals.at(0);
  } else {
    if (a.k < 2) throw DomainError("count: k must be >= 2");
    total = count_exact(x, prefix_covering(a.k, x));
  }
  Output o(g.out_path, out);
  if (format_or(g, ReportFormat::kCsv) == ReportFormat::kCsv) {
    o.stream() << "k,x,count\n" << a.k << ',' << to_string(x) << ',' << total << '\n';
  } else {
    o.stream() << "{\"k\":" << a.k << ",\"x\":" << to_string(x) << ",\"count\":" << total
               << "}\n";
  }
  o.close();
}

// ---- maxlen ----------------------------------------------------------------

struct MaxlenArgs {
  std::vector<int> ks;
  std::vector<std::string> xs;
};

void run_maxlen(MaxlenArgs const& a, GlobalOptions const& g, std::ostream& out) {
  auto const format = format_or(g, ReportFormat::kCsv);
  std::vector<u128> xs;
  for (auto const& text : a.xs) xs.push_back(parse_u128(text));
  Output o(g.out_path, out);
  if (format == ReportFormat::kCsv) o.stream() << "x,k,max_chain\n";
  for (int k : a.ks) {
    if (xs.empty()) break;
    // One prefix reaching past the largest x serves every row of this k.
    auto const prefix = prefix_for_max_chain(k, *std::max_element(xs.begin(), xs.end()));
    for (u128 x : xs) {
      auto const m = max_chain_length(x, prefix);
      if (format == ReportFormat::kCsv) {
        o.stream() << to_string(x) << ',' << k << ',' << m << '\n';
      } else {
        o.stream() << "{\"x\":" << to_string(x) << ",\"k\":" << k << ",\"max_chain\":" << m
                   << "}\n";
      }
    }
  }
  o.close();
}

// ---- bounds-table ----------------------------------------------------------

struct BoundsArgs {
  std::vector<int> ks = {2, 3, 5, 10, 20};
  std::vector<std::string> m0s = {"6", "100", "10000", "1000000"};
};

void run_bounds(BoundsArgs const& a, GlobalOptions const& g, std::ostream& out) {
  SweepConfig config;
  config.mode = SweepMode::kBounds;
  config.k_set = a.ks;
  config.m0_list.clear();
  for (auto const& text : a.m0s) {
    auto const v = parse_u128(text);
    if (v > UINT64_MAX) throw DomainError("M0 too large: " + text);
    config.m0_list.push_back(static_cast<std::uint64_t>(v));
  }
  auto const report = run_sweep(config);
  Output o(g.out_path, out);
  emit_report(report, format_or(g, ReportFormat::kCsv), o.stream());
  o.close();
}

// ---- dups / heuristic ------------------------------------------------------

struct SweepArgs {
  int k = 2;
  int k2 = 0;
  std::string x;
  std::string delta;
  unsigned workers = 1;
  std::string checkpoint;
  std::string summary;
  std::string figure;
  bool model_only = false;
};

SweepConfig sweep_config(SweepArgs const& a, SweepMode same_mode, SweepMode cross_mode) {
  SweepConfig config;
  config.k_set = {a.k};
  config.mode = same_mode;
  if (a.k2 != 0) {
    config.k_set.push_back(a.k2);
    config.mode = cross_mode;
  }
  config.x_max = parse_u128(a.x);
  if (!a.delta.empty()) config.delta = parse_u128(a.delta);
  config.workers = a.workers;
  if (!a.checkpoint.empty()) config.checkpoint_path = a.checkpoint;
  return config;
}

void run_dups(SweepArgs const& a, GlobalOptions const& g, std::ostream& out,
              std::ostream& err) {
  auto const config = sweep_config(a, SweepMode::kDupsSameK, SweepMode::kDupsCrossK);
  auto const report = run_sweep(config);
  Output o(g.out_path, out);
  emit_report(report, format_or(g, ReportFormat::kJsonl), o.stream());
  o.close();
  if (!a.summary.empty()) {
    std::ofstream s(a.summary, std::ios::trunc);
    if (!s) throw IoError("cannot open " + a.summary + " for writing");
    write_summary_csv(report, s);
  }
  if (!a.figure.empty()) {
    std::ofstream f(a.figure, std::ios::trunc);
    if (!f) throw IoError("cannot open " + a.figure + " for writing");
    write_comparison_csv(report, f);
  }
  err << "intervals=" << report.summary.intervals << " resumed=" << report.summary.resumed
      << " same_k=" << report.summary.same_k << " cross_k=" << report.summary.cross_k << '\n';
}

void run_heuristic(SweepArgs const& a, GlobalOptions const& g, std::ostream& out,
                   std::ostream& err) {
  if (a.k2 != 0) {
    auto const model = cross_k_classifier(std::min(a.k, a.k2), std::max(a.k, a.k2));
    err << "cross " << model.k << '-' << model.k_prime << ": " << to_string(model.classification)
        << '\n';
  } else {
    auto const est = same_k_duplicate_density(10.0, a.k);
    err << "same k=" << a.k << ": " << to_string(est.classification) << '\n';
  }
  if (!a.model_only) {
    auto const config = sweep_config(a, SweepMode::kHeuristic, SweepMode::kHeuristic);
    auto const report = run_sweep(config);
    Output o(g.out_path, out);
    write_comparison_csv(report, o.stream());
    o.close();
    return;
  }
  // Model columns only; observed_count is left empty.
  u128 const x_max = parse_u128(a.x);
  Output o(g.out_path, out);
  o.stream() << "x,observed_count,d_of_x,refined_expected\n";
  std::vector<u128> checkpoints;
  for (u128 x = 10; x < x_max; x *= 10) checkpoints.push_back(x);
  checkpoints.push_back(x_max);
  for (u128 x : checkpoints) {
    double const xd = to_double(x);
    double const model =
        a.k2 != 0 ? cross_k_classifier(std::min(a.k, a.k2), std::max(a.k, a.k2))
                        .at(xd)
                        .expected_count_to_x
                  : same_k_duplicate_density(xd, a.k).expected_count_to_x;
    o.stream() << to_string(x) << ",," << six_significant(d_of_x(xd)) << ','
               << six_significant(model) << '\n';
  }
  o.close();
}

// ---- verify ----------------------------------------------------------------

struct VerifyArgs {
  std::string input;
};

void run_verify(VerifyArgs const& a, GlobalOptions const& g, std::ostream& out) {
  std::ifstream in(a.input);
  if (!in) throw IoError("cannot open " + a.input);
  struct Entry {
    std::size_t line = 0;
    std::optional<DuplicateRecord> record;
    std::optional<Representation> rep;
  };
  std::vector<Entry> entries;
  std::string line;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    auto const first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    Entry e;
    e.line = number;
    if (line[first] == '{') {
      e.record = parse_duplicate_jsonl(line);
    } else if (line.rfind("n,", first) == first) {
      continue;  // CSV header
    } else {
      e.rep = parse_representation_csv(line);
    }
    entries.push_back(std::move(e));
  }

  std::uint64_t limit = 2;
  auto widen = [&limit](Representation const& rep) {
    if (rep.k < 1) throw DomainError("verify: k must be >= 1");
    limit = std::max(limit, integer_root(rep.n, rep.k));
  };
  for (auto const& e : entries) {
    if (e.rep) widen(*e.rep);
    if (e.record) {
      for (auto const& rep : e.record->reps) widen(rep);
    }
  }
  auto const table = sieve_primes(limit);

  std::size_t reps = 0;
  auto fail = [&](std::size_t number, std::string const& why) {
    throw DomainError(a.input + ":" + std::to_string(number) + ": " + why);
  };
  for (auto const& e : entries) {
    if (e.rep) {
      if (!verify_by_direct_sum(*e.rep, table)) fail(e.line, "representation does not verify");
      ++reps;
      continue;
    }
    auto const& record = *e.record;
    std::vector<std::uint64_t> lengths;
    for (auto const& rep : record.reps) {
      if (!verify_by_direct_sum(rep, table)) fail(e.line, "representation does not verify");
      lengths.push_back(rep.m);
      ++reps;
    }
    if (record.kind == DuplicateKind::kSameK) {
      if (record.k_values.size() != 1) fail(e.line, "same_k record mixes exponents");
      std::sort(lengths.begin(), lengths.end());
      if (std::adjacent_find(lengths.begin(), lengths.end()) != lengths.end()) {
        fail(e.line, "same_k record repeats a length");
      }
    } else if (record.k_values.size() < 2) {
      fail(e.line, "cross_k record has a single exponent");
    }
  }
  Output o(g.out_path, out);
  o.stream() << "verified " << reps << " representations in " << entries.size()
             << " records\n";
  o.close();
}

}  // namespace

int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Enumerate, count and cross-check sums of k-th powers of consecutive primes"};
  app.require_subcommand(1);
  GlobalOptions g;
  app.add_option("--out", g.out_path, "Write the main output to PATH instead of stdout");
  app.add_option("--format", g.format, "Output format: jsonl or csv")
      ->check(CLI::IsMember({"jsonl", "csv"}));
  app.fallthrough();

  EnumerateArgs enumerate_args;
  auto* enumerate = app.add_subcommand("enumerate", "List representations with from <= n < to");
  enumerate->add_option("--k", enumerate_args.k, "Exponent")->required();
  enumerate->add_option("--from", enumerate_args.from, "Inclusive lower end")->required();
  enumerate->add_option("--to", enumerate_args.to, "Exclusive upper end")->required();

  CountArgs count_args;
  auto* count = app.add_subcommand("count", "s_k(x): representations of integers <= x");
  count->add_option("--k", count_args.k, "Exponent")->required();
  count->add_option("--x", count_args.x, "Bound")->required();
  count->add_option("--workers", count_args.workers, "Count by a parallel interval sweep");
  count->add_option("--delta", count_args.delta, "Interval length for the sweep");

  MaxlenArgs maxlen_args;
  auto* maxlen = app.add_subcommand("maxlen", "M(x,k): longest chain anchored at 2 below x");
  maxlen->add_option("--k", maxlen_args.ks, "Exponent(s)")->required()->delimiter(',');
  maxlen->add_option("--x", maxlen_args.xs, "Bound(s)")->required()->delimiter(',');

  BoundsArgs bounds_args;
  auto* bounds = app.add_subcommand("bounds-table", "Lower and upper constants per (M0, k)");
  bounds->add_option("--k-list", bounds_args.ks, "Exponents")->delimiter(',');
  bounds->add_option("--m0-list", bounds_args.m0s, "Values of M0 (>= 6)")->delimiter(',');

  SweepArgs dups_args;
  auto* dups = app.add_subcommand("dups", "Find integers with several representations");
  dups->add_option("--k", dups_args.k, "Exponent")->required();
  dups->add_option("--k2", dups_args.k2, "Second exponent for cross-k duplicates");
  dups->add_option("--x", dups_args.x, "Sweep [1, x)")->required();
  dups->add_option("--delta", dups_args.delta, "Interval length");
  dups->add_option("--workers", dups_args.workers, "Worker threads")
      ->check(CLI::PositiveNumber);
  dups->add_option("--checkpoint", dups_args.checkpoint, "Checkpoint file for resume");
  dups->add_option("--summary", dups_args.summary, "Write a summary CSV");
  dups->add_option("--figure", dups_args.figure, "Write the d(x) comparison CSV");

  SweepArgs heuristic_args;
  auto* heuristic = app.add_subcommand("heuristic", "Observed duplicates against the density model");
  heuristic->add_option("--k", heuristic_args.k, "Exponent")->required();
  heuristic->add_option("--k2", heuristic_args.k2, "Second exponent");
  heuristic->add_option("--x", heuristic_args.x, "Sweep [1, x)")->required();
  heuristic->add_option("--delta", heuristic_args.delta, "Interval length");
  heuristic->add_option("--workers", heuristic_args.workers, "Worker threads")
      ->check(CLI::PositiveNumber);
  heuristic->add_flag("--model-only", heuristic_args.model_only, "Skip the sweep");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Re-check representations by direct summation");
  verify->add_option("--input", verify_args.input, "CSV representations or JSONL duplicates")
      ->required();

  std::vector<char const*> argv;
  for (auto const& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (CLI::ParseError const& e) {
    std::ostringstream o;
    std::ostringstream e_stream;
    int const code = app.exit(e, o, e_stream);
    out << o.str();
    err << e_stream.str();
    return code == 0 ? 0 : 2;
  }

  try {
    if (*enumerate) run_enumerate(enumerate_args, g, out);
    if (*count) run_count(count_args, g, out);
    if (*maxlen) run_maxlen(maxlen_args, g, out);
    if (*bounds) run_bounds(bounds_args, g, out);
    if (*dups) run_dups(dups_args, g, out, err);
    if (*heuristic) run_heuristic(heuristic_args, g, out, err);
    if (*verify) run_verify(verify_args, g, out);
  } catch (Error const& e) {
    err << "gleeful: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (std::bad_alloc const&) {
    err << "gleeful: out of memory\n";
    return 1;
  }
  return 0;
}

}  // namespace gleeful::cli
