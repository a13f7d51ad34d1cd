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

#include "gleeful/duplicates.h"

#include <algorithm>
#include <string>
#include <utility>

#include "gleeful/errors.h"
#include "json.hpp"

namespace gleeful {
namespace {

bool by_n_then_k_then_m(Representation const& a, Representation const& b) {
  if (a.n != b.n) return a.n < b.n;
  if (a.k != b.k) return a.k < b.k;
  return a.m < b.m;
}

std::vector<int> exponents_of(std::vector<Representation> const& reps) {
  std::vector<int> ks;
  for (auto const& rep : reps) ks.push_back(rep.k);
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
  return ks;
}

// Walks runs of equal n (and equal k when `split_by_k`) in a sorted stream;
// `accept` decides whether a run becomes a record.
template <typename Accept>
std::vector<DuplicateRecord> group_runs(std::vector<Representation>& reps,
                                        DuplicateKind kind, bool split_by_k, Accept accept) {
  std::sort(reps.begin(), reps.end(), by_n_then_k_then_m);
  std::vector<DuplicateRecord> out;
  for (std::size_t i = 0; i < reps.size();) {
    std::size_t j = i + 1;
    while (j < reps.size() && reps[j].n == reps[i].n && (!split_by_k || reps[j].k == reps[i].k)) {
      ++j;
    }
    if (j - i >= 2) {
      std::vector<Representation> run(reps.begin() + static_cast<std::ptrdiff_t>(i),
                                      reps.begin() + static_cast<std::ptrdiff_t>(j));
      auto ks = exponents_of(run);
      if (accept(ks)) {
        out.push_back(DuplicateRecord{reps[i].n, kind, std::move(run), std::move(ks)});
      }
    }
    i = j;
  }
  return out;
}

[[noreturn]] void bad_record(std::string_view line, std::string const& why) {
  throw DomainError("malformed duplicate record (" + why + "): '" + std::string(line) +
                    "'");
}

}  // namespace

char const* to_string(DuplicateKind kind) noexcept {
  return kind == DuplicateKind::kSameK ? "same_k" : "cross_k";
}

std::vector<DuplicateRecord> collect_same_k(std::vector<Representation> reps) {
  return group_runs(reps, DuplicateKind::kSameK, true, [](std::vector<int> const&) { return true; });
}

std::vector<DuplicateRecord> collect_cross_k(std::vector<Representation> reps) {
  return group_runs(reps, DuplicateKind::kCrossK, false,
                    [](std::vector<int> const& ks) { return ks.size() >= 2; });
}

std::vector<DuplicateRecord> find_same_k_duplicates(Interval const& iv,
                                                    PrefixPowerSums const& prefix) {
  return collect_same_k(enumerate_interval(iv, prefix));
}

std::vector<DuplicateRecord> find_cross_k_duplicates(Interval const& iv,
                                                     PrefixPowerSums const& first,
                                                     PrefixPowerSums const& second) {
  if (first.k() == second.k()) {
    throw DomainError("find_cross_k_duplicates: exponents must differ (both are " +
                      std::to_string(first.k()) + ")");
  }
  auto const& low = first.k() < second.k() ? first : second;
  auto const& high = first.k() < second.k() ? second : first;
  auto reps = enumerate_interval(iv, low);
  enumerate_interval(iv, high, [&reps](Representation const& rep) { reps.push_back(rep); });
  return collect_cross_k(std::move(reps));
}

MergedDuplicates merge_reports(std::vector<IntervalDuplicates> reports) {
  std::sort(reports.begin(), reports.end(), [](auto const& a, auto const& b) {
    return a.interval.x1 < b.interval.x1;
  });
  for (std::size_t i = 1; i < reports.size(); ++i) {
    if (reports[i].interval.x1 < reports[i - 1].interval.x2) {
      throw DomainError("merge_reports: intervals [" + to_string(reports[i - 1].interval.x1) +
                        ", " + to_string(reports[i - 1].interval.x2) + ") and [" +
                        to_string(reports[i].interval.x1) + ", " +
                        to_string(reports[i].interval.x2) + ") overlap");
    }
  }
  MergedDuplicates merged;
  for (auto& report : reports) {
    for (auto& record : report.records) {
      if (record.kind == DuplicateKind::kSameK) {
        ++merged.same_k;
      } else {
        ++merged.cross_k;
      }
      merged.records.push_back(std::move(record));
    }
  }
  std::stable_sort(merged.records.begin(), merged.records.end(),
                   [](auto const& a, auto const& b) { return a.n < b.n; });
  return merged;
}

std::string to_jsonl(DuplicateRecord const& record) {
  std::string out = "{\"n\":" + to_string(record.n) + ",\"kind\":\"" +
                    to_string(record.kind) + "\",\"reps\":[";
  for (std::size_t i = 0; i < record.reps.size(); ++i) {
    auto const& rep = record.reps[i];
    if (i) out += ',';
    out += "{\"k\":" + std::to_string(rep.k) + ",\"m\":" + std::to_string(rep.m) +
           ",\"p_start\":" + std::to_string(rep.p_start) + '}';
  }
  out += "]}";
  return out;
}

DuplicateRecord parse_duplicate_jsonl(std::string_view line) {
  try {
    auto const j = nlohmann::json::parse(line);
    if (!j.is_object() || !j.contains("n") || !j.contains("kind") || !j.contains("reps")) {
      bad_record(line, "missing field");
    }
    if (!j["n"].is_number_unsigned()) bad_record(line, "n must be an integer below 2^64");
    DuplicateRecord record;
    record.n = j["n"].get<std::uint64_t>();
    auto const kind = j["kind"].get<std::string>();
    if (kind == "same_k") {
      record.kind = DuplicateKind::kSameK;
    } else if (kind == "cross_k") {
      record.kind = DuplicateKind::kCrossK;
    } else {
      bad_record(line, "unknown kind");
    }
    if (!j["reps"].is_array()) bad_record(line, "reps must be an array");
    for (auto const& r : j["reps"]) {
      if (!r.is_object() || !r.contains("k") || !r.contains("m") || !r.contains("p_start")) {
        bad_record(line, "representation fields");
      }
      Representation rep;
      rep.n = record.n;
      rep.k = r["k"].get<int>();
      rep.m = r["m"].get<std::uint64_t>();
      rep.p_start = r["p_start"].get<std::uint64_t>();
      record.reps.push_back(rep);
    }
    if (record.reps.size() < 2) bad_record(line, "fewer than two representations");
    record.k_values = exponents_of(record.reps);
    return record;
  } catch (nlohmann::json::exception const& e) {
    bad_record(line, e.what());
  }
}

std::vector<DuplicateRecord> read_duplicate_report(std::istream& in) {
  std::vector<DuplicateRecord> records;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    records.push_back(parse_duplicate_jsonl(line));
  }
  return records;
}

}  // namespace gleeful
