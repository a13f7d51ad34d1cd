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

#ifndef GLEEFUL_DUPLICATES_H_
#define GLEEFUL_DUPLICATES_H_

#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "gleeful/enumeration.h"
#include "gleeful/int128.h"
#include "gleeful/primes.h"

namespace gleeful {

enum class DuplicateKind { kSameK, kCrossK };

char const* to_string(DuplicateKind kind) noexcept;

// An integer with at least two representations. Representations are kept
// in full so a report certifies itself; they are ordered by (k, m).
struct DuplicateRecord {
  u128 n = 0;
  DuplicateKind kind = DuplicateKind::kSameK;
  std::vector<Representation> reps;
  std::vector<int> k_values;

  friend bool operator==(DuplicateRecord const&, DuplicateRecord const&) = default;
};

// Groups a stream of representations of one exponent into same-k
// duplicate records, sorted by n.
std::vector<DuplicateRecord> collect_same_k(std::vector<Representation> reps);

// Groups a stream mixing two exponents into cross-k records: runs of equal n
// holding at least two distinct exponents.
std::vector<DuplicateRecord> collect_cross_k(std::vector<Representation> reps);

// Integers in iv with two or more k-representations (necessarily of
// different lengths), sorted by n.
//
// Every representation of n lies in n's interval, so per-interval detection
// is complete and no matching across interval boundaries is needed.
std::vector<DuplicateRecord> find_same_k_duplicates(Interval const& iv,
                                                    PrefixPowerSums const& prefix);

// Integers in iv represented under both exponents. The prefixes may be
// passed in either order; equal exponents are a DomainError.
std::vector<DuplicateRecord> find_cross_k_duplicates(Interval const& iv,
                                                     PrefixPowerSums const& first,
                                                     PrefixPowerSums const& second);

struct IntervalDuplicates {
  Interval interval;
  std::vector<DuplicateRecord> records;
};

struct MergedDuplicates {
  std::vector<DuplicateRecord> records;
  std::size_t same_k = 0;
  std::size_t cross_k = 0;
};

// Concatenates per-interval results sorted by n. Overlapping intervals are
// a DomainError since they would double count.
MergedDuplicates merge_reports(std::vector<IntervalDuplicates> reports);

// {"n":...,"kind":"same_k"|"cross_k","reps":[{"k":..,"m":..,"p_start":..},...]}
std::string to_jsonl(DuplicateRecord const& record);
DuplicateRecord parse_duplicate_jsonl(std::string_view line);

// Reads a whole JSONL report; blank lines are skipped.
std::vector<DuplicateRecord> read_duplicate_report(std::istream& in);

}  // namespace gleeful

#endif  // GLEEFUL_DUPLICATES_H_
