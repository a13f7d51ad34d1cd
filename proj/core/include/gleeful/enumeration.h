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

#ifndef GLEEFUL_ENUMERATION_H_
#define GLEEFUL_ENUMERATION_H_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "gleeful/int128.h"
#include "gleeful/primes.h"

namespace gleeful {

// Half-open range [x1, x2) of integers, 1 <= x1 < x2.
struct Interval {
  u128 x1 = 1;
  u128 x2 = 2;

  friend bool operator==(Interval const&, Interval const&) = default;
};

// Throws DomainError unless 1 <= x1 < x2.
Interval make_interval(u128 x1, u128 x2);

inline constexpr std::uint64_t kUnresolvedIndex =
    std::numeric_limits<std::uint64_t>::max();

// n = p_{b+1}^k + ... + p_{b+m}^k = r[b+m] - r[b].
//
// `b` is derivable from `p_start`; records read back from text carry
// kUnresolvedIndex until resolved against a prime table, and equality
// ignores it.
struct Representation {
  u128 n = 0;
  int k = 0;
  std::uint64_t b = kUnresolvedIndex;
  std::uint64_t m = 0;
  std::uint64_t p_start = 0;

  friend bool operator==(Representation const& a, Representation const& b) {
    return a.n == b.n && a.k == b.k && a.m == b.m && a.p_start == b.p_start;
  }
};

// Loop counters of one enumerate_interval call. The start pointer only moves
// forward, so pointer_advances never exceeds ell.
struct EnumerationStats {
  std::size_t ell = 0;
  std::uint64_t pointer_advances = 0;
  std::uint64_t inner_steps = 0;
  std::uint64_t emitted = 0;
};

// Throws DomainError for an invalid interval and CoverageError when the
// prefix misses a prime whose k-th power is below iv.x2.
void check_enumeration_coverage(Interval const& iv, PrefixPowerSums const& prefix);

// Emits every chain sum n = r[t] - r[b] with iv.x1 <= n < iv.x2, outer loop
// on b ascending, inner loop on t ascending. `sink` is called with each
// Representation.
template <typename Sink>
EnumerationStats enumerate_interval(Interval const& iv,
                                    PrefixPowerSums const& prefix, Sink&& sink) {
  check_enumeration_coverage(iv, prefix);
  auto const r = prefix.values();
  auto const primes = prefix.table().primes();
  EnumerationStats stats;
  std::size_t const ell = prefix.primes_with_power_at_most(iv.x2 - 1);
  stats.ell = ell;

  std::size_t ts = 1;
  for (std::size_t b = 0; b <= ell; ++b) {
    while (ts <= ell && ts <= b) {
      ++ts;
      ++stats.pointer_advances;
    }
    while (ts <= ell && r[ts] - r[b] < iv.x1) {
      ++ts;
      ++stats.pointer_advances;
    }
    for (std::size_t t = ts; t <= ell; ++t) {
      ++stats.inner_steps;
      u128 const n = r[t] - r[b];
      if (n >= iv.x2) break;
      sink(Representation{n, prefix.k(), b, t - b, primes[b]});
      ++stats.emitted;
    }
  }
  return stats;
}

std::vector<Representation> enumerate_interval(Interval const& iv,
                                               PrefixPowerSums const& prefix);

// M(x,k): the M with r[M] <= x < r[M+1]. Needs prefix.last() > x.
std::uint64_t max_chain_length(u128 x, PrefixPowerSums const& prefix);

// s_{k,m}(x): number of starts whose length-m chain sum is <= x.
std::uint64_t count_by_length(std::uint64_t m, u128 x,
                              PrefixPowerSums const& prefix);

// s_k(x): all representations of integers <= x, one binary search per
// start index.
std::uint64_t count_exact(u128 x, PrefixPowerSums const& prefix);

// True iff r[b+m] - r[b] == n and p_{b+1} == p_start. An unresolved b is
// looked up from p_start.
bool verify_representation(Representation const& rep,
                           PrefixPowerSums const& prefix);

// Independent audit: sums p^k directly over the m consecutive primes of
// `table` starting at p_start. Throws CoverageError if the chain runs past
// the table.
bool verify_by_direct_sum(Representation const& rep, PrimeTable const& table);

// "n,k,m,p_start" in decimal.
std::string to_csv(Representation const& rep);
Representation parse_representation_csv(std::string_view line);

}  // namespace gleeful

#endif  // GLEEFUL_ENUMERATION_H_
