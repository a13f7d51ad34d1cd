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

#include "gleeful/enumeration.h"

#include <algorithm>
#include <charconv>
#include <string>

#include "gleeful/errors.h"

namespace gleeful {
namespace {

template <typename Int>
Int parse_int_field(std::string_view field, std::string_view line) {
  Int v{};
  auto const* end = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(field.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw DomainError("malformed representation record: '" + std::string(line) + "'");
  }
  return v;
}

std::uint64_t resolve_start(Representation const& rep, PrimeTable const& table) {
  auto const primes = table.primes();
  auto it = std::lower_bound(primes.begin(), primes.end(), rep.p_start);
  if (it == primes.end()) {
    throw CoverageError("p_start = " + std::to_string(rep.p_start) +
                        " is beyond the prime table");
  }
  if (*it != rep.p_start) return kUnresolvedIndex;
  return static_cast<std::uint64_t>(it - primes.begin());
}

}  // namespace

Interval make_interval(u128 x1, u128 x2) {
  if (x1 < 1 || x1 >= x2) {
    throw DomainError("invalid interval [" + to_string(x1) + ", " + to_string(x2) +
                      "): need 1 <= x1 < x2");
  }
  return Interval{x1, x2};
}

void check_enumeration_coverage(Interval const& iv, PrefixPowerSums const& prefix) {
  make_interval(iv.x1, iv.x2);
  if (!prefix.covers(iv.x2 - 1)) {
    throw CoverageError("prefix for k = " + std::to_string(prefix.k()) +
                        " (primes to " + std::to_string(prefix.table().limit()) +
                        ") does not cover x2 = " + to_string(iv.x2));
  }
}

std::vector<Representation> enumerate_interval(Interval const& iv,
                                               PrefixPowerSums const& prefix) {
  std::vector<Representation> out;
  enumerate_interval(iv, prefix, [&out](Representation const& rep) { out.push_back(rep); });
  return out;
}

std::uint64_t max_chain_length(u128 x, PrefixPowerSums const& prefix) {
  if (!(prefix.last() > x)) {
    throw CoverageError("max_chain_length: r[" + std::to_string(prefix.ell()) +
                        "] does not exceed x = " + to_string(x));
  }
  auto const r = prefix.values();
  auto it = std::upper_bound(r.begin(), r.end(), x);
  return static_cast<std::uint64_t>(it - r.begin()) - 1;
}

std::uint64_t count_by_length(std::uint64_t m, u128 x,
                              PrefixPowerSums const& prefix) {
  if (m < 1) throw DomainError("count_by_length: m must be >= 1");
  if (!prefix.covers(x)) {
    throw CoverageError("count_by_length: prefix does not cover x = " + to_string(x));
  }
  std::size_t const ell = prefix.ell();
  if (m > ell) return 0;
  auto const r = prefix.values();
  // Length-m chain sums grow with the start index, so the admissible starts
  // form a prefix of [0, ell - m].
  std::size_t lo = 0;
  std::size_t hi = ell - m + 1;
  while (lo < hi) {
    std::size_t const mid = lo + (hi - lo) / 2;
    if (r[mid + m] - r[mid] <= x) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return lo;
}

std::uint64_t count_exact(u128 x, PrefixPowerSums const& prefix) {
  if (!prefix.covers(x)) {
    throw CoverageError("count_exact: prefix does not cover x = " + to_string(x));
  }
  auto const r = prefix.values();
  std::size_t const ell = prefix.ell();
  std::uint64_t total = 0;
  for (std::size_t b = 0; b < ell; ++b) {
    if (r[b + 1] - r[b] > x) break;
    auto const bound = checked_add(r[b], x);
    std::size_t t2 = ell;
    if (bound) {
      t2 = static_cast<std::size_t>(
               std::upper_bound(r.begin() + static_cast<std::ptrdiff_t>(b) + 1,
                                r.end(), *bound) -
               r.begin()) -
           1;
    }
    total += t2 - b;
  }
  return total;
}

bool verify_representation(Representation const& rep, PrefixPowerSums const& prefix) {
  if (rep.k != prefix.k()) {
    throw DomainError("verify_representation: record has k = " + std::to_string(rep.k) +
                      " but the prefix has k = " + std::to_string(prefix.k()));
  }
  std::uint64_t b = rep.b;
  if (b == kUnresolvedIndex) {
    b = resolve_start(rep, prefix.table());
    if (b == kUnresolvedIndex) return false;
  }
  if (rep.m < 1 || b > prefix.ell() || rep.m > prefix.ell() - b) {
    throw DomainError("verify_representation: indices (b = " + std::to_string(b) +
                      ", m = " + std::to_string(rep.m) + ") outside the prefix");
  }
  return prefix.r(b + rep.m) - prefix.r(b) == rep.n &&
         prefix.prime(b + 1) == rep.p_start;
}

bool verify_by_direct_sum(Representation const& rep, PrimeTable const& table) {
  if (rep.k < 1 || rep.m < 1) return false;
  std::uint64_t const b = resolve_start(rep, table);
  if (b == kUnresolvedIndex) return false;
  if (rep.m > table.count() - b) {
    throw CoverageError("verify_by_direct_sum: chain of length " + std::to_string(rep.m) +
                        " from " + std::to_string(rep.p_start) +
                        " runs past the prime table");
  }
  if (rep.b != kUnresolvedIndex && rep.b != b) return false;
  auto const primes = table.primes();
  u128 sum = 0;
  for (std::uint64_t i = 0; i < rep.m; ++i) {
    auto const power = checked_pow(primes[b + i], rep.k);
    if (!power) return false;
    auto const next = checked_add(sum, *power);
    if (!next || *next > rep.n) return false;
    sum = *next;
  }
  return sum == rep.n;
}

std::string to_csv(Representation const& rep) {
  return to_string(rep.n) + ',' + std::to_string(rep.k) + ',' + std::to_string(rep.m) +
         ',' + std::to_string(rep.p_start);
}

Representation parse_representation_csv(std::string_view line) {
  while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
  std::string_view fields[4];
  std::string_view rest = line;
  for (int i = 0; i < 4; ++i) {
    auto comma = rest.find(',');
    if ((i < 3) == (comma == std::string_view::npos)) {
      throw DomainError("malformed representation record: '" + std::string(line) + "'");
    }
    fields[i] = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
  }
  for (char c : fields[0]) {
    if (c < '0' || c > '9') {
      throw DomainError("malformed representation record: '" + std::string(line) + "'");
    }
  }
  Representation rep;
  rep.n = parse_u128(fields[0]);
  rep.k = parse_int_field<int>(fields[1], line);
  rep.m = parse_int_field<std::uint64_t>(fields[2], line);
  rep.p_start = parse_int_field<std::uint64_t>(fields[3], line);
  return rep;
}

}  // namespace gleeful
