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

#ifndef GLEEFUL_PRIMES_H_
#define GLEEFUL_PRIMES_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "gleeful/int128.h"

namespace gleeful {

// The primes up to an inclusive limit, in increasing order. Immutable once
// built; share it across threads through a shared_ptr<const PrimeTable>.
class PrimeTable {
 public:
  PrimeTable(std::uint64_t limit, std::vector<std::uint64_t> primes);

  std::uint64_t limit() const noexcept { return limit_; }
  std::size_t count() const noexcept { return primes_.size(); }
  std::span<std::uint64_t const> primes() const noexcept { return primes_; }

  // p_j with p_1 = 2.
  std::uint64_t prime(std::size_t j) const { return primes_.at(j - 1); }

  // pi(v) for an integer v <= limit().
  std::size_t count_le(std::uint64_t v) const;

 private:
  std::uint64_t limit_;
  std::vector<std::uint64_t> primes_;
};

// Segmented sieve of Eratosthenes over odd numbers. limit >= 2.
PrimeTable sieve_primes(std::uint64_t limit);

std::shared_ptr<PrimeTable const> make_prime_table(std::uint64_t limit);

// pi(t) for real t. Throws CoverageError when t exceeds the table limit.
std::size_t prime_count_at(PrimeTable const& table, double t);

// Prefix sums of k-th prime powers: r[0] = 0, r[j] = r[j-1] + p_j^k.
//
// The array holds the shared prime table so each entry r[j] can be mapped
// back to p_j. `covers(v)` is exact: it is true iff every prime p with
// p^k <= v has its term in the array, which is what chain enumeration and
// counting up to v require.
class PrefixPowerSums {
 public:
  PrefixPowerSums(int k, std::shared_ptr<PrimeTable const> table,
                  std::vector<u128> r);

  int k() const noexcept { return k_; }
  // Number of primes with a term in r.
  std::size_t ell() const noexcept { return r_.size() - 1; }
  u128 r(std::size_t j) const noexcept { return r_[j]; }
  std::span<u128 const> values() const noexcept { return r_; }
  u128 last() const noexcept { return r_.back(); }

  std::uint64_t prime(std::size_t j) const { return table_->prime(j); }
  PrimeTable const& table() const noexcept { return *table_; }
  std::shared_ptr<PrimeTable const> const& shared_table() const noexcept {
    return table_;
  }

  // Smallest k-th prime power that is not represented (saturating).
  u128 first_missing_power() const noexcept { return first_missing_; }
  bool covers(u128 v) const noexcept { return v < first_missing_; }

  // Number of primes p in r with p^k <= v.
  std::size_t primes_with_power_at_most(u128 v) const;

 private:
  int k_;
  std::shared_ptr<PrimeTable const> table_;
  std::vector<u128> r_;
  u128 first_missing_;
};

// Builds r[] over every prime of the table. With `stop_above`, stops after
// the first entry that exceeds it, which is all max_chain_length needs.
// Throws OverflowError naming the index j whose power or partial sum does
// not fit in 128 bits.
PrefixPowerSums build_prefix(int k, std::shared_ptr<PrimeTable const> table,
                             std::optional<u128> stop_above = std::nullopt);

// Sieves to floor(v^(1/k)) and builds the full prefix, so the result
// covers v.
PrefixPowerSums prefix_covering(int k, u128 v);

// Smallest-effort prefix whose last entry exceeds x (chains anchored at 2).
PrefixPowerSums prefix_for_max_chain(int k, u128 x);

// Binary cache: header {magic, version, k, limit, count} followed by the
// count+1 entries of r as little-endian 128-bit words.
void save_prefix_cache(std::filesystem::path const& path,
                       PrefixPowerSums const& prefix);

// Validates the header against `table` and spot-checks three recurrence
// entries. Throws IoError on a malformed or mismatched file.
PrefixPowerSums load_prefix_cache(std::filesystem::path const& path,
                                  std::shared_ptr<PrimeTable const> table);

}  // namespace gleeful

#endif  // GLEEFUL_PRIMES_H_
