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

#include "gleeful/primes.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstring>
#include <fstream>
#include <random>
#include <string>
#include <utility>

#include "gleeful/errors.h"

namespace gleeful {
namespace {

constexpr std::size_t kSegmentOdds = std::size_t{1} << 18;

constexpr std::array<char, 8> kCacheMagic = {'G', 'L', 'E', 'E',
                                              'F', 'P', 'F', 'X'};
constexpr std::uint32_t kCacheVersion = 1;

void put_u64(std::ostream& out, std::uint64_t v) {
  std::array<char, 8> bytes;
  for (int i = 0; i < 8; ++i) bytes[i] = static_cast<char>((v >> (8 * i)) & 0xFF);
  out.write(bytes.data(), bytes.size());
}

void put_u32(std::ostream& out, std::uint32_t v) {
  std::array<char, 4> bytes;
  for (int i = 0; i < 4; ++i) bytes[i] = static_cast<char>((v >> (8 * i)) & 0xFF);
  out.write(bytes.data(), bytes.size());
}

template <typename T>
T get_le(std::istream& in) {
  std::array<unsigned char, sizeof(T)> bytes;
  if (!in.read(reinterpret_cast<char*>(bytes.data()), bytes.size())) {
    throw IoError("prefix cache: truncated file");
  }
  T v = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) v |= static_cast<T>(bytes[i]) << (8 * i);
  return v;
}

u128 first_missing_power(int k, PrimeTable const& table, std::size_t ell) {
  if (ell < table.count()) return saturating_pow(table.prime(ell + 1), k);
  return saturating_pow(table.limit() + 1, k);
}

}  // namespace

PrimeTable::PrimeTable(std::uint64_t limit, std::vector<std::uint64_t> primes)
    : limit_(limit), primes_(std::move(primes)) {}

std::size_t PrimeTable::count_le(std::uint64_t v) const {
  return static_cast<std::size_t>(
      std::upper_bound(primes_.begin(), primes_.end(), v) - primes_.begin());
}

PrimeTable sieve_primes(std::uint64_t limit) {
  if (limit < 2) throw DomainError("sieve_primes: limit must be >= 2");
  if (limit > (std::uint64_t{1} << 62)) {
    throw DomainError("sieve_primes: limit too large");
  }
  std::vector<std::uint64_t> primes;
  auto const estimate = 1.26 * static_cast<double>(limit) /
                        std::log(static_cast<double>(std::max<std::uint64_t>(limit, 3)));
  primes.reserve(static_cast<std::size_t>(estimate) + 16);
  primes.push_back(2);
  if (limit < 3) return PrimeTable(limit, std::move(primes));

  // Odd base primes up to sqrt(limit).
  std::uint64_t const root = integer_root(limit, 2);
  std::vector<std::uint8_t> small(root + 1, 1);
  std::vector<std::uint64_t> base;
  for (std::uint64_t i = 3; i <= root; i += 2) {
    if (!small[i]) continue;
    base.push_back(i);
    for (std::uint64_t j = i * i; j <= root; j += 2 * i) small[j] = 0;
  }
  std::vector<std::uint64_t> next(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) next[i] = base[i] * base[i];

  // Slot i of a segment stands for the odd number low + 2i.
  std::vector<std::uint8_t> segment(kSegmentOdds);
  for (std::uint64_t low = 3; low <= limit; low += 2 * kSegmentOdds) {
    std::uint64_t const high = std::min<std::uint64_t>(limit, low + 2 * kSegmentOdds - 1);
    std::size_t const slots = static_cast<std::size_t>((high - low) / 2 + 1);
    std::fill_n(segment.begin(), slots, std::uint8_t{1});
    for (std::size_t i = 0; i < base.size(); ++i) {
      std::uint64_t const p = base[i];
      if (p * p > high) break;
      std::uint64_t j = next[i];
      for (; j <= high; j += 2 * p) segment[(j - low) / 2] = 0;
      next[i] = j;
    }
    for (std::size_t i = 0; i < slots; ++i) {
      if (segment[i]) primes.push_back(low + 2 * i);
    }
  }
  return PrimeTable(limit, std::move(primes));
}

std::shared_ptr<PrimeTable const> make_prime_table(std::uint64_t limit) {
  return std::make_shared<PrimeTable const>(sieve_primes(limit));
}

std::size_t prime_count_at(PrimeTable const& table, double t) {
  if (std::isnan(t)) throw DomainError("prime_count_at: t is NaN");
  if (t > static_cast<double>(table.limit())) {
    throw CoverageError("prime_count_at: t = " + std::to_string(t) +
                        " exceeds the table limit " +
                        std::to_string(table.limit()));
  }
  if (t < 2.0) return 0;
  return table.count_le(static_cast<std::uint64_t>(std::floor(t)));
}

PrefixPowerSums::PrefixPowerSums(int k, std::shared_ptr<PrimeTable const> table,
                                 std::vector<u128> r)
    : k_(k), table_(std::move(table)), r_(std::move(r)) {
  if (r_.empty() || r_.front() != 0) {
    throw DomainError("PrefixPowerSums: r must start with r[0] = 0");
  }
  if (r_.size() - 1 > table_->count()) {
    throw DomainError("PrefixPowerSums: more entries than primes");
  }
  first_missing_ = gleeful::first_missing_power(k_, *table_, r_.size() - 1);
}

std::size_t PrefixPowerSums::primes_with_power_at_most(u128 v) const {
  std::uint64_t const root = integer_root(v, k_);
  return std::min(table_->count_le(root), ell());
}

PrefixPowerSums build_prefix(int k, std::shared_ptr<PrimeTable const> table,
                             std::optional<u128> stop_above) {
  if (k < 2) throw DomainError("build_prefix: k must be >= 2");
  if (!table || table->count() == 0) {
    throw DomainError("build_prefix: empty prime table");
  }
  std::vector<u128> r;
  r.reserve(table->count() + 1);
  r.push_back(0);
  auto const primes = table->primes();
  for (std::size_t j = 1; j <= primes.size(); ++j) {
    auto const power = checked_pow(primes[j - 1], k);
    if (!power) {
      throw OverflowError("build_prefix: p_" + std::to_string(j) + "^" +
                          std::to_string(k) + " exceeds 128 bits");
    }
    auto const sum = checked_add(r.back(), *power);
    if (!sum) {
      throw OverflowError("build_prefix: r[" + std::to_string(j) +
                          "] exceeds 128 bits");
    }
    r.push_back(*sum);
    if (stop_above && *sum > *stop_above) break;
  }
  return PrefixPowerSums(k, std::move(table), std::move(r));
}

PrefixPowerSums prefix_covering(int k, u128 v) {
  if (k < 2) throw DomainError("prefix_covering: k must be >= 2");
  std::uint64_t const limit = std::max<std::uint64_t>(2, integer_root(v, k));
  return build_prefix(k, make_prime_table(limit));
}

PrefixPowerSums prefix_for_max_chain(int k, u128 x) {
  if (k < 2) throw DomainError("prefix_for_max_chain: k must be >= 2");
  for (std::uint64_t limit = 64;; limit *= 2) {
    auto prefix = build_prefix(k, make_prime_table(limit), x);
    if (prefix.last() > x) return prefix;
  }
}

void save_prefix_cache(std::filesystem::path const& path,
                       PrefixPowerSums const& prefix) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open prefix cache for writing: " + path.string());
  out.write(kCacheMagic.data(), kCacheMagic.size());
  put_u32(out, kCacheVersion);
  put_u32(out, static_cast<std::uint32_t>(prefix.k()));
  put_u64(out, prefix.table().limit());
  put_u64(out, prefix.ell());
  for (u128 v : prefix.values()) {
    put_u64(out, static_cast<std::uint64_t>(v));
    put_u64(out, static_cast<std::uint64_t>(v >> 64));
  }
  if (!out.flush()) throw IoError("failed writing prefix cache: " + path.string());
}

PrefixPowerSums load_prefix_cache(std::filesystem::path const& path,
                                  std::shared_ptr<PrimeTable const> table) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open prefix cache: " + path.string());
  std::array<char, 8> magic;
  if (!in.read(magic.data(), magic.size()) || magic != kCacheMagic) {
    throw IoError("prefix cache: bad magic in " + path.string());
  }
  auto const version = get_le<std::uint32_t>(in);
  if (version != kCacheVersion) {
    throw IoError("prefix cache: unsupported version " + std::to_string(version));
  }
  auto const k = static_cast<int>(get_le<std::uint32_t>(in));
  auto const limit = get_le<std::uint64_t>(in);
  auto const count = get_le<std::uint64_t>(in);
  if (k < 2) throw IoError("prefix cache: invalid exponent");
  if (limit != table->limit() || count > table->count()) {
    throw IoError("prefix cache: header does not match the prime table (limit " +
                  std::to_string(limit) + ", count " + std::to_string(count) + ")");
  }
  std::vector<u128> r(count + 1);
  for (auto& v : r) {
    auto const lo = get_le<std::uint64_t>(in);
    auto const hi = get_le<std::uint64_t>(in);
    v = (static_cast<u128>(hi) << 64) | lo;
  }
  if (in.peek() != std::char_traits<char>::eof()) {
    throw IoError("prefix cache: trailing bytes in " + path.string());
  }
  if (r[0] != 0) throw IoError("prefix cache: r[0] != 0");
  if (count > 0) {
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ count);
    std::uniform_int_distribution<std::uint64_t> pick(1, count);
    for (int i = 0; i < 3; ++i) {
      auto const j = pick(rng);
      auto const power = checked_pow(table->prime(j), k);
      if (!power || r[j] - r[j - 1] != *power || r[j] < r[j - 1]) {
        throw IoError("prefix cache: recurrence check failed at j = " +
                      std::to_string(j));
      }
    }
  }
  return PrefixPowerSums(k, std::move(table), std::move(r));
}

}  // namespace gleeful
