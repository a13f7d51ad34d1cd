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

#ifndef GLEEFUL_INT128_H_
#define GLEEFUL_INT128_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace gleeful {

// Chain sums up to 10^20 exceed 64 bits; every sum in the library is kept
// in this type.
using u128 = unsigned __int128;

inline constexpr u128 kU128Max = ~u128{0};

inline std::optional<u128> checked_add(u128 a, u128 b) {
  u128 const s = a + b;
  if (s < a) return std::nullopt;
  return s;
}

inline std::optional<u128> checked_mul(u128 a, u128 b) {
  if (a != 0 && b > kU128Max / a) return std::nullopt;
  return a * b;
}

// base^exponent by binary exponentiation, overflow-checked at every
// squaring and multiply. nullopt when the result does not fit.
std::optional<u128> checked_pow(std::uint64_t base, int exponent);

// Saturating variant of checked_pow.
u128 saturating_pow(std::uint64_t base, int exponent);

// Largest r with r^exponent <= value. exponent >= 1.
std::uint64_t integer_root(u128 value, int exponent);

std::string to_string(u128 value);

// Accepts plain decimal ("23939"), powers of ten ("10^14") and scientific
// notation with an exact integer value ("4.3e14", "1e10"). Throws
// DomainError on anything else, including values that do not fit.
u128 parse_u128(std::string_view text);

inline double to_double(u128 value) { return static_cast<double>(value); }

}  // namespace gleeful

#endif  // GLEEFUL_INT128_H_
