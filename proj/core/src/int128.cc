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

#include "gleeful/int128.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "gleeful/errors.h"

namespace gleeful {
namespace {

std::optional<u128> parse_digits(std::string_view digits) {
  if (digits.empty()) return std::nullopt;
  u128 value = 0;
  for (char c : digits) {
    if (c < '0' || c > '9') return std::nullopt;
    auto v = checked_mul(value, 10);
    if (!v) return std::nullopt;
    v = checked_add(*v, static_cast<u128>(c - '0'));
    if (!v) return std::nullopt;
    value = *v;
  }
  return value;
}

std::optional<u128> scale_pow10(u128 value, unsigned exponent) {
  for (unsigned i = 0; i < exponent; ++i) {
    auto v = checked_mul(value, 10);
    if (!v) return std::nullopt;
    value = *v;
  }
  return value;
}

[[noreturn]] void bad_number(std::string_view text) {
  throw DomainError("not a non-negative integer that fits in 128 bits: '" +
                    std::string(text) + "'");
}

}  // namespace

std::optional<u128> checked_pow(std::uint64_t base, int exponent) {
  if (exponent < 0) return std::nullopt;
  u128 result = 1;
  u128 square = base;
  unsigned e = static_cast<unsigned>(exponent);
  while (true) {
    if (e & 1U) {
      auto r = checked_mul(result, square);
      if (!r) return std::nullopt;
      result = *r;
    }
    e >>= 1U;
    if (e == 0) break;
    auto s = checked_mul(square, square);
    if (!s) return std::nullopt;
    square = *s;
  }
  return result;
}

u128 saturating_pow(std::uint64_t base, int exponent) {
  return checked_pow(base, exponent).value_or(kU128Max);
}

std::uint64_t integer_root(u128 value, int exponent) {
  if (exponent <= 0) throw DomainError("integer_root: exponent must be >= 1");
  if (exponent == 1) {
    if (value > UINT64_MAX) throw OverflowError("integer_root: root exceeds 64 bits");
    return static_cast<std::uint64_t>(value);
  }
  auto guess = static_cast<std::uint64_t>(
      std::pow(to_double(value), 1.0 / static_cast<double>(exponent)));
  auto fits = [&](std::uint64_t r) {
    auto p = checked_pow(r, exponent);
    return p && *p <= value;
  };
  while (guess > 0 && !fits(guess)) --guess;
  while (fits(guess + 1)) ++guess;
  return guess;
}

std::string to_string(u128 value) {
  if (value == 0) return "0";
  std::string out;
  while (value != 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

u128 parse_u128(std::string_view text) {
  if (auto caret = text.find('^'); caret != std::string_view::npos) {
    auto base = parse_digits(text.substr(0, caret));
    auto exp = parse_digits(text.substr(caret + 1));
    if (!base || !exp || *exp > 256 || *base > UINT64_MAX) bad_number(text);
    auto v = checked_pow(static_cast<std::uint64_t>(*base),
                         static_cast<int>(*exp));
    if (!v) bad_number(text);
    return *v;
  }
  auto e_pos = text.find_first_of("eE");
  if (e_pos == std::string_view::npos) {
    auto v = parse_digits(text);
    if (!v) bad_number(text);
    return *v;
  }
  std::string_view mantissa = text.substr(0, e_pos);
  auto exp = parse_digits(text.substr(e_pos + 1));
  if (!exp || *exp > 64) bad_number(text);
  std::string digits;
  std::size_t fraction_digits = 0;
  if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
    digits = std::string(mantissa.substr(0, dot));
    auto frac = mantissa.substr(dot + 1);
    while (!frac.empty() && frac.back() == '0') frac.remove_suffix(1);
    digits += frac;
    fraction_digits = frac.size();
  } else {
    digits = std::string(mantissa);
  }
  if (fraction_digits > *exp) bad_number(text);
  auto v = parse_digits(digits);
  if (!v) bad_number(text);
  auto scaled = scale_pow10(*v, static_cast<unsigned>(*exp - fraction_digits));
  if (!scaled) bad_number(text);
  return *scaled;
}

}  // namespace gleeful
