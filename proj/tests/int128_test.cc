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

#include <gtest/gtest.h>

#include <random>

#include "gleeful/errors.h"

namespace gleeful {
namespace {

TEST(Int128, ParseForms) {
  EXPECT_EQ(parse_u128("23939"), u128{23939});
  EXPECT_EQ(parse_u128("10^14"), u128{100000000000000ULL});
  EXPECT_EQ(parse_u128("1e10"), u128{10000000000ULL});
  EXPECT_EQ(parse_u128("4.3e14"), u128{430000000000000ULL});
  EXPECT_EQ(to_string(parse_u128("10^20")), "100000000000000000000");
  EXPECT_EQ(to_string(parse_u128("137610738498311684")), "137610738498311684");
}

TEST(Int128, ParseRejectsGarbage) {
  EXPECT_THROW(parse_u128(""), DomainError);
  EXPECT_THROW(parse_u128("-5"), DomainError);
  EXPECT_THROW(parse_u128("1.25e1"), DomainError);
  EXPECT_THROW(parse_u128("12x"), DomainError);
  EXPECT_THROW(parse_u128("10^39"), DomainError);
  EXPECT_THROW(parse_u128("999999999999999999999999999999999999999999"), DomainError);
}

TEST(Int128, CheckedPowDetectsOverflow) {
  EXPECT_EQ(*checked_pow(2, 127), u128{1} << 127);
  EXPECT_FALSE(checked_pow(2, 128).has_value());
  EXPECT_FALSE(checked_pow(3, 100).has_value());
  EXPECT_EQ(*checked_pow(7, 0), u128{1});
  EXPECT_EQ(saturating_pow(3, 100), kU128Max);
}

TEST(Int128, IntegerRootIsExact) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    int const k = 2 + static_cast<int>(rng() % 11);
    u128 const v = (static_cast<u128>(rng()) << (rng() % 60)) | rng();
    auto const r = integer_root(v, k);
    ASSERT_LE(*checked_pow(r, k), v);
    auto const next = checked_pow(r + 1, k);
    ASSERT_TRUE(!next || *next > v);
  }
  EXPECT_EQ(integer_root(99, 2), 9U);
  EXPECT_EQ(integer_root(100, 2), 10U);
  EXPECT_EQ(integer_root(parse_u128("10^20"), 2), 10000000000ULL);
}

}  // namespace
}  // namespace gleeful
