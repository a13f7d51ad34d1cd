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

#include "gleeful/bounds.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "gleeful/enumeration.h"
#include "gleeful/errors.h"

namespace gleeful {
namespace {

// |value - reference| within one unit of the reference value's 6th significant
// figure.
::testing::AssertionResult SixFigures(double value, double reference) {
  double const unit = std::pow(10.0, std::floor(std::log10(std::fabs(reference))) - 5);
  if (std::fabs(value - reference) <= unit) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << value << " vs reference " << reference;
}

struct ReferenceCell {
  int k;
  std::uint64_t m0;
  double lower;
  double upper;
};

// Reference constants at six significant figures.
std::vector<ReferenceCell> const kReference = {
    {2, 6, 0.391504, 14.2423},   {2, 100, 1.71182, 12.1097},
    {2, 10000, 2.39745, 11.6778}, {2, 1000000, 2.7343, 11.5116},
    {3, 6, 0.580731, 23.4232},   {3, 100, 2.72032, 18.7705},
    {3, 10000, 3.93987, 17.7299}, {3, 1000000, 4.5675, 17.3147},
    {5, 6, 1.09023, 63.156},     {5, 100, 5.47127, 48.0799},
    {5, 10000, 8.19445, 44.4013}, {5, 1000000, 9.6564, 42.8989},
    {10, 6, 3.10821, 249.625},   {10, 100, 16.6068, 182.224},
    {10, 10000, 25.6426, 164.599}, {10, 1000000, 30.6698, 157.311},
    {20, 6, 10.3113, 1009.68},   {20, 100, 57.0995, 720.629},
    {20, 10000, 89.7176, 642.315}, {20, 1000000, 108.222, 609.797},
};

TEST(EvalConstants, ReproducesReferenceTable) {
  for (auto const& cell : kReference) {
    auto const c = eval_constants({cell.k, cell.m0});
    EXPECT_TRUE(SixFigures(c.lower_constant, cell.lower)) << cell.k << "," << cell.m0;
    EXPECT_TRUE(SixFigures(c.upper_constant, cell.upper)) << cell.k << "," << cell.m0;
  }
}

TEST(EvalConstants, Relations) {
  for (int k : {2, 3, 5, 10, 20}) {
    for (std::uint64_t m0 : {6ULL, 100ULL, 10000ULL, 1000000ULL}) {
      auto const c = eval_constants({k, m0});
      double const kk = k;
      EXPECT_DOUBLE_EQ(c.lower_constant, (kk + 1) * (kk + 1) / 2 * c.l);
      EXPECT_DOUBLE_EQ(c.upper_constant, c.c_k_table * c.u_table);
      EXPECT_DOUBLE_EQ(c.u_proof, c.u_table * c.e);
      EXPECT_DOUBLE_EQ(c.c_k, kk * kk / (kk - 1) * std::pow(kk + 1, (kk - 1) / kk));
      EXPECT_GT(c.a, 0);
      EXPECT_GT(c.b, 1);
      EXPECT_LT(c.a, 1);
      EXPECT_GT(c.c, 0);
      EXPECT_GT(c.d, 0);
    }
  }
  // The integer quotient only differs from k^2/(k-1) for k >= 3.
  EXPECT_DOUBLE_EQ(eval_constants({2, 6}).c_k, eval_constants({2, 6}).c_k_table);
  EXPECT_NEAR(eval_constants({3, 6}).c_k_table / eval_constants({3, 6}).c_k, 8.0 / 9.0, 1e-12);
  // c_2 = 4 sqrt(3).
  EXPECT_NEAR(eval_constants({2, 6}).c_k, 4 * std::sqrt(3.0), 1e-12);
}

TEST(EvalConstants, ConstantFunctionsApproachOne) {
  for (int k : {2, 3, 10}) {
    auto const near = eval_constants({k, 1000000});
    auto const far = eval_constants({k, 1000000000});
    for (auto [a, b] : {std::pair{near.a, far.a}, std::pair{near.b, far.b},
                        std::pair{near.c, far.c}, std::pair{near.d, far.d}}) {
      EXPECT_LT(std::fabs(b - 1), std::fabs(a - 1));
    }
  }
}

TEST(EvalConstants, MonotoneTightening) {
  for (int k : {2, 3, 5, 10, 20}) {
    double lower = 0;
    double upper = 1e300;
    for (std::uint64_t m0 : {6ULL, 100ULL, 10000ULL, 1000000ULL}) {
      auto const c = eval_constants({k, m0});
      EXPECT_GT(c.lower_constant, lower);
      EXPECT_LT(c.upper_constant, upper);
      lower = c.lower_constant;
      upper = c.upper_constant;
    }
  }
}

TEST(EvalConstants, RejectsSmallM0AndK) {
  EXPECT_THROW(eval_constants({2, 5}), DomainError);
  EXPECT_THROW(eval_constants({1, 6}), DomainError);
}

TEST(SkxBounds, SandwichAroundExactCount) {
  for (int k : {2, 3}) {
    auto const prefix = prefix_covering(k, 1000000);
    auto const lengths = prefix_for_max_chain(k, 1000000);
    auto const m = max_chain_length(1000000, lengths);
    auto const s = static_cast<double>(count_exact(1000000, prefix));
    EXPECT_LE(lower_bound_skx(1000000, {k, 6}, m), s);
    EXPECT_GE(upper_bound_skx(1000000, {k, 6}, m), s);
  }
  // lower = 0.391504 * 10^4 / (log 10^6)^(4/3).
  double const expected = 0.391504 * 1e4 / std::pow(std::log(1e6), 4.0 / 3.0);
  EXPECT_NEAR(lower_bound_skx(1000000, {2, 6}, 54), expected, 1e-5 * expected);
}

TEST(SkxBounds, StatementExponentIsLarger) {
  double const proof = upper_bound_skx(1000000, {2, 6}, 54);
  double const statement = upper_bound_skx(1000000, {2, 6}, 54, LogExponent::kStatement);
  EXPECT_NEAR(statement / proof, std::pow(std::log(1e6), 2.0 / 3.0), 1e-9);
}

TEST(SkxBounds, RefusedBelowM0) {
  EXPECT_THROW(upper_bound_skx(1000, {2, 6}, 5), DomainError);
  EXPECT_THROW(lower_bound_skx(1000, {2, 100}, 54), DomainError);
  auto const prefix = prefix_for_max_chain(2, 100);
  EXPECT_THROW(upper_bound_skx(100, {2, 6}, prefix), DomainError);  // M(100,2) = 4
}

TEST(SkxBounds, LowerBelowUpperEverywhere) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 2000; ++trial) {
    int const k = 2 + static_cast<int>(rng() % 19);
    std::uint64_t const m0 = 6 + rng() % 100000;
    double const x = std::pow(10.0, 3 + std::uniform_real_distribution<double>(0, 35)(rng));
    auto const xi = static_cast<u128>(x);
    ASSERT_LE(lower_bound_skx(xi, {k, m0}, m0), upper_bound_skx(xi, {k, m0}, m0));
  }
}

TEST(MBounds, SandwichAtOneMillion) {
  EXPECT_NEAR(m_lower(1000000, {2, 6}, 54), 16.8356, 1e-3);
  EXPECT_NEAR(m_upper(1000000, {2, 6}, 54), 119.817, 1e-2);
  EXPECT_THROW(m_lower(1000, {2, 6}, 4), DomainError);
}

TEST(LogMBounds, BracketLogM) {
  auto const range = logm_bounds(1000000, {2, 6}, 54);
  EXPECT_LT(range.lower, std::log(54.0));
  EXPECT_GT(range.upper, std::log(54.0));
  for (int k : {2, 3, 5}) {
    double previous = 1e300;
    for (std::uint64_t m0 : {6ULL, 100ULL, 10000ULL, 1000000ULL}) {
      auto const r = logm_bounds(parse_u128("10^30"), {k, m0}, m0);
      EXPECT_LT(r.lower, r.upper);
      EXPECT_LT(r.upper / r.lower, previous);
      previous = r.upper / r.lower;
    }
  }
}

TEST(BoundsTable, CsvLayout) {
  std::vector<int> const ks = {5, 10};
  std::vector<std::uint64_t> const m0s = {10000, 100};
  auto const rows = bounds_table(ks, m0s);
  ASSERT_EQ(rows.size(), 4U);
  EXPECT_EQ(rows[0].k, 5);
  EXPECT_EQ(rows[0].m0, 10000U);
  EXPECT_EQ(rows[1].m0, 100U);
  EXPECT_EQ(bounds_table_csv(rows),
            "M0,k,lower,upper\n"
            "10000,5,8.19445,44.4013\n"
            "100,5,5.47127,48.0799\n"
            "10000,10,25.6426,164.599\n"
            "100,10,16.6068,182.224\n");
}

}  // namespace
}  // namespace gleeful
