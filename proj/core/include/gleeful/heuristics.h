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

#ifndef GLEEFUL_HEURISTICS_H_
#define GLEEFUL_HEURISTICS_H_

#include <optional>

namespace gleeful {

enum class Classification { kInfinite, kFinite };

char const* to_string(Classification c) noexcept;

// Expected duplicates under the independence model in which n <= x is
// k-gleeful with probability s_k(x)/x.
struct HeuristicEstimate {
  double x = 0;
  int k = 2;
  std::optional<int> k_prime;
  double probability_per_n = 0;
  // x * probability_per_n; only the growth order is meaningful.
  double expected_count_to_x = 0;
  Classification classification = Classification::kFinite;
};

// Infinite iff sum over n of x^a / (log x)^c diverges: a > -1, or a = -1
// with c <= 0. `exponent_vs_minus_one` is the sign of a + 1.
Classification classify(int exponent_vs_minus_one, double log_power) noexcept;

// x^(1/3) / (log x)^(5/3), the comparator for the count of f_2 duplicates
// below x. x > 1.
double d_of_x(double x);

// k = 2: 18 / (x^(2/3) (log x)^(5/3)).
// k >= 3: k^3 (k+1) / (2(k-1)) * x^(4/(k+1)-2) / (log x)^((3k-1)/(k+1)).
double same_k_probability(double x, int k);
HeuristicEstimate same_k_duplicate_density(double x, int k);

// Naive (s_k(x)/x)^2 ~ k^4 x^(4/(k+1)-2) / (log x)^(2k/(k+1)).
double first_try_same_k_density(double x, int k);

struct CrossKModel {
  int k = 2;
  int k_prime = 3;
  double x_exponent = 0;
  double log_power = 0;
  Classification classification = Classification::kFinite;

  // (k k')^2 x^(2/(k+1)+2/(k'+1)-2) / (log x)^(2k/(k+1)+2k'/(k'+1)).
  double probability(double x) const;
  HeuristicEstimate at(double x) const;
};

// 2 <= k < k'. Infinite iff 2/(k+1) + 2/(k'+1) > 1.
CrossKModel cross_k_classifier(int k, int k_prime);

}  // namespace gleeful

#endif  // GLEEFUL_HEURISTICS_H_
