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

#include "gleeful/heuristics.h"

#include <cmath>
#include <string>

#include "gleeful/errors.h"

namespace gleeful {
namespace {

void check_x_above_e(double x) {
  if (!(x > std::exp(1.0))) throw DomainError("heuristics: x must exceed e");
}

int sign(long v) { return (v > 0) - (v < 0); }

}  // namespace

char const* to_string(Classification c) noexcept {
  return c == Classification::kInfinite ? "infinite" : "finite";
}

Classification classify(int exponent_vs_minus_one, double log_power) noexcept {
  if (exponent_vs_minus_one > 0) return Classification::kInfinite;
  if (exponent_vs_minus_one < 0) return Classification::kFinite;
  return log_power > 0 ? Classification::kFinite : Classification::kInfinite;
}

double d_of_x(double x) {
  if (!(x > 1)) throw DomainError("d_of_x: x must be > 1");
  return std::cbrt(x) / std::pow(std::log(x), 5.0 / 3.0);
}

double same_k_probability(double x, int k) {
  if (k < 2) throw DomainError("same_k_duplicate_density: k must be >= 2");
  check_x_above_e(x);
  double const lx = std::log(x);
  if (k == 2) return 18.0 / (std::pow(x, 2.0 / 3.0) * std::pow(lx, 5.0 / 3.0));
  double const kk = k;
  return kk * kk * kk * (kk + 1) / (2 * (kk - 1)) * std::pow(x, 4 / (kk + 1) - 2) /
         std::pow(lx, (3 * kk - 1) / (kk + 1));
}

HeuristicEstimate same_k_duplicate_density(double x, int k) {
  HeuristicEstimate est;
  est.x = x;
  est.k = k;
  est.probability_per_n = same_k_probability(x, k);
  est.expected_count_to_x = x * est.probability_per_n;
  if (k == 2) {
    // x^(-2/3): exponent above -1.
    est.classification = classify(1, 5.0 / 3.0);
  } else {
    // 4/(k+1) - 2 versus -1 is 4 versus k + 1.
    est.classification = classify(sign(4L - (k + 1)), (3.0 * k - 1) / (k + 1));
  }
  return est;
}

double first_try_same_k_density(double x, int k) {
  if (k < 2) throw DomainError("first_try_same_k_density: k must be >= 2");
  check_x_above_e(x);
  double const kk = k;
  return std::pow(x, 4 / (kk + 1) - 2) * std::pow(kk, 4) /
         std::pow(std::log(x), 2 * kk / (kk + 1));
}

double CrossKModel::probability(double x) const {
  check_x_above_e(x);
  double const kk = static_cast<double>(k) * k_prime;
  return kk * kk * std::pow(x, x_exponent) / std::pow(std::log(x), log_power);
}

HeuristicEstimate CrossKModel::at(double x) const {
  HeuristicEstimate est;
  est.x = x;
  est.k = k;
  est.k_prime = k_prime;
  est.probability_per_n = probability(x);
  est.expected_count_to_x = x * est.probability_per_n;
  est.classification = classification;
  return est;
}

CrossKModel cross_k_classifier(int k, int k_prime) {
  if (k < 2) throw DomainError("cross_k_classifier: k must be >= 2");
  if (k >= k_prime) {
    throw DomainError("cross_k_classifier: need k < k' (got " + std::to_string(k) +
                      ", " + std::to_string(k_prime) + ")");
  }
  CrossKModel model;
  model.k = k;
  model.k_prime = k_prime;
  double const a = k;
  double const b = k_prime;
  model.x_exponent = 2 / (a + 1) + 2 / (b + 1) - 2;
  model.log_power = 2 * a / (a + 1) + 2 * b / (b + 1);
  // 2/(k+1) + 2/(k'+1) - 1 has the sign of 2(k'+1) + 2(k+1) - (k+1)(k'+1).
  long const lhs = 2L * (k_prime + 1) + 2L * (k + 1);
  long const rhs = static_cast<long>(k + 1) * (k_prime + 1);
  model.classification = classify(sign(lhs - rhs), model.log_power);
  return model;
}

}  // namespace gleeful
