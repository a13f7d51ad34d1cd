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

#include <cmath>
#include <cstdio>
#include <string>

#include "gleeful/enumeration.h"
#include "gleeful/errors.h"

namespace gleeful {
namespace {

void check_params(BoundParams const& params) {
  if (params.k < 2) throw DomainError("bounds: k must be >= 2");
  if (params.m0 < 6) throw DomainError("bounds: M0 must be >= 6");
}

// log x for the gated bounds; also enforces M(x,k) >= M0.
double gated_log(u128 x, BoundParams const& params, std::uint64_t max_chain) {
  check_params(params);
  if (max_chain < params.m0) {
    throw DomainError("bounds: M(x,k) = " + std::to_string(max_chain) + " < M0 = " +
                      std::to_string(params.m0) + " for x = " + to_string(x) +
                      ", k = " + std::to_string(params.k) + "; the bound does not apply");
  }
  return std::log(to_double(x));
}

// x^(2/(k+1)) / (log x)^(e*k/(k+1)), e = 2 (derivation) or 1 (statement).
double main_term(u128 x, int k, LogExponent exponent) {
  double const kk = k;
  double const log_power = (exponent == LogExponent::kProof ? 2.0 : 1.0) * kk / (kk + 1);
  double const lx = std::log(to_double(x));
  return std::pow(to_double(x), 2.0 / (kk + 1)) / std::pow(lx, log_power);
}

}  // namespace

BoundReport eval_constants(BoundParams const& params) {
  check_params(params);
  double const y = static_cast<double>(params.m0);
  double const k = params.k;
  double const log_y = std::log(y);

  BoundReport rep;
  rep.k = params.k;
  rep.m0 = params.m0;
  rep.a = std::log(y / 2) / log_y;
  // log log (y+1)^2 read as log(log((y+1)^2)) = log(2 log(y+1)).
  rep.b = std::log(y + 1) / log_y + std::log(2 * std::log(y + 1)) / log_y * (k / (k + 1));
  rep.c = std::pow(y / (y - 1), 1 / (k + 1)) * std::pow(rep.b, k / (k + 1));
  rep.d = (y / (y + 3)) *
          std::pow(std::log(y / 2) / (log_y + 2 * std::log(std::log(y + 2))), k / (k + 1));
  rep.e = 1 + 1 / ((k + 1) * rep.a - 1);
  rep.f = std::pow((y + 1) / y, (k - 1) / k) * std::pow(4.0, (k - 1) / (k * (k + 1))) *
          std::pow(rep.c, (k - 1) / k) * rep.e;
  rep.u_proof = kPiUpperConstant * rep.f;
  rep.u_table = kPiUpperConstant * rep.f / rep.e;
  rep.l = ((y - 1) / y) * rep.d * rep.d;

  double const root = std::pow(k + 1, (k - 1) / k);
  rep.c_k = (k * k / (k - 1)) * root;
  auto const truncated = (params.k * params.k) / (params.k - 1);
  rep.c_k_table = static_cast<double>(truncated) * root;

  rep.lower_constant = (k + 1) * (k + 1) / 2 * rep.l;
  rep.upper_constant = rep.c_k_table * rep.u_table;
  return rep;
}

double upper_bound_skx(u128 x, BoundParams const& params, std::uint64_t max_chain,
                       LogExponent exponent) {
  gated_log(x, params, max_chain);
  auto const c = eval_constants(params);
  return c.c_k * c.u_proof * main_term(x, params.k, exponent);
}

double lower_bound_skx(u128 x, BoundParams const& params, std::uint64_t max_chain,
                       LogExponent exponent) {
  gated_log(x, params, max_chain);
  auto const c = eval_constants(params);
  return c.lower_constant * main_term(x, params.k, exponent);
}

double upper_bound_skx(u128 x, BoundParams const& params, PrefixPowerSums const& prefix,
                       LogExponent exponent) {
  return upper_bound_skx(x, params, max_chain_length(x, prefix), exponent);
}

double lower_bound_skx(u128 x, BoundParams const& params, PrefixPowerSums const& prefix,
                       LogExponent exponent) {
  return lower_bound_skx(x, params, max_chain_length(x, prefix), exponent);
}

double m_upper(u128 x, BoundParams const& params, std::uint64_t max_chain) {
  double const lx = gated_log(x, params, max_chain);
  double const k = params.k;
  auto const c = eval_constants(params);
  return std::pow(4.0, 1 / (k + 1)) * (k + 1) * std::pow(to_double(x), 1 / (k + 1)) /
         std::pow(lx, k / (k + 1)) * c.c;
}

double m_lower(u128 x, BoundParams const& params, std::uint64_t max_chain) {
  double const lx = gated_log(x, params, max_chain);
  double const k = params.k;
  auto const c = eval_constants(params);
  return (k + 1) * std::pow(to_double(x), 1 / (k + 1)) / std::pow(lx, k / (k + 1)) * c.d;
}

LogRange logm_bounds(u128 x, BoundParams const& params, std::uint64_t max_chain) {
  double const lx = gated_log(x, params, max_chain);
  double const k = params.k;
  auto const c = eval_constants(params);
  return LogRange{lx / ((k + 1) * c.b), lx / ((k + 1) * c.a)};
}

std::vector<BoundsTableRow> bounds_table(std::span<int const> ks,
                                         std::span<std::uint64_t const> m0s) {
  std::vector<BoundsTableRow> rows;
  rows.reserve(ks.size() * m0s.size());
  for (int k : ks) {
    for (std::uint64_t m0 : m0s) {
      auto const c = eval_constants({k, m0});
      rows.push_back({m0, k, c.lower_constant, c.upper_constant});
    }
  }
  return rows;
}

std::string six_significant(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", value);
  return buf;
}

std::string bounds_table_csv(std::span<BoundsTableRow const> rows) {
  std::string out = "M0,k,lower,upper\n";
  for (auto const& row : rows) {
    out += std::to_string(row.m0) + ',' + std::to_string(row.k) + ',' +
           six_significant(row.lower) + ',' + six_significant(row.upper) + '\n';
  }
  return out;
}

}  // namespace gleeful
