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

#ifndef GLEEFUL_BOUNDS_H_
#define GLEEFUL_BOUNDS_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gleeful/int128.h"
#include "gleeful/primes.h"

namespace gleeful {

// Upper bound on pi(x) for x >= 2 (Rosser-Schoenfeld).
inline constexpr double kPiUpperConstant = 1.25506;

struct BoundParams {
  int k = 2;
  std::uint64_t m0 = 6;
};

// Constant functions evaluated at y = M0.
//
// Two readings of the upper constant are kept. `upper_constant` reproduces
// the standard table of constants: it drops the E factor and uses the integer quotient
// floor(k^2/(k-1)) inside c_k. `u_proof` and `c_k` follow the derivation
// and are what upper_bound_skx uses.
struct BoundReport {
  int k = 2;
  std::uint64_t m0 = 6;
  double a = 0;
  double b = 0;
  double c = 0;
  double d = 0;
  double e = 0;
  double f = 0;
  double c_k = 0;
  double c_k_table = 0;
  double u_table = 0;
  double u_proof = 0;
  double l = 0;
  double lower_constant = 0;
  double upper_constant = 0;
};

// Throws DomainError unless k >= 2 and M0 >= 6.
BoundReport eval_constants(BoundParams const& params);

// Power of log x in the main term: kStatement uses k/(k+1),
// kProof uses 2k/(k+1).
enum class LogExponent { kProof, kStatement };

// Every bound below assumes M(x,k) >= M0. Callers pass the verified M(x,k)
// (see max_chain_length), or a prefix from which it is computed; the bound
// is refused with a DomainError otherwise.
double upper_bound_skx(u128 x, BoundParams const& params, std::uint64_t max_chain,
                       LogExponent exponent = LogExponent::kProof);
double lower_bound_skx(u128 x, BoundParams const& params, std::uint64_t max_chain,
                       LogExponent exponent = LogExponent::kProof);
double upper_bound_skx(u128 x, BoundParams const& params,
                       PrefixPowerSums const& prefix,
                       LogExponent exponent = LogExponent::kProof);
double lower_bound_skx(u128 x, BoundParams const& params,
                       PrefixPowerSums const& prefix,
                       LogExponent exponent = LogExponent::kProof);

double m_upper(u128 x, BoundParams const& params, std::uint64_t max_chain);
double m_lower(u128 x, BoundParams const& params, std::uint64_t max_chain);

struct LogRange {
  double lower = 0;
  double upper = 0;
};

// Bracket for log M(x,k).
LogRange logm_bounds(u128 x, BoundParams const& params, std::uint64_t max_chain);

struct BoundsTableRow {
  std::uint64_t m0 = 6;
  int k = 2;
  double lower = 0;
  double upper = 0;
};

// Rows ordered k outer, M0 inner.
std::vector<BoundsTableRow> bounds_table(std::span<int const> ks,
                                         std::span<std::uint64_t const> m0s);

// "M0,k,lower,upper" header, 6 significant figures.
std::string bounds_table_csv(std::span<BoundsTableRow const> rows);

// Formats with %.6g.
std::string six_significant(double value);

}  // namespace gleeful

#endif  // GLEEFUL_BOUNDS_H_
