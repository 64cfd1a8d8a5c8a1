// Copyright 2026 The candidatesort Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "csort/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "csort/errors.hpp"
#include "csort/rng.hpp"

namespace csort {

double jnd_bound(int n, int delta, int r) {
  if (n < 1) throw InvalidParameter("jnd_bound: n must be >= 1");
  if (delta < 0 || delta > n - 1)
    throw InvalidParameter("jnd_bound: need 0 <= delta <= n-1");
  if (r < 1) throw InvalidParameter("jnd_bound: need r >= 1");
  return static_cast<double>(n) * delta * std::exp2(-r);
}

bool check_sum_log_bound(const std::vector<int>& trace, long long M) {
  constexpr double kEps = 1e-9;
  const long long m = static_cast<long long>(trace.size());
  if (m == 0) throw InvalidParameter("check_sum_log_bound: empty trace");
  long long sum = 0;
  double lhs = 0.0;
  for (const int c : trace) {
    if (c <= 0) throw InvalidTrace("check_sum_log_bound: nonpositive heap size");
    sum += c;
    lhs += std::log2(static_cast<double>(c));
  }
  if (sum > M)
    throw InvalidParameter("check_sum_log_bound: trace sums past M");
  const double rhs =
      static_cast<double>(m) *
      std::log2(static_cast<double>(M) / static_cast<double>(m));
  return lhs <= rhs + kEps;
}

McEstimate mc_log_binomial(int n, double p, int trials, std::uint64_t seed) {
  if (n < 1) throw InvalidParameter("mc_log_binomial: n must be >= 1");
  if (p < 0.0 || p > 1.0) throw InvalidParameter("mc_log_binomial: p in [0,1]");
  if (trials < 2) throw InvalidParameter("mc_log_binomial: need trials >= 2");

  SplitMix64 rng(mix64(seed));
  double sum = 0.0, sum_sq = 0.0;
  for (int t = 0; t < trials; ++t) {
    int x = 0;
    if (p == 1.0) {
      x = n;
    } else if (p > 0.0) {
      for (int i = 0; i < n; ++i) x += rng.next_unit() < p ? 1 : 0;
    }
    const double y = std::log2(static_cast<double>(x + n) / n);
    sum += y;
    sum_sq += y * y;
  }
  const double mean = sum / trials;
  const double var =
      std::max(0.0, (sum_sq - trials * mean * mean) / (trials - 1));
  return {mean, std::sqrt(var / trials)};
}

AppearanceBoundReport appearance_bound_report(const SortResult& result,
                                              const TournamentGraph& g,
                                              const GroundTruth& truth) {
  if (g.n() != truth.n() ||
      static_cast<int>(result.appearances.size()) != g.n())
    throw InvalidParameter("appearance_bound_report: size mismatch");
  const int n = g.n();
  std::vector<int> in, out;
  g.all_simple_degrees(in, out);
  AppearanceBoundReport report;
  for (ElementId x = 0; x < n; ++x) {
    const int o = truth.order(x);
    const int k2 = std::max(in[x] - (n - o), 0);
    const int k3 = std::max(out[x] - (o - 1), 0);
    const int app = result.appearances[x].total();
    report.rows.push_back({x, o, app, k2, k3});
    if (app > 2 + k2 + k3) report.over_additive_bound.push_back(x);
    if (app > 2 * k2 + k3) report.over_weighted_bound.push_back(x);
  }
  return report;
}

}  // namespace csort
