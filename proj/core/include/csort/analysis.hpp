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

#ifndef CSORT_ANALYSIS_HPP_
#define CSORT_ANALYSIS_HPP_

#include <cstdint>
#include <vector>

#include "csort/candidate_sort.hpp"
#include "csort/graph.hpp"

namespace csort {

// Expected verification driver for the perceptual model: n * delta * 2^-r.
double jnd_bound(int n, int delta, int r);

// True iff sum(log2 c_i) <= m * log2(M / m) + 1e-9 for the m positive heap
// sizes in trace. Requires sum(c_i) <= M (so M >= m). This is the concavity
// bound the sorter's verification count analysis rests on; every run's
// round trace must satisfy it with M = measured total appearances.
bool check_sum_log_bound(const std::vector<int>& trace, long long M);

struct McEstimate {
  double value;      // sample mean
  double std_error;  // sample standard error of the mean
};

// Monte Carlo estimate of E[log2((X + n) / n)] for X ~ Binomial(n, p).
// By concavity the true mean is at most log2(1 + p); tests check the
// estimate against that cap within 3 standard errors.
McEstimate mc_log_binomial(int n, double p, int trials, std::uint64_t seed);

// Per-element appearance accounting against the element's degree excess
// over the ideal (two-cycle-free) graph:
//   k2 = max(in_degree - (n - order), 0)
//   k3 = max(out_degree - (order - 1), 0)
struct AppearanceExcess {
  ElementId element;
  int order;
  int app;  // total appearances over both processes
  int k2;
  int k3;
};

struct AppearanceBoundReport {
  std::vector<AppearanceExcess> rows;
  // Elements with app > 2 + k2 + k3. Empty on uncorrupted banded inputs;
  // concentrated corruption on one element can exceed it (the bound ignores
  // conversions hidden below the ambiguity caps), so this is a diagnostic,
  // not an invariant of the model.
  std::vector<ElementId> over_additive_bound;
  // Elements with app > 2*k2 + k3 (a stricter variant; frequently exceeded).
  std::vector<ElementId> over_weighted_bound;
};

AppearanceBoundReport appearance_bound_report(const SortResult& result,
                                              const TournamentGraph& g,
                                              const GroundTruth& truth);

}  // namespace csort

#endif  // CSORT_ANALYSIS_HPP_
