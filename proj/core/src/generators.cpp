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

#include "csort/generators.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "csort/errors.hpp"
#include "csort/rng.hpp"

namespace csort {

namespace {

// Tags keeping the direction draw of a pair independent from its other draws.
constexpr std::uint64_t kTagDirection = 0x64697265U;  // "dire"
constexpr std::uint64_t kTagCoins = 0x636F696EU;      // "coin"

GroundTruth truth_from_perm(int n, const std::vector<int>& perm) {
  if (n < 1) throw InvalidParameter("generator: n must be >= 1");
  std::vector<double> values(n);
  if (perm.empty()) {
    for (int i = 0; i < n; ++i) values[i] = i + 1;
    return GroundTruth(std::move(values));
  }
  if (static_cast<int>(perm.size()) != n)
    throw InvalidParameter("generator: truth_perm must have length n");
  std::vector<bool> seen(n + 1, false);
  for (int i = 0; i < n; ++i) {
    if (perm[i] < 1 || perm[i] > n || seen[perm[i]])
      throw InvalidParameter("generator: truth_perm must be a permutation of 1..n");
    seen[perm[i]] = true;
    values[i] = perm[i];
  }
  return GroundTruth(std::move(values));
}

// Correct-direction simple edge for the pair (larger value -> smaller).
EdgeState correct_state(const GroundTruth& truth, ElementId i, ElementId j) {
  return truth.value(i) > truth.value(j) ? EdgeState::Forward
                                         : EdgeState::Backward;
}

}  // namespace

Instance gen_banded(int n, int nu, const std::vector<int>& truth_perm) {
  if (n < 1) throw InvalidParameter("gen_banded: n must be >= 1");
  if (nu < 0 || nu >= n)
    throw InvalidParameter("gen_banded: need 0 <= nu < n, got nu=" +
                           std::to_string(nu));
  GroundTruth truth = truth_from_perm(n, truth_perm);
  TournamentGraph g(n);
  for (ElementId i = 0; i < n; ++i) {
    for (ElementId j = i + 1; j < n; ++j) {
      if (std::abs(truth.order(i) - truth.order(j)) <= nu) continue;  // two-cycle
      g.set_edge_state(i, j, correct_state(truth, i, j));
    }
  }
  return {std::move(g), std::move(truth)};
}

TournamentGraph corrupt(const TournamentGraph& g, const GroundTruth& truth,
                        int k, CorruptionPolicy policy, std::uint64_t seed) {
  if (g.n() != truth.n())
    throw InvalidParameter("corrupt: graph/truth size mismatch");
  if (k < 0) throw InvalidParameter("corrupt: k must be >= 0");

  std::vector<std::pair<ElementId, ElementId>> two_cycles;
  for (ElementId i = 0; i < g.n(); ++i) {
    for (ElementId j = i + 1; j < g.n(); ++j) {
      if (g.edge_state(i, j) == EdgeState::TwoCycle) two_cycles.emplace_back(i, j);
    }
  }
  if (static_cast<int>(two_cycles.size()) < k)
    throw InsufficientTwoCycles("corrupt: graph has " +
                                std::to_string(two_cycles.size()) +
                                " two-cycles, need k=" + std::to_string(k));

  // Partial Fisher-Yates over the canonical pair list picks the k victims.
  SplitMix64 rng(mix64(seed));
  TournamentGraph out = g;
  for (int t = 0; t < k; ++t) {
    const std::uint64_t pick =
        t + rng.next_below(two_cycles.size() - static_cast<std::size_t>(t));
    std::swap(two_cycles[t], two_cycles[pick]);
    const auto [i, j] = two_cycles[t];
    bool correct;
    switch (policy) {
      case CorruptionPolicy::CorrectDirection:
        correct = true;
        break;
      case CorruptionPolicy::IncorrectDirection:
        correct = false;
        break;
      case CorruptionPolicy::RandomDirection:
      default: {
        SplitMix64 coin(derive_stream(seed ^ kTagDirection, i, j));
        correct = coin.next_bool();
        break;
      }
    }
    const EdgeState s = correct_state(truth, i, j);
    out.set_edge_state(i, j,
                       correct ? s
                               : (s == EdgeState::Forward ? EdgeState::Backward
                                                          : EdgeState::Forward));
  }
  return out;
}

Instance gen_jnd(int n, int delta, int r, std::uint64_t seed,
                 const std::vector<int>& truth_perm) {
  if (n < 1) throw InvalidParameter("gen_jnd: n must be >= 1");
  if (delta < 0 || delta > n - 1)
    throw InvalidParameter("gen_jnd: need 0 <= delta <= n-1");
  if (r < 1) throw InvalidParameter("gen_jnd: need r >= 1");

  GroundTruth truth = truth_from_perm(n, truth_perm);
  TournamentGraph g(n);
  for (ElementId i = 0; i < n; ++i) {
    for (ElementId j = i + 1; j < n; ++j) {
      const double gap = std::abs(truth.value(i) - truth.value(j));
      if (gap > delta) {
        g.set_edge_state(i, j, correct_state(truth, i, j));
        continue;
      }
      // r fair coins; only a unanimous run yields a simple edge.
      SplitMix64 coins(derive_stream(seed ^ kTagCoins, i, j));
      const bool first = coins.next_bool();
      bool unanimous = true;
      for (int t = 1; t < r; ++t) unanimous &= (coins.next_bool() == first);
      if (!unanimous) continue;  // stays a two-cycle
      const EdgeState s = correct_state(truth, i, j);
      g.set_edge_state(i, j,
                       first ? s
                             : (s == EdgeState::Forward ? EdgeState::Backward
                                                        : EdgeState::Forward));
    }
  }
  return {std::move(g), std::move(truth)};
}

LowerBoundInstance gen_lower_bound(int n, int gamma) {
  if (n < 1) throw InvalidParameter("gen_lower_bound: n must be >= 1");
  if (gamma < 1 || gamma >= (n - 2) / 2)
    throw InvalidParameter("gen_lower_bound: need 1 <= gamma < floor((n-2)/2)");

  Instance base = gen_banded(n, gamma);
  const int block = 2 * gamma + 2;
  const int k = n / block;
  std::vector<std::pair<ElementId, ElementId>> swap_pairs;
  for (int t = 1; t <= k; ++t) {
    // Identity truth: the element of order o is id o-1.
    const int a = (t - 1) * block + gamma + 1;  // 1-based center order
    const ElementId lo = a - 1, hi = a;         // ids of orders a, a+1
    swap_pairs.emplace_back(lo, hi);
    // Center pair {a, a+1} stays a two-cycle. The flanking two-cycles
    // become correct simple edges, which keeps every outside element's
    // view of a and a+1 identical: transposing the pair maps the graph
    // onto itself, so no simple edge can tell the two apart.
    base.graph.set_edge_state(lo, lo - gamma, EdgeState::Forward);  // a -> a-gamma
    base.graph.set_edge_state(hi + gamma, hi, EdgeState::Forward);  // a+1+gamma -> a+1
  }
  return {std::move(base.graph), std::move(base.truth), std::move(swap_pairs),
          gamma, k};
}

}  // namespace csort
