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

#ifndef CSORT_GENERATORS_HPP_
#define CSORT_GENERATORS_HPP_

#include <cstdint>
#include <utility>
#include <vector>

#include "csort/graph.hpp"

namespace csort {

// Direction given to a two-cycle converted into a simple edge.
enum class CorruptionPolicy { RandomDirection, CorrectDirection, IncorrectDirection };

struct Instance {
  TournamentGraph graph;
  GroundTruth truth;
};

// Banded graph: a pair is a two-cycle iff the order distance is at most nu;
// all other pairs are simple edges in the correct direction. truth_perm
// assigns element i the value truth_perm[i] (a permutation of 1..n); empty
// means identity. The result passes validate_nu_ambiguous with (nu, nu).
Instance gen_banded(int n, int nu, const std::vector<int>& truth_perm = {});

// Converts k seed-chosen two-cycles of g into simple edges with directions
// per policy. Throws InsufficientTwoCycles if g has fewer than k two-cycles.
// Pair selection and RandomDirection coins use per-pair streams of `seed`,
// so results are reproducible across platforms.
TournamentGraph corrupt(const TournamentGraph& g, const GroundTruth& truth,
                        int k, CorruptionPolicy policy, std::uint64_t seed);

// Perceptual-threshold noise: pairs closer than `delta` in value get r
// independent fair-coin comparisons; unanimous coins leave a simple edge in
// the agreed direction (probability 2^(1-r), split evenly between correct
// and incorrect), otherwise the pair is a two-cycle. Distant pairs are
// always correct simple edges. Values are truth_perm (default identity).
Instance gen_jnd(int n, int delta, int r, std::uint64_t seed,
                 const std::vector<int>& truth_perm = {});

struct LowerBoundInstance {
  TournamentGraph graph;
  GroundTruth truth;  // identity values 1..n
  // Element pairs whose transposition leaves the graph unchanged; one per
  // block, each forcing any correct sorter to verify it.
  std::vector<std::pair<ElementId, ElementId>> swap_pairs;
  int gamma;
  int k;  // number of blocks = floor(n / (2*gamma + 2))
};

// Adversarial family meeting the verification lower bound: k disjoint
// blocks of 2*gamma+2 consecutive orders, each with a center two-cycle pair
// that is provably indistinguishable from its transposition. Within block
// t (1-based), with a = (t-1)(2g+2) + g + 1, the two-cycles {a-g, a} and
// {a+1, a+1+g} become correct-direction simple edges; everything else is
// the banded graph of width gamma. Requires 1 <= gamma < floor((n-2)/2).
LowerBoundInstance gen_lower_bound(int n, int gamma);

}  // namespace csort

#endif  // CSORT_GENERATORS_HPP_
