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

#ifndef CSORT_GRAPH_HPP_
#define CSORT_GRAPH_HPP_

#include <cstddef>
#include <vector>

namespace csort {

// Elements are dense 0-based indices.
using ElementId = int;

// State of an unordered pair, reported relative to an argument order (i, j):
//   Forward  - simple edge i -> j (the graph claims value(i) > value(j))
//   Backward - simple edge j -> i
//   TwoCycle - edges both ways; the pair carries no order information
enum class EdgeState : unsigned char { Forward, Backward, TwoCycle };

// Per-side caps on how many incident pairs may be two-cycles.
//   nu_plus  caps two-cycles with larger elements (these reduce in-degree);
//   nu_minus caps two-cycles with smaller elements (reduce out-degree).
struct AmbiguityParams {
  int nu_plus = 0;
  int nu_minus = 0;
};

// Hidden latent values. Values must be pairwise distinct; order is the
// 1-based rank by value (1 = smallest).
class GroundTruth {
 public:
  explicit GroundTruth(std::vector<double> values);

  int n() const { return static_cast<int>(values_.size()); }
  double value(ElementId x) const;
  const std::vector<double>& values() const { return values_; }

  // 1-based rank of x: order 1 is the smallest value.
  int order(ElementId x) const;
  // Element holding the given 1-based rank.
  ElementId element_at(int order) const;
  // Element ids sorted by ascending value.
  const std::vector<ElementId>& ascending() const { return ascending_; }

  bool less(ElementId a, ElementId b) const { return value(a) < value(b); }

 private:
  std::vector<double> values_;
  std::vector<ElementId> ascending_;
  std::vector<int> order_;  // 1-based
};

// Complete graph on n elements whose pairs each hold one EdgeState.
// Storage is a flat upper-triangular array (state of the canonical pair
// i < j); accessors accept either argument order.
class TournamentGraph {
 public:
  explicit TournamentGraph(int n);  // all pairs start as two-cycles

  int n() const { return n_; }
  std::size_t pair_count() const { return states_.size(); }

  EdgeState edge_state(ElementId i, ElementId j) const;
  void set_edge_state(ElementId i, ElementId j, EdgeState s);

  // Does the directed edge i -> j exist (simple or as half of a two-cycle)?
  bool has_edge(ElementId i, ElementId j) const;

  // Degree counts over simple edges only; two-cycles contribute zero.
  int simple_in_degree(ElementId x) const;
  int simple_out_degree(ElementId x) const;
  int two_cycle_degree(ElementId x) const;

  // One O(n^2) pass for all elements; used by the sorter.
  void all_simple_degrees(std::vector<int>& in, std::vector<int>& out) const;

 private:
  std::size_t index_of(ElementId i, ElementId j) const;  // requires i < j
  void check_pair(ElementId i, ElementId j) const;

  int n_;
  std::vector<EdgeState> states_;
};

// Violation records for validate_nu_ambiguous.
struct EdgeDirectionViolation {
  ElementId from;  // simple edge from -> to claims value(from) > value(to)
  ElementId to;
};

struct TwoCycleCountViolation {
  ElementId element;
  bool larger_side;  // true: count with larger elements, false: with smaller
  int expected;
  int actual;
};

struct ValidationReport {
  std::vector<EdgeDirectionViolation> wrong_direction;
  std::vector<TwoCycleCountViolation> wrong_count;
  bool ok() const { return wrong_direction.empty() && wrong_count.empty(); }
};

// Checks the exact ambiguity-model shape: every simple edge points from the
// larger value to the smaller, and each element of order o has exactly
// min{n-o, nu_plus} two-cycles with larger elements and min{o-1, nu_minus}
// with smaller ones.
ValidationReport validate_nu_ambiguous(const TournamentGraph& g,
                                       const GroundTruth& truth,
                                       const AmbiguityParams& nu);

// Number of pairs of {1..n} whose values differ by at most delta:
// n*delta - (delta^2 + delta)/2. Requires 0 <= delta <= n-1.
long long count_delta_close(int n, int delta);

// Counts simple edges between pairs that the symmetric banded base graph
// (band width nu) keeps as two-cycles, i.e. simple pairs with order distance
// <= nu. Asymmetric parameters are rejected (Unsupported): the banded base
// is only defined for nu_plus == nu_minus.
long long count_ambiguous_simple(const TournamentGraph& g,
                                 const GroundTruth& truth,
                                 const AmbiguityParams& nu);

}  // namespace csort

#endif  // CSORT_GRAPH_HPP_
