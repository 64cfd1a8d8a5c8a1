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

#ifndef CSORT_CANDIDATE_SORT_HPP_
#define CSORT_CANDIDATE_SORT_HPP_

#include <cstddef>
#include <vector>

#include "csort/candidate_heap.hpp"
#include "csort/graph.hpp"
#include "csort/oracle.hpp"

namespace csort {

// One heap pop: `round` is the process-local 1-based round counter,
// `position` the 0-based slot it filled in the ascending output, and
// `heap_size` the heap's size at the pop (insertions included).
struct PopEvent {
  ProcessId process;
  int round;
  int position;
  int heap_size;
};

// How many rounds an element spent in each process's heap.
struct Appearances {
  int ascending = 0;
  int descending = 0;
  int total() const { return ascending + descending; }
};

struct SortResult {
  std::vector<ElementId> order;          // ascending by hidden value
  std::size_t verifications = 0;         // distinct pairs compared
  std::vector<Appearances> appearances;  // indexed by element id
  std::vector<PopEvent> round_trace;     // chronological pops
  std::vector<ProcessId> filled_by;      // indexed by output position
  int max_heap_after_pop = 0;            // largest heap left after any pop

  // Sum of all appearance counts; at least n, and exactly n on an
  // uncorrupted banded input.
  long long total_appearances() const;
};

// Simple-degree threshold a candidate must meet at the given 1-based round:
// max(n - round - nu_plus, 0) on in-degree for Ascending, and
// max(n - round - nu_minus, 0) on out-degree for Descending (whose round r
// determines the element of order n - r + 1).
int candidate_threshold(ProcessId process, int round, int n,
                        const AmbiguityParams& nu);

// Elements eligible to enter the process's heap this round: unsorted, not
// already held, and meeting the degree threshold. Ascending compares simple
// in-degree, Descending simple out-degree. Pure function of the graph; the
// sorter uses the same rule incrementally.
std::vector<ElementId> candidate_set(const TournamentGraph& g,
                                     ProcessId process, int round,
                                     const AmbiguityParams& nu,
                                     const std::vector<bool>& unsorted,
                                     const std::vector<bool>& in_heap);

// Sorts the elements of g by hidden value using the two interleaved
// heap processes; oracle comparisons are spent only when a round holds
// more than one candidate. The input must be derivable from a base graph
// whose two-cycle structure respects `nu` (all simple edges correct, per-
// side two-cycle counts capped); otherwise the output contract is void and
// a stall is reported as ModelViolation. BudgetExhausted propagates from
// the oracle.
SortResult sort(const TournamentGraph& g, const AmbiguityParams& nu,
                VerificationOracle& oracle);

// Oracle-only merge sort over elements 0..n-1, for cross-checking. Uses at
// most n*ceil(log2 n) - 2^ceil(log2 n) + 1 verifications.
std::vector<ElementId> reference_sort(int n, VerificationOracle& oracle);

}  // namespace csort

#endif  // CSORT_CANDIDATE_SORT_HPP_
