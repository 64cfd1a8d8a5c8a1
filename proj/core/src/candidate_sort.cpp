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

#include "csort/candidate_sort.hpp"

#include <algorithm>
#include <cassert>

#include "csort/errors.hpp"

namespace csort {

long long SortResult::total_appearances() const {
  long long sum = 0;
  for (const Appearances& a : appearances) sum += a.total();
  return sum;
}

int candidate_threshold(ProcessId process, int round, int n,
                        const AmbiguityParams& nu) {
  if (round < 1 || round > n)
    throw InvalidParameter("candidate_threshold: round out of range");
  if (nu.nu_plus < 0 || nu.nu_minus < 0)
    throw InvalidParameter("candidate_threshold: negative ambiguity parameter");
  const int cap = process == ProcessId::Ascending ? nu.nu_plus : nu.nu_minus;
  return std::max(n - round - cap, 0);
}

std::vector<ElementId> candidate_set(const TournamentGraph& g,
                                     ProcessId process, int round,
                                     const AmbiguityParams& nu,
                                     const std::vector<bool>& unsorted,
                                     const std::vector<bool>& in_heap) {
  const int n = g.n();
  if (static_cast<int>(unsorted.size()) != n ||
      static_cast<int>(in_heap.size()) != n)
    throw InvalidParameter("candidate_set: flag vectors must have length n");
  const int threshold = candidate_threshold(process, round, n, nu);
  std::vector<ElementId> out;
  for (ElementId x = 0; x < n; ++x) {
    if (!unsorted[x] || in_heap[x]) continue;
    const int degree = process == ProcessId::Ascending
                           ? g.simple_in_degree(x)
                           : g.simple_out_degree(x);
    if (degree >= threshold) out.push_back(x);
  }
  return out;
}

namespace {

// Shared state of one run; the two processes differ only by index.
struct Run {
  const TournamentGraph& g;
  VerificationOracle& oracle;
  AmbiguityParams nu;
  int n;
  std::vector<int> in_degree, out_degree;
  std::vector<bool> unsorted;
  int unsorted_count;
  CandidateHeap heaps[2];
  int round[2] = {1, 1};
  std::vector<ElementId> scratch[2];  // candidate sets of the current step
  SortResult result;

  Run(const TournamentGraph& graph, const AmbiguityParams& params,
      VerificationOracle& orc)
      : g(graph),
        oracle(orc),
        nu(params),
        n(graph.n()),
        unsorted(graph.n(), true),
        unsorted_count(graph.n()),
        heaps{CandidateHeap(orc, ProcessId::Ascending, graph.n()),
              CandidateHeap(orc, ProcessId::Descending, graph.n())} {
    g.all_simple_degrees(in_degree, out_degree);
    result.order.assign(n, -1);
    result.appearances.assign(n, Appearances{});
    result.filled_by.assign(n, ProcessId::Ascending);
  }

  static int idx(ProcessId p) { return p == ProcessId::Ascending ? 0 : 1; }
  static ProcessId other(ProcessId p) {
    return p == ProcessId::Ascending ? ProcessId::Descending
                                     : ProcessId::Ascending;
  }

  // Fills scratch[p] with this round's eligible entrants.
  void compute_candidates(ProcessId p) {
    const int i = idx(p);
    const int cap = p == ProcessId::Ascending ? nu.nu_plus : nu.nu_minus;
    const int threshold = std::max(n - round[i] - cap, 0);
    const std::vector<int>& degree =
        p == ProcessId::Ascending ? in_degree : out_degree;
    scratch[i].clear();
    for (ElementId x = 0; x < n; ++x) {
      if (unsorted[x] && !heaps[i].contains(x) && degree[x] >= threshold)
        scratch[i].push_back(x);
    }
  }

  int pending(ProcessId p) const {
    const int i = idx(p);
    return static_cast<int>(scratch[i].size()) + heaps[i].size();
  }

  // Insert this round's candidates, pop the extreme element into its
  // output slot, and retire it from both heaps.
  void run_round(ProcessId p) {
    const int i = idx(p);
    CandidateHeap& own = heaps[i];
    CandidateHeap& peer = heaps[1 - i];
    if (scratch[i].empty() && own.empty())
      throw ModelViolation(
          "sort: no candidates and empty heap at round " +
          std::to_string(round[i]) +
          "; the input violates the declared ambiguity parameters");
    for (ElementId x : scratch[i]) own.insert(x);
    for (ElementId x : own.items()) {
      Appearances& a = result.appearances[x];
      ++(p == ProcessId::Ascending ? a.ascending : a.descending);
    }
    const int position = p == ProcessId::Ascending ? round[i] - 1 : n - round[i];
    result.round_trace.push_back({p, round[i], position, own.size()});
    const ElementId popped = own.pop();
    result.order[position] = popped;
    result.filled_by[position] = p;
    unsorted[popped] = false;
    --unsorted_count;
    if (peer.contains(popped)) peer.remove(popped);
    ++round[i];
    // Between rounds each heap holds at most nu_plus + nu_minus elements:
    // an element can enter at most that many rounds before it is popped.
    assert(own.size() <= nu.nu_plus + nu.nu_minus);
    result.max_heap_after_pop = std::max(
        result.max_heap_after_pop, std::max(own.size(), peer.size()));
  }
};

}  // namespace

SortResult sort(const TournamentGraph& g, const AmbiguityParams& nu,
                VerificationOracle& oracle) {
  if (nu.nu_plus < 0 || nu.nu_minus < 0)
    throw InvalidParameter("sort: negative ambiguity parameter");
  Run run(g, nu, oracle);

  ProcessId rho = ProcessId::Ascending;
  while (run.unsorted_count > 0) {
    run.compute_candidates(rho);
    if (run.pending(rho) == 1) {
      run.run_round(rho);  // free round; rho keeps the turn
      continue;
    }
    rho = Run::other(rho);
    run.compute_candidates(rho);
    if (run.pending(rho) == 1) {
      run.run_round(rho);  // free round for the other process
      continue;
    }
    // Both processes face a choice; the original one resolves its round
    // with verifications and hands the turn over.
    rho = Run::other(rho);
    run.run_round(rho);
    rho = Run::other(rho);
  }
  run.result.verifications = oracle.count();
  return run.result;
}

namespace {

void merge_sort(std::vector<ElementId>& v, std::vector<ElementId>& tmp,
                int lo, int hi, VerificationOracle& oracle) {
  if (hi - lo <= 1) return;
  const int mid = lo + (hi - lo) / 2;
  merge_sort(v, tmp, lo, mid, oracle);
  merge_sort(v, tmp, mid, hi, oracle);
  int a = lo, b = mid;
  for (int k = lo; k < hi; ++k) {
    if (a < mid && (b >= hi || oracle.verify(v[a], v[b]) == Ordering::Less))
      tmp[k] = v[a++];
    else
      tmp[k] = v[b++];
  }
  std::copy(tmp.begin() + lo, tmp.begin() + hi, v.begin() + lo);
}

}  // namespace

std::vector<ElementId> reference_sort(int n, VerificationOracle& oracle) {
  if (n < 1) throw InvalidParameter("reference_sort: n must be >= 1");
  std::vector<ElementId> v(n);
  for (int i = 0; i < n; ++i) v[i] = i;
  std::vector<ElementId> tmp(n);
  merge_sort(v, tmp, 0, n, oracle);
  return v;
}

}  // namespace csort
