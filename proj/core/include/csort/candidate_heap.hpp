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

#ifndef CSORT_CANDIDATE_HEAP_HPP_
#define CSORT_CANDIDATE_HEAP_HPP_

#include <vector>

#include "csort/graph.hpp"
#include "csort/oracle.hpp"

namespace csort {

// Which end of the order a process works from.
enum class ProcessId : unsigned char { Ascending, Descending };

// Binary heap keyed by oracle comparisons, with O(log) removal of an
// arbitrary element by id. Ascending mode keeps the smallest element on
// top, Descending the largest. Every comparison goes through the shared
// memoized oracle, so heap maintenance is billed per distinct pair.
class CandidateHeap {
 public:
  CandidateHeap(VerificationOracle& oracle, ProcessId mode, int n);

  void insert(ElementId x);
  ElementId pop();  // removes and returns the extreme element
  void remove(ElementId x);
  bool contains(ElementId x) const { return pos_[x] >= 0; }
  int size() const { return static_cast<int>(heap_.size()); }
  bool empty() const { return heap_.empty(); }
  const std::vector<ElementId>& items() const { return heap_; }

 private:
  bool closer_to_top(ElementId a, ElementId b);
  void sift_up(int i);
  void sift_down(int i);
  void place(int i, ElementId x);

  VerificationOracle* oracle_;
  ProcessId mode_;
  std::vector<ElementId> heap_;
  std::vector<int> pos_;  // element id -> heap slot, -1 if absent
};

}  // namespace csort

#endif  // CSORT_CANDIDATE_HEAP_HPP_
