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

#include "csort/candidate_heap.hpp"

#include "csort/errors.hpp"

namespace csort {

CandidateHeap::CandidateHeap(VerificationOracle& oracle, ProcessId mode, int n)
    : oracle_(&oracle), mode_(mode), pos_(n, -1) {}

bool CandidateHeap::closer_to_top(ElementId a, ElementId b) {
  const bool a_less = oracle_->verify(a, b) == Ordering::Less;
  return mode_ == ProcessId::Ascending ? a_less : !a_less;
}

void CandidateHeap::place(int i, ElementId x) {
  heap_[i] = x;
  pos_[x] = i;
}

void CandidateHeap::sift_up(int i) {
  while (i > 0) {
    const int parent = (i - 1) / 2;
    if (!closer_to_top(heap_[i], heap_[parent])) break;
    const ElementId a = heap_[i], b = heap_[parent];
    place(parent, a);
    place(i, b);
    i = parent;
  }
}

void CandidateHeap::sift_down(int i) {
  const int size = static_cast<int>(heap_.size());
  for (;;) {
    int best = i;
    const int l = 2 * i + 1, r = 2 * i + 2;
    if (l < size && closer_to_top(heap_[l], heap_[best])) best = l;
    if (r < size && closer_to_top(heap_[r], heap_[best])) best = r;
    if (best == i) return;
    const ElementId a = heap_[i], b = heap_[best];
    place(best, a);
    place(i, b);
    i = best;
  }
}

void CandidateHeap::insert(ElementId x) {
  if (x < 0 || x >= static_cast<int>(pos_.size()))
    throw InvalidElement("CandidateHeap: element out of range");
  if (pos_[x] >= 0) throw InvalidElement("CandidateHeap: element already present");
  heap_.push_back(x);
  pos_[x] = static_cast<int>(heap_.size()) - 1;
  sift_up(pos_[x]);
}

ElementId CandidateHeap::pop() {
  if (heap_.empty()) throw InvalidElement("CandidateHeap: pop from empty heap");
  const ElementId top = heap_[0];
  remove(top);
  return top;
}

void CandidateHeap::remove(ElementId x) {
  if (x < 0 || x >= static_cast<int>(pos_.size()) || pos_[x] < 0)
    throw InvalidElement("CandidateHeap: element not present");
  const int i = pos_[x];
  const int last = static_cast<int>(heap_.size()) - 1;
  pos_[x] = -1;
  if (i != last) {
    const ElementId moved = heap_[last];
    place(i, moved);
    heap_.pop_back();
    sift_down(i);
    if (pos_[moved] == i) sift_up(i);
  } else {
    heap_.pop_back();
  }
}

}  // namespace csort
