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

#ifndef CSORT_ORACLE_HPP_
#define CSORT_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_set>

#include "csort/graph.hpp"

namespace csort {

enum class Ordering { Less, Greater };

// Answers exact comparisons against the hidden values and bills by distinct
// pair: repeat queries of a pair are cache hits and cost nothing. With a
// budget, the query that would exceed it throws BudgetExhausted and is not
// counted. The GroundTruth must outlive the oracle.
class VerificationOracle {
 public:
  explicit VerificationOracle(const GroundTruth& truth) : truth_(&truth) {}
  VerificationOracle(const GroundTruth& truth, std::size_t budget)
      : truth_(&truth), budget_(budget) {}

  // Ordering of value(a) relative to value(b).
  Ordering verify(ElementId a, ElementId b);

  // Distinct pairs verified so far.
  std::size_t count() const { return cache_.size(); }
  std::optional<std::size_t> budget() const { return budget_; }
  bool cached(ElementId a, ElementId b) const;

 private:
  std::uint64_t key(ElementId a, ElementId b) const;

  const GroundTruth* truth_;
  std::optional<std::size_t> budget_;
  std::unordered_set<std::uint64_t> cache_;
};

}  // namespace csort

#endif  // CSORT_ORACLE_HPP_
