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

#include "csort/oracle.hpp"

#include <algorithm>

#include "csort/errors.hpp"

namespace csort {

std::uint64_t VerificationOracle::key(ElementId a, ElementId b) const {
  const auto lo = static_cast<std::uint64_t>(std::min(a, b));
  const auto hi = static_cast<std::uint64_t>(std::max(a, b));
  return (lo << 32) | hi;
}

Ordering VerificationOracle::verify(ElementId a, ElementId b) {
  const int n = truth_->n();
  if (a < 0 || b < 0 || a >= n || b >= n)
    throw InvalidPair("VerificationOracle: element out of range");
  if (a == b) throw InvalidPair("VerificationOracle: pair must be distinct");
  const std::uint64_t k = key(a, b);
  if (!cache_.contains(k)) {
    if (budget_ && cache_.size() >= *budget_)
      throw BudgetExhausted("VerificationOracle: budget of " +
                            std::to_string(*budget_) + " distinct pairs spent");
    cache_.insert(k);
  }
  return truth_->value(a) < truth_->value(b) ? Ordering::Less : Ordering::Greater;
}

bool VerificationOracle::cached(ElementId a, ElementId b) const {
  const int n = truth_->n();
  if (a < 0 || b < 0 || a >= n || b >= n)
    throw InvalidPair("VerificationOracle: element out of range");
  if (a == b) throw InvalidPair("VerificationOracle: pair must be distinct");
  return cache_.contains(key(a, b));
}

}  // namespace csort
