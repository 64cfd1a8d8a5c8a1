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

#include <cmath>
#include <vector>

#include "doctest.h"

#include "csort/analysis.hpp"
#include "csort/candidate_sort.hpp"
#include "csort/errors.hpp"
#include "csort/generators.hpp"
#include "csort/oracle.hpp"

using csort::AmbiguityParams;
using csort::Instance;
using csort::SortResult;
using csort::VerificationOracle;

TEST_CASE("perceptual bound formula") {
  CHECK(csort::jnd_bound(1000, 8, 5) == doctest::Approx(250.0));
  CHECK(csort::jnd_bound(1000, 0, 3) == doctest::Approx(0.0));
  CHECK(csort::jnd_bound(1024, 16, 14) == doctest::Approx(1.0));
  CHECK(csort::jnd_bound(10, 9, 1) == doctest::Approx(45.0));
  CHECK_THROWS_AS(csort::jnd_bound(10, 10, 1), csort::InvalidParameter);
  CHECK_THROWS_AS(csort::jnd_bound(10, -1, 1), csort::InvalidParameter);
  CHECK_THROWS_AS(csort::jnd_bound(10, 2, 0), csort::InvalidParameter);
}

TEST_CASE("log-sum bound on fixed traces") {
  // Uniform traces meet the bound with equality.
  CHECK(csort::check_sum_log_bound({4, 4, 4, 4}, 16));
  CHECK(csort::check_sum_log_bound({1, 1, 1, 1, 1}, 5));
  CHECK(csort::check_sum_log_bound({3}, 3));
  // Skewed traces sit strictly below it.
  CHECK(csort::check_sum_log_bound({8, 1, 1, 1, 1, 1, 1, 1}, 15));
  CHECK(csort::check_sum_log_bound({2, 2}, 16));  // slack M is fine

  CHECK_THROWS_AS(csort::check_sum_log_bound({}, 4), csort::InvalidParameter);
  CHECK_THROWS_AS(csort::check_sum_log_bound({3, 0}, 4), csort::InvalidTrace);
  CHECK_THROWS_AS(csort::check_sum_log_bound({3, -1}, 4), csort::InvalidTrace);
  CHECK_THROWS_AS(csort::check_sum_log_bound({3, 3}, 5),
                  csort::InvalidParameter);  // sum exceeds M
}

namespace {

bool walk_compositions(std::vector<int>& parts, int rem, int total) {
  if (rem == 0) return csort::check_sum_log_bound(parts, total);
  for (int c = 1; c <= rem; ++c) {
    parts.push_back(c);
    const bool ok = walk_compositions(parts, rem - c, total);
    parts.pop_back();
    if (!ok) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("log-sum bound over exhaustive compositions") {
  for (int total = 1; total <= 16; ++total) {
    std::vector<int> parts;
    CHECK(walk_compositions(parts, total, total));
  }
}

TEST_CASE("binomial log estimate stays under the concavity cap") {
  // Degenerate ends are exact.
  const csort::McEstimate zero = csort::mc_log_binomial(1000, 0.0, 100, 1);
  CHECK(zero.value == doctest::Approx(0.0));
  CHECK(zero.std_error == doctest::Approx(0.0));
  const csort::McEstimate one = csort::mc_log_binomial(1000, 1.0, 100, 1);
  CHECK(one.value == doctest::Approx(1.0));
  CHECK(one.std_error == doctest::Approx(0.0));

  for (double p : {0.1, 0.25, 0.5, 0.9}) {
    const csort::McEstimate est = csort::mc_log_binomial(1000, p, 20000, 42);
    const double cap = std::log2(1.0 + p);
    CHECK(est.std_error > 0.0);
    CHECK(est.value <= cap + 3.0 * est.std_error);
    // The estimate cannot fall far below the cap either: the Jensen gap at
    // n = 1000 is under 1e-3.
    CHECK(est.value >= cap - 0.01);
  }

  // Same seed, same estimate.
  const csort::McEstimate a = csort::mc_log_binomial(500, 0.3, 1000, 9);
  const csort::McEstimate b = csort::mc_log_binomial(500, 0.3, 1000, 9);
  CHECK(a.value == b.value);
  CHECK(a.std_error == b.std_error);

  CHECK_THROWS_AS(csort::mc_log_binomial(10, 0.5, 1, 0),
                  csort::InvalidParameter);
  CHECK_THROWS_AS(csort::mc_log_binomial(10, 1.5, 100, 0),
                  csort::InvalidParameter);
  CHECK_THROWS_AS(csort::mc_log_binomial(0, 0.5, 100, 0),
                  csort::InvalidParameter);
}

TEST_CASE("appearance report on a clean banded run") {
  const Instance inst = csort::gen_banded(12, 3);
  VerificationOracle oracle(inst.truth);
  const SortResult result =
      csort::sort(inst.graph, AmbiguityParams{3, 3}, oracle);
  const csort::AppearanceBoundReport report =
      csort::appearance_bound_report(result, inst.graph, inst.truth);
  REQUIRE(report.rows.size() == 12);
  for (const csort::AppearanceExcess& row : report.rows) {
    CHECK(row.k2 == 0);  // banded degrees never exceed the ideal profile
    CHECK(row.k3 == 0);
    CHECK(row.app == 1);
    CHECK(row.order == inst.truth.order(row.element));
  }
  CHECK(report.over_additive_bound.empty());
}

TEST_CASE("concentrated corruption can exceed the additive appearance bound") {
  // Four correct-direction conversions aimed at the element of order 6
  // (id 5) in a width-2 band on 12 elements. Each conversion restores the
  // ideal degree profile rather than exceeding it, so the degree excess
  // k2 = k3 = 0 for every element; yet id 5 lingers in the heaps for four
  // rounds. This pins down why over_additive_bound is a diagnostic and
  // not an invariant: the excess measure is blind to conversions hiding
  // below the ambiguity caps.
  Instance inst = csort::gen_banded(12, 2);
  csort::TournamentGraph& g = inst.graph;
  g.set_edge_state(6, 5, csort::EdgeState::Forward);  // order 7 -> order 6
  g.set_edge_state(7, 5, csort::EdgeState::Forward);  // order 8 -> order 6
  g.set_edge_state(5, 3, csort::EdgeState::Forward);  // order 6 -> order 4
  g.set_edge_state(5, 4, csort::EdgeState::Forward);  // order 6 -> order 5

  VerificationOracle oracle(inst.truth);
  const SortResult result = csort::sort(g, AmbiguityParams{2, 2}, oracle);
  CHECK(result.order == inst.truth.ascending());

  const csort::AppearanceBoundReport report =
      csort::appearance_bound_report(result, g, inst.truth);
  REQUIRE(report.rows.size() == 12);
  for (const csort::AppearanceExcess& row : report.rows) {
    CHECK(row.k2 == 0);
    CHECK(row.k3 == 0);
  }
  CHECK(report.rows[5].app == 4);
  CHECK(report.over_additive_bound == std::vector<csort::ElementId>{5});

  // The total still respects the aggregate budget of n + 2k.
  CHECK(result.total_appearances() <= 12 + 2 * 4);
}

TEST_CASE("a single conversion can exceed the total appearance window") {
  // Smallest known instance where corruption grows total appearances by
  // more than 2 per conversion. The conversion (correct direction, orders
  // 4 -> 2) makes the ascending process contested at its first round, so
  // the descending process sorts nearly everything instead — and its
  // round-4 threshold reaches zero, sweeping all three remaining bottom
  // elements into its heap at once. Those cross-region appearances are
  // invisible to any per-conversion accounting.
  const Instance base = csort::gen_banded(6, 2);
  VerificationOracle clean_oracle(base.truth);
  const SortResult clean = csort::sort(base.graph, AmbiguityParams{2, 2}, clean_oracle);
  CHECK(clean.total_appearances() == 6);

  const csort::TournamentGraph h = csort::corrupt(
      base.graph, base.truth, 1, csort::CorruptionPolicy::RandomDirection, 16);
  CHECK(h.edge_state(3, 1) == csort::EdgeState::Forward);

  VerificationOracle oracle(base.truth);
  const SortResult result = csort::sort(h, AmbiguityParams{2, 2}, oracle);
  CHECK(result.order == base.truth.ascending());
  CHECK(result.verifications == 3);
  CHECK(result.total_appearances() == 10);  // exceeds 6 + 2*1
}

TEST_CASE("appearance report measures degree excess after corruption") {
  const Instance base = csort::gen_banded(10, 2);
  csort::TournamentGraph g = base.graph;
  // Push two extra wins onto the element of order 5 (id 4): convert its
  // in-band two-cycles with ids 5 and 6 to incoming edges.
  g.set_edge_state(5, 4, csort::EdgeState::Forward);
  g.set_edge_state(6, 4, csort::EdgeState::Forward);

  VerificationOracle oracle(base.truth);
  const SortResult result = csort::sort(g, AmbiguityParams{2, 2}, oracle);
  CHECK(result.order == base.truth.ascending());
  const csort::AppearanceBoundReport report =
      csort::appearance_bound_report(result, g, base.truth);
  // Order 5 has ideal in-degree 10-5 = 5; banded gave 3, plus two
  // conversions = 5, so k2 = 0. Ids 5 and 6 each lost an out-neighbor
  // two-cycle but gained no excess. All k2/k3 must reflect that.
  for (const csort::AppearanceExcess& row : report.rows) {
    CHECK(row.k2 == 0);
    CHECK(row.k3 == 0);
  }
}
