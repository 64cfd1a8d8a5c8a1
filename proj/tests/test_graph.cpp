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

#include <algorithm>
#include <cstdlib>
#include <vector>

#include "doctest.h"

#include "csort/errors.hpp"
#include "csort/generators.hpp"
#include "csort/graph.hpp"

using csort::AmbiguityParams;
using csort::EdgeState;
using csort::ElementId;
using csort::GroundTruth;
using csort::TournamentGraph;

TEST_CASE("ground truth ranks elements by value") {
  GroundTruth truth({3.5, -1.0, 7.25, 0.0});
  CHECK(truth.n() == 4);
  CHECK(truth.order(1) == 1);  // -1.0 smallest
  CHECK(truth.order(3) == 2);
  CHECK(truth.order(0) == 3);
  CHECK(truth.order(2) == 4);
  CHECK(truth.element_at(1) == 1);
  CHECK(truth.element_at(4) == 2);
  CHECK(truth.ascending() == std::vector<ElementId>{1, 3, 0, 2});
  CHECK(truth.less(1, 0));
  CHECK_FALSE(truth.less(2, 3));
}

TEST_CASE("ground truth rejects duplicate values") {
  CHECK_THROWS_AS(GroundTruth({1.0, 2.0, 1.0}), csort::InvalidParameter);
  CHECK_THROWS_AS(GroundTruth({}), csort::InvalidParameter);
}

TEST_CASE("edge states mirror across argument order") {
  TournamentGraph g(4);
  CHECK(g.pair_count() == 6);
  for (ElementId i = 0; i < 4; ++i)
    for (ElementId j = 0; j < 4; ++j)
      if (i != j) CHECK(g.edge_state(i, j) == EdgeState::TwoCycle);

  g.set_edge_state(1, 3, EdgeState::Forward);  // 1 -> 3
  CHECK(g.edge_state(1, 3) == EdgeState::Forward);
  CHECK(g.edge_state(3, 1) == EdgeState::Backward);
  CHECK(g.has_edge(1, 3));
  CHECK_FALSE(g.has_edge(3, 1));

  g.set_edge_state(3, 2, EdgeState::Forward);  // set via the reversed order
  CHECK(g.edge_state(2, 3) == EdgeState::Backward);
  CHECK(g.edge_state(3, 2) == EdgeState::Forward);

  g.set_edge_state(0, 1, EdgeState::TwoCycle);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 0));

  CHECK_THROWS_AS(g.edge_state(0, 0), csort::InvalidPair);
  CHECK_THROWS_AS(g.edge_state(0, 4), csort::InvalidPair);
  CHECK_THROWS_AS(g.set_edge_state(-1, 2, EdgeState::Forward),
                  csort::InvalidPair);
}

namespace {

int brute_in_degree(const TournamentGraph& g, ElementId x) {
  int d = 0;
  for (ElementId y = 0; y < g.n(); ++y)
    if (y != x && g.edge_state(y, x) == EdgeState::Forward) ++d;
  return d;
}

int brute_out_degree(const TournamentGraph& g, ElementId x) {
  int d = 0;
  for (ElementId y = 0; y < g.n(); ++y)
    if (y != x && g.edge_state(x, y) == EdgeState::Forward) ++d;
  return d;
}

}  // namespace

TEST_CASE("degree counters agree with a brute-force scan") {
  // A fixed mixed graph: simple edges i -> j whenever (i + j) % 3 == 0,
  // j -> i whenever (i + j) % 3 == 1, two-cycles otherwise.
  TournamentGraph g(9);
  for (ElementId i = 0; i < 9; ++i)
    for (ElementId j = i + 1; j < 9; ++j) {
      if ((i + j) % 3 == 0) g.set_edge_state(i, j, EdgeState::Forward);
      else if ((i + j) % 3 == 1) g.set_edge_state(i, j, EdgeState::Backward);
    }
  std::vector<int> in, out;
  g.all_simple_degrees(in, out);
  for (ElementId x = 0; x < 9; ++x) {
    CHECK(g.simple_in_degree(x) == brute_in_degree(g, x));
    CHECK(g.simple_out_degree(x) == brute_out_degree(g, x));
    CHECK(in[x] == g.simple_in_degree(x));
    CHECK(out[x] == g.simple_out_degree(x));
    CHECK(g.simple_in_degree(x) + g.simple_out_degree(x) +
              g.two_cycle_degree(x) ==
          8);
  }
}

TEST_CASE("banded graphs have the closed-form degree profile") {
  for (int n : {1, 2, 5, 12, 30}) {
    for (int nu = 0; nu < n; ++nu) {
      const csort::Instance inst = csort::gen_banded(n, nu);
      for (ElementId x = 0; x < n; ++x) {
        const int o = inst.truth.order(x);
        CHECK(inst.graph.simple_in_degree(x) == std::max(n - o - nu, 0));
        CHECK(inst.graph.simple_out_degree(x) == std::max(o - 1 - nu, 0));
        CHECK(inst.graph.two_cycle_degree(x) ==
              std::min(n - o, nu) + std::min(o - 1, nu));
      }
    }
  }
}

TEST_CASE("validation accepts every banded graph") {
  for (int n = 1; n <= 25; ++n)
    for (int nu = 0; nu < n; ++nu) {
      const csort::Instance inst = csort::gen_banded(n, nu);
      const auto report = csort::validate_nu_ambiguous(
          inst.graph, inst.truth, AmbiguityParams{nu, nu});
      CHECK(report.ok());
    }
}

TEST_CASE("validation pinpoints any single-edge perturbation") {
  for (int n : {2, 4, 7, 12}) {
    for (int nu = 0; nu < n; ++nu) {
      const csort::Instance base = csort::gen_banded(n, nu);
      const AmbiguityParams params{nu, nu};
      for (ElementId i = 0; i < n; ++i) {
        for (ElementId j = i + 1; j < n; ++j) {
          const EdgeState original = base.graph.edge_state(i, j);
          for (EdgeState alt : {EdgeState::Forward, EdgeState::Backward,
                                EdgeState::TwoCycle}) {
            if (alt == original) continue;
            TournamentGraph g = base.graph;
            g.set_edge_state(i, j, alt);
            const auto report =
                csort::validate_nu_ambiguous(g, base.truth, params);
            CHECK_FALSE(report.ok());

            // The correct simple direction for (i, j).
            const EdgeState correct = base.truth.less(i, j)
                                          ? EdgeState::Backward
                                          : EdgeState::Forward;
            if (alt != EdgeState::TwoCycle && alt != correct) {
              // Wrong-direction simple edge: reported by endpoints.
              REQUIRE(report.wrong_direction.size() == 1);
              const auto& v = report.wrong_direction.front();
              const ElementId from = alt == EdgeState::Forward ? i : j;
              const ElementId to = alt == EdgeState::Forward ? j : i;
              CHECK(v.from == from);
              CHECK(v.to == to);
            } else {
              // Band shape broken: both endpoints get a count violation.
              CHECK(report.wrong_direction.empty());
              std::vector<ElementId> flagged;
              for (const auto& v : report.wrong_count)
                flagged.push_back(v.element);
              CHECK(std::count(flagged.begin(), flagged.end(), i) >= 1);
              CHECK(std::count(flagged.begin(), flagged.end(), j) >= 1);
            }
          }
        }
      }
    }
  }
}

TEST_CASE("close-pair count matches enumeration and frozen examples") {
  CHECK(csort::count_delta_close(10, 3) == 24);
  CHECK(csort::count_delta_close(17, 0) == 0);
  CHECK(csort::count_delta_close(6, 5) == 15);
  CHECK(csort::count_delta_close(1, 0) == 0);
  for (int n = 1; n <= 50; ++n)
    for (int delta = 0; delta < n; ++delta) {
      long long brute = 0;
      for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
          if (b - a <= delta) ++brute;
      CHECK(csort::count_delta_close(n, delta) == brute);
    }
  CHECK_THROWS_AS(csort::count_delta_close(5, -1), csort::InvalidParameter);
  CHECK_THROWS_AS(csort::count_delta_close(5, 5), csort::InvalidParameter);
}

TEST_CASE("ambiguous simple edges are counted inside the band only") {
  // Banded graphs have none.
  const csort::Instance banded = csort::gen_banded(12, 3);
  CHECK(csort::count_ambiguous_simple(banded.graph, banded.truth,
                                      AmbiguityParams{3, 3}) == 0);

  // Converting in-band two-cycles raises the count one-for-one.
  TournamentGraph g = banded.graph;
  g.set_edge_state(0, 1, EdgeState::Forward);
  g.set_edge_state(5, 7, EdgeState::Backward);
  CHECK(csort::count_ambiguous_simple(g, banded.truth,
                                      AmbiguityParams{3, 3}) == 2);

  // Out-of-band simple edges never count.
  CHECK(csort::count_ambiguous_simple(banded.graph, banded.truth,
                                      AmbiguityParams{1, 1}) == 0);

  // A wider window counts correct simple edges near the diagonal too.
  const csort::Instance tight = csort::gen_banded(6, 0);
  CHECK(csort::count_ambiguous_simple(tight.graph, tight.truth,
                                      AmbiguityParams{2, 2}) ==
        csort::count_delta_close(6, 2));

  CHECK_THROWS_AS(csort::count_ambiguous_simple(banded.graph, banded.truth,
                                                AmbiguityParams{1, 2}),
                  csort::Unsupported);
}
