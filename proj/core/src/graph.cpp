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

#include "csort/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>

#include "csort/errors.hpp"

namespace csort {

GroundTruth::GroundTruth(std::vector<double> values)
    : values_(std::move(values)) {
  const int n = static_cast<int>(values_.size());
  if (n < 1) throw InvalidParameter("GroundTruth: need at least one element");
  ascending_.resize(n);
  std::iota(ascending_.begin(), ascending_.end(), 0);
  std::sort(ascending_.begin(), ascending_.end(),
            [&](ElementId a, ElementId b) { return values_[a] < values_[b]; });
  order_.assign(n, 0);
  for (int r = 0; r < n; ++r) {
    if (r > 0 && values_[ascending_[r]] == values_[ascending_[r - 1]]) {
      throw InvalidParameter("GroundTruth: values must be pairwise distinct");
    }
    order_[ascending_[r]] = r + 1;
  }
}

double GroundTruth::value(ElementId x) const {
  if (x < 0 || x >= n()) throw InvalidElement("GroundTruth: element out of range");
  return values_[x];
}

int GroundTruth::order(ElementId x) const {
  if (x < 0 || x >= n()) throw InvalidElement("GroundTruth: element out of range");
  return order_[x];
}

ElementId GroundTruth::element_at(int order) const {
  if (order < 1 || order > n()) throw InvalidParameter("GroundTruth: order out of range");
  return ascending_[order - 1];
}

TournamentGraph::TournamentGraph(int n) : n_(n) {
  if (n < 1) throw InvalidParameter("TournamentGraph: n must be >= 1");
  states_.assign(static_cast<std::size_t>(n) * (n - 1) / 2, EdgeState::TwoCycle);
}

std::size_t TournamentGraph::index_of(ElementId i, ElementId j) const {
  // Row-major upper triangle: row i holds pairs (i, i+1) .. (i, n-1).
  const std::size_t row =
      static_cast<std::size_t>(i) * (2 * n_ - i - 1) / 2;
  return row + static_cast<std::size_t>(j - i - 1);
}

void TournamentGraph::check_pair(ElementId i, ElementId j) const {
  if (i < 0 || j < 0 || i >= n_ || j >= n_)
    throw InvalidPair("TournamentGraph: pair index out of range");
  if (i == j) throw InvalidPair("TournamentGraph: pair must be two distinct elements");
}

EdgeState TournamentGraph::edge_state(ElementId i, ElementId j) const {
  check_pair(i, j);
  if (i < j) return states_[index_of(i, j)];
  const EdgeState s = states_[index_of(j, i)];
  if (s == EdgeState::Forward) return EdgeState::Backward;
  if (s == EdgeState::Backward) return EdgeState::Forward;
  return s;
}

void TournamentGraph::set_edge_state(ElementId i, ElementId j, EdgeState s) {
  check_pair(i, j);
  if (i < j) {
    states_[index_of(i, j)] = s;
  } else {
    if (s == EdgeState::Forward) s = EdgeState::Backward;
    else if (s == EdgeState::Backward) s = EdgeState::Forward;
    states_[index_of(j, i)] = s;
  }
}

bool TournamentGraph::has_edge(ElementId i, ElementId j) const {
  const EdgeState s = edge_state(i, j);
  return s == EdgeState::Forward || s == EdgeState::TwoCycle;
}

int TournamentGraph::simple_in_degree(ElementId x) const {
  if (x < 0 || x >= n_) throw InvalidElement("TournamentGraph: element out of range");
  int d = 0;
  for (ElementId y = 0; y < n_; ++y) {
    if (y != x && edge_state(y, x) == EdgeState::Forward) ++d;
  }
  return d;
}

int TournamentGraph::simple_out_degree(ElementId x) const {
  if (x < 0 || x >= n_) throw InvalidElement("TournamentGraph: element out of range");
  int d = 0;
  for (ElementId y = 0; y < n_; ++y) {
    if (y != x && edge_state(x, y) == EdgeState::Forward) ++d;
  }
  return d;
}

int TournamentGraph::two_cycle_degree(ElementId x) const {
  if (x < 0 || x >= n_) throw InvalidElement("TournamentGraph: element out of range");
  int d = 0;
  for (ElementId y = 0; y < n_; ++y) {
    if (y != x && edge_state(x, y) == EdgeState::TwoCycle) ++d;
  }
  return d;
}

void TournamentGraph::all_simple_degrees(std::vector<int>& in,
                                         std::vector<int>& out) const {
  in.assign(n_, 0);
  out.assign(n_, 0);
  std::size_t idx = 0;
  for (ElementId i = 0; i < n_; ++i) {
    for (ElementId j = i + 1; j < n_; ++j, ++idx) {
      switch (states_[idx]) {
        case EdgeState::Forward:  // i -> j
          ++out[i];
          ++in[j];
          break;
        case EdgeState::Backward:  // j -> i
          ++out[j];
          ++in[i];
          break;
        case EdgeState::TwoCycle:
          break;
      }
    }
  }
}

ValidationReport validate_nu_ambiguous(const TournamentGraph& g,
                                       const GroundTruth& truth,
                                       const AmbiguityParams& nu) {
  if (g.n() != truth.n())
    throw InvalidParameter("validate_nu_ambiguous: graph/truth size mismatch");
  if (nu.nu_plus < 0 || nu.nu_minus < 0)
    throw InvalidParameter("validate_nu_ambiguous: negative ambiguity parameter");

  const int n = g.n();
  ValidationReport report;
  std::vector<int> tc_larger(n, 0), tc_smaller(n, 0);
  for (ElementId i = 0; i < n; ++i) {
    for (ElementId j = i + 1; j < n; ++j) {
      const EdgeState s = g.edge_state(i, j);
      if (s == EdgeState::TwoCycle) {
        const bool i_smaller = truth.value(i) < truth.value(j);
        ++(i_smaller ? tc_larger[i] : tc_smaller[i]);
        ++(i_smaller ? tc_smaller[j] : tc_larger[j]);
        continue;
      }
      const ElementId from = (s == EdgeState::Forward) ? i : j;
      const ElementId to = (s == EdgeState::Forward) ? j : i;
      if (truth.value(from) < truth.value(to)) {
        report.wrong_direction.push_back({from, to});
      }
    }
  }
  for (ElementId x = 0; x < n; ++x) {
    const int o = truth.order(x);
    const int want_larger = std::min(n - o, nu.nu_plus);
    const int want_smaller = std::min(o - 1, nu.nu_minus);
    if (tc_larger[x] != want_larger)
      report.wrong_count.push_back({x, true, want_larger, tc_larger[x]});
    if (tc_smaller[x] != want_smaller)
      report.wrong_count.push_back({x, false, want_smaller, tc_smaller[x]});
  }
  return report;
}

long long count_delta_close(int n, int delta) {
  if (n < 1) throw InvalidParameter("count_delta_close: n must be >= 1");
  if (delta < 0 || delta > n - 1)
    throw InvalidParameter("count_delta_close: need 0 <= delta <= n-1, got delta=" +
                           std::to_string(delta));
  const long long d = delta;
  return static_cast<long long>(n) * d - (d * d + d) / 2;
}

long long count_ambiguous_simple(const TournamentGraph& g,
                                 const GroundTruth& truth,
                                 const AmbiguityParams& nu) {
  if (g.n() != truth.n())
    throw InvalidParameter("count_ambiguous_simple: graph/truth size mismatch");
  if (nu.nu_plus != nu.nu_minus)
    throw Unsupported(
        "count_ambiguous_simple: banded base graph requires nu_plus == nu_minus");
  if (nu.nu_plus < 0 || nu.nu_plus >= g.n())
    throw InvalidParameter("count_ambiguous_simple: need 0 <= nu < n");

  const int n = g.n();
  long long count = 0;
  for (ElementId i = 0; i < n; ++i) {
    for (ElementId j = i + 1; j < n; ++j) {
      if (std::abs(truth.order(i) - truth.order(j)) > nu.nu_plus) continue;
      if (g.edge_state(i, j) != EdgeState::TwoCycle) ++count;
    }
  }
  return count;
}

}  // namespace csort
