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

#ifndef CSORT_GRAPH_IO_HPP_
#define CSORT_GRAPH_IO_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "csort/graph.hpp"

namespace csort {

// Provenance block a generator writes next to the graph.
struct GraphMeta {
  std::string model;
  std::optional<int> nu;
  std::optional<int> k;
  std::optional<int> delta;
  std::optional<int> r;
  std::optional<int> gamma;
  std::optional<std::string> policy;
  std::optional<std::uint64_t> seed;
  std::optional<long long> ambiguous_simple;
  std::vector<std::pair<ElementId, ElementId>> swap_pairs;
};

struct GraphFile {
  TournamentGraph graph;
  std::optional<GroundTruth> truth;  // absent in redacted files
  std::optional<GraphMeta> meta;
};

// JSON layout:
//   {"n": 5, "values": [..], "meta": {..}, "edges": [[i, j, "fw"|"bw"|"tc"], ..]}
// Edges list every pair i < j exactly once in lexicographic order; "fw" is
// the simple edge i -> j. "values" (the hidden truth) and "meta" are
// optional. Serialization is byte-stable for identical inputs.
std::string serialize_graph(const TournamentGraph& g,
                            const GroundTruth* truth = nullptr,
                            const GraphMeta* meta = nullptr);

// Parses and fully validates (pair coverage, ranges, distinct values).
// Throws ParseError on malformed input.
GraphFile parse_graph(const std::string& text);

void write_graph_file(const std::string& path, const TournamentGraph& g,
                      const GroundTruth* truth = nullptr,
                      const GraphMeta* meta = nullptr);
GraphFile read_graph_file(const std::string& path);

}  // namespace csort

#endif  // CSORT_GRAPH_IO_HPP_
