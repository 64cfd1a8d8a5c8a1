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

#include "csort/graph_io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "csort/errors.hpp"

namespace csort {
namespace {

using ordered_json = nlohmann::ordered_json;

const char* state_tag(EdgeState s) {
  switch (s) {
    case EdgeState::Forward:
      return "fw";
    case EdgeState::Backward:
      return "bw";
    default:
      return "tc";
  }
}

EdgeState state_from_tag(const std::string& tag) {
  if (tag == "fw") return EdgeState::Forward;
  if (tag == "bw") return EdgeState::Backward;
  if (tag == "tc") return EdgeState::TwoCycle;
  throw ParseError("unknown edge tag \"" + tag + "\" (want fw, bw, or tc)");
}

ordered_json meta_to_json(const GraphMeta& meta) {
  ordered_json m;
  m["model"] = meta.model;
  if (meta.nu) m["nu"] = *meta.nu;
  if (meta.k) m["k"] = *meta.k;
  if (meta.delta) m["delta"] = *meta.delta;
  if (meta.r) m["r"] = *meta.r;
  if (meta.gamma) m["gamma"] = *meta.gamma;
  if (meta.policy) m["policy"] = *meta.policy;
  if (meta.seed) m["seed"] = *meta.seed;
  if (meta.ambiguous_simple) m["ambiguous_simple"] = *meta.ambiguous_simple;
  if (!meta.swap_pairs.empty()) {
    ordered_json pairs = ordered_json::array();
    for (const auto& [a, b] : meta.swap_pairs)
      pairs.push_back(ordered_json::array({a, b}));
    m["swap_pairs"] = std::move(pairs);
  }
  return m;
}

int require_int(const ordered_json& j, const char* where) {
  if (!j.is_number_integer())
    throw ParseError(std::string(where) + " must be an integer");
  return j.get<int>();
}

GraphMeta meta_from_json(const ordered_json& m) {
  if (!m.is_object()) throw ParseError("\"meta\" must be an object");
  GraphMeta meta;
  if (m.contains("model")) {
    if (!m["model"].is_string())
      throw ParseError("meta.model must be a string");
    meta.model = m["model"].get<std::string>();
  }
  if (m.contains("nu")) meta.nu = require_int(m["nu"], "meta.nu");
  if (m.contains("k")) meta.k = require_int(m["k"], "meta.k");
  if (m.contains("delta")) meta.delta = require_int(m["delta"], "meta.delta");
  if (m.contains("r")) meta.r = require_int(m["r"], "meta.r");
  if (m.contains("gamma")) meta.gamma = require_int(m["gamma"], "meta.gamma");
  if (m.contains("policy")) {
    if (!m["policy"].is_string())
      throw ParseError("meta.policy must be a string");
    meta.policy = m["policy"].get<std::string>();
  }
  if (m.contains("seed")) {
    if (!m["seed"].is_number_integer())
      throw ParseError("meta.seed must be an integer");
    meta.seed = m["seed"].get<std::uint64_t>();
  }
  if (m.contains("ambiguous_simple"))
    meta.ambiguous_simple = static_cast<long long>(
        require_int(m["ambiguous_simple"], "meta.ambiguous_simple"));
  if (m.contains("swap_pairs")) {
    if (!m["swap_pairs"].is_array())
      throw ParseError("meta.swap_pairs must be an array");
    for (const auto& p : m["swap_pairs"]) {
      if (!p.is_array() || p.size() != 2)
        throw ParseError("meta.swap_pairs entries must be [i, j]");
      meta.swap_pairs.emplace_back(require_int(p[0], "meta.swap_pairs[][0]"),
                                   require_int(p[1], "meta.swap_pairs[][1]"));
    }
  }
  return meta;
}

}  // namespace

std::string serialize_graph(const TournamentGraph& g, const GroundTruth* truth,
                            const GraphMeta* meta) {
  if (truth != nullptr && truth->n() != g.n())
    throw InvalidParameter("truth size does not match graph size");
  ordered_json j;
  j["n"] = g.n();
  if (truth != nullptr) j["values"] = truth->values();
  if (meta != nullptr) j["meta"] = meta_to_json(*meta);
  ordered_json edges = ordered_json::array();
  const int n = g.n();
  for (ElementId i = 0; i < n; ++i)
    for (ElementId k = i + 1; k < n; ++k)
      edges.push_back(
          ordered_json::array({i, k, state_tag(g.edge_state(i, k))}));
  j["edges"] = std::move(edges);
  return j.dump() + "\n";
}

GraphFile parse_graph(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("graph file must be a JSON object");
  if (!j.contains("n")) throw ParseError("missing \"n\"");
  const int n = require_int(j["n"], "\"n\"");
  if (n < 1) throw ParseError("\"n\" must be at least 1");

  TournamentGraph graph(n);
  if (!j.contains("edges") || !j["edges"].is_array())
    throw ParseError("missing \"edges\" array");
  const auto& edges = j["edges"];
  const std::size_t want = graph.pair_count();
  if (edges.size() != want) {
    std::ostringstream msg;
    msg << "expected " << want << " edges for n=" << n << ", got "
        << edges.size();
    throw ParseError(msg.str());
  }
  std::vector<char> seen(want, 0);
  for (const auto& e : edges) {
    if (!e.is_array() || e.size() != 3 || !e[2].is_string())
      throw ParseError("edge entries must be [i, j, \"fw\"|\"bw\"|\"tc\"]");
    const int a = require_int(e[0], "edge endpoint");
    const int b = require_int(e[1], "edge endpoint");
    if (a < 0 || b < 0 || a >= n || b >= n || a == b) {
      std::ostringstream msg;
      msg << "bad edge endpoints (" << a << ", " << b << ") for n=" << n;
      throw ParseError(msg.str());
    }
    const int lo = a < b ? a : b;
    const int hi = a < b ? b : a;
    const std::size_t idx =
        static_cast<std::size_t>(lo) * (2 * n - lo - 1) / 2 + (hi - lo - 1);
    if (seen[idx]) {
      std::ostringstream msg;
      msg << "pair (" << lo << ", " << hi << ") listed twice";
      throw ParseError(msg.str());
    }
    seen[idx] = 1;
    graph.set_edge_state(a, b, state_from_tag(e[2].get<std::string>()));
  }

  GraphFile file{std::move(graph), std::nullopt, std::nullopt};
  if (j.contains("values")) {
    const auto& vals = j["values"];
    if (!vals.is_array() || static_cast<int>(vals.size()) != n)
      throw ParseError("\"values\" must be an array of length n");
    std::vector<double> values;
    values.reserve(vals.size());
    for (const auto& v : vals) {
      if (!v.is_number()) throw ParseError("\"values\" entries must be numbers");
      values.push_back(v.get<double>());
    }
    try {
      file.truth.emplace(std::move(values));
    } catch (const Error& e) {
      throw ParseError(std::string("bad \"values\": ") + e.what());
    }
  }
  if (j.contains("meta")) file.meta = meta_from_json(j["meta"]);
  return file;
}

void write_graph_file(const std::string& path, const TournamentGraph& g,
                      const GroundTruth* truth, const GraphMeta* meta) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot open \"" + path + "\" for writing");
  out << serialize_graph(g, truth, meta);
  if (!out) throw ParseError("write to \"" + path + "\" failed");
}

GraphFile read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

}  // namespace csort
