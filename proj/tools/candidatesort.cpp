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
//
// Command-line front end: gen | sort | experiment | selfcheck.
// Exit codes: 0 success, 1 validation error, 2 internal failure (including
// a sort that exhausts its verification budget).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "csort/analysis.hpp"
#include "csort/candidate_sort.hpp"
#include "csort/errors.hpp"
#include "csort/experiment.hpp"
#include "csort/generators.hpp"
#include "csort/graph.hpp"
#include "csort/graph_io.hpp"
#include "csort/oracle.hpp"
#include "csort/rng.hpp"

namespace {

using csort::AmbiguityParams;
using csort::ElementId;
using csort::GraphMeta;
using csort::Model;
using csort::TournamentGraph;
using ordered_json = nlohmann::ordered_json;

struct GenArgs {
  std::string model;
  int n = 0;
  std::optional<int> nu;
  std::optional<int> k;
  std::optional<int> delta;
  std::optional<int> r;
  std::optional<int> gamma;
  std::optional<std::string> policy;
  std::uint64_t seed = 0;
  std::string out;
  bool redact = false;
};

struct SortArgs {
  std::string in;
  int nu_plus = 0;
  int nu_minus = 0;
  std::optional<std::uint64_t> budget;
  std::string report;
};

struct ExperimentArgs {
  std::string config;
  std::string out;
};

void require_flag(const std::optional<int>& v, const char* flag,
                  const std::string& model) {
  if (!v)
    throw csort::InvalidParameter("model " + model + " requires " + flag);
}

void forbid_flag(bool present, const char* flag, const std::string& model) {
  if (present)
    throw csort::InvalidParameter(std::string(flag) +
                                  " does not apply to model " + model);
}

int run_gen(const GenArgs& args) {
  const Model model = csort::model_from_name(args.model);
  if (args.out.empty()) throw csort::InvalidParameter("--out is required");

  GraphMeta meta;
  meta.model = args.model;
  switch (model) {
    case Model::Banded: {
      require_flag(args.nu, "--nu", args.model);
      forbid_flag(args.k.has_value(), "--k", args.model);
      forbid_flag(args.delta.has_value(), "--delta", args.model);
      forbid_flag(args.r.has_value(), "--r", args.model);
      forbid_flag(args.gamma.has_value(), "--gamma", args.model);
      forbid_flag(args.policy.has_value(), "--policy", args.model);
      csort::Instance inst = csort::gen_banded(args.n, *args.nu);
      meta.nu = *args.nu;
      meta.ambiguous_simple = 0;
      csort::write_graph_file(args.out, inst.graph,
                              args.redact ? nullptr : &inst.truth, &meta);
      return 0;
    }
    case Model::Corrupt: {
      require_flag(args.nu, "--nu", args.model);
      require_flag(args.k, "--k", args.model);
      forbid_flag(args.delta.has_value(), "--delta", args.model);
      forbid_flag(args.r.has_value(), "--r", args.model);
      forbid_flag(args.gamma.has_value(), "--gamma", args.model);
      const csort::CorruptionPolicy policy =
          csort::policy_from_name(args.policy.value_or("random"));
      csort::Instance inst = csort::gen_banded(args.n, *args.nu);
      inst.graph =
          csort::corrupt(inst.graph, inst.truth, *args.k, policy, args.seed);
      meta.nu = *args.nu;
      meta.k = *args.k;
      meta.policy = csort::policy_name(policy);
      meta.seed = args.seed;
      meta.ambiguous_simple = csort::count_ambiguous_simple(
          inst.graph, inst.truth, AmbiguityParams{*args.nu, *args.nu});
      csort::write_graph_file(args.out, inst.graph,
                              args.redact ? nullptr : &inst.truth, &meta);
      return 0;
    }
    case Model::Jnd: {
      require_flag(args.delta, "--delta", args.model);
      require_flag(args.r, "--r", args.model);
      forbid_flag(args.nu.has_value(), "--nu", args.model);
      forbid_flag(args.k.has_value(), "--k", args.model);
      forbid_flag(args.gamma.has_value(), "--gamma", args.model);
      forbid_flag(args.policy.has_value(), "--policy", args.model);
      csort::Instance inst =
          csort::gen_jnd(args.n, *args.delta, *args.r, args.seed);
      meta.delta = *args.delta;
      meta.r = *args.r;
      meta.seed = args.seed;
      meta.ambiguous_simple = csort::count_ambiguous_simple(
          inst.graph, inst.truth, AmbiguityParams{*args.delta, *args.delta});
      csort::write_graph_file(args.out, inst.graph,
                              args.redact ? nullptr : &inst.truth, &meta);
      return 0;
    }
    default: {
      require_flag(args.gamma, "--gamma", args.model);
      forbid_flag(args.nu.has_value(), "--nu", args.model);
      forbid_flag(args.k.has_value(), "--k", args.model);
      forbid_flag(args.delta.has_value(), "--delta", args.model);
      forbid_flag(args.r.has_value(), "--r", args.model);
      forbid_flag(args.policy.has_value(), "--policy", args.model);
      csort::LowerBoundInstance inst =
          csort::gen_lower_bound(args.n, *args.gamma);
      meta.gamma = inst.gamma;
      meta.k = inst.k;
      meta.ambiguous_simple = csort::count_ambiguous_simple(
          inst.graph, inst.truth, AmbiguityParams{inst.gamma, inst.gamma});
      meta.swap_pairs = inst.swap_pairs;
      csort::write_graph_file(args.out, inst.graph,
                              args.redact ? nullptr : &inst.truth, &meta);
      return 0;
    }
  }
}

void emit_report(const ordered_json& report, const std::string& path) {
  if (path.empty()) {
    std::cout << report.dump(2) << "\n";
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw csort::ParseError("cannot open \"" + path + "\" for writing");
  out << report.dump(2) << "\n";
}

int run_sort(const SortArgs& args) {
  if (args.in.empty()) throw csort::InvalidParameter("--in is required");
  if (args.nu_plus < 0 || args.nu_minus < 0)
    throw csort::InvalidParameter("ambiguity parameters must be >= 0");
  csort::GraphFile file = csort::read_graph_file(args.in);
  if (!file.truth)
    throw csort::InvalidParameter(
        "\"" + args.in +
        "\" carries no ground-truth values; the oracle cannot be built");

  csort::VerificationOracle oracle =
      args.budget ? csort::VerificationOracle(
                        *file.truth, static_cast<std::size_t>(*args.budget))
                  : csort::VerificationOracle(*file.truth);
  const AmbiguityParams nu{args.nu_plus, args.nu_minus};
  try {
    const csort::SortResult result = csort::sort(file.graph, nu, oracle);
    ordered_json report;
    report["order"] = result.order;
    report["verifications"] = result.verifications;
    report["app"] = result.total_appearances();
    ordered_json trace = ordered_json::array();
    for (const csort::PopEvent& ev : result.round_trace)
      trace.push_back(ev.heap_size);
    report["trace"] = std::move(trace);
    report["correct"] = result.order == file.truth->ascending();
    emit_report(report, args.report);
    return 0;
  } catch (const csort::BudgetExhausted& e) {
    ordered_json report;
    report["order"] = nullptr;
    report["verifications"] = oracle.count();
    report["app"] = nullptr;
    report["trace"] = nullptr;
    report["correct"] = false;
    report["error"] = e.what();
    emit_report(report, args.report);
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

int run_experiment_cmd(const ExperimentArgs& args) {
  if (args.config.empty()) throw csort::InvalidParameter("--config is required");
  std::ifstream in(args.config, std::ios::binary);
  if (!in) throw csort::ParseError("cannot open \"" + args.config + "\"");
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  csort::ExperimentConfig cfg = csort::ExperimentConfig::from_json(text);
  if (!args.out.empty()) cfg.out = args.out;

  const std::vector<csort::ExperimentRecord> records =
      csort::run_experiment(cfg);
  const std::string csv = csort::to_csv(records);
  if (cfg.out.empty()) {
    std::cout << csv;
    return 0;
  }
  std::ofstream out(cfg.out, std::ios::binary);
  if (!out)
    throw csort::ParseError("cannot open \"" + cfg.out + "\" for writing");
  out << csv;
  return 0;
}

// ---- selfcheck ----

bool check_line(const char* name, bool ok) {
  std::cout << (ok ? "[ ok ] " : "[FAIL] ") << name << "\n";
  return ok;
}

bool delta_close_identity() {
  for (int n = 1; n <= 40; ++n) {
    for (int delta = 0; delta < n; ++delta) {
      long long brute = 0;
      for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
          if (b - a <= delta) ++brute;
      if (csort::count_delta_close(n, delta) != brute) return false;
    }
  }
  return true;
}

bool composition_walk(std::vector<int>& parts, int rem, int total) {
  if (rem == 0) return csort::check_sum_log_bound(parts, total);
  for (int c = 1; c <= rem; ++c) {
    parts.push_back(c);
    const bool ok = composition_walk(parts, rem - c, total);
    parts.pop_back();
    if (!ok) return false;
  }
  return true;
}

bool sum_log_compositions() {
  for (int total = 1; total <= 14; ++total) {
    std::vector<int> parts;
    if (!composition_walk(parts, total, total)) return false;
  }
  return true;
}

bool banded_zero_verifications() {
  for (int n : {1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 200}) {
    for (int nu : {0, 1, 3, 10, (n - 1) / 2}) {
      if (nu > (n - 1) / 2) continue;  // two-sided band must fit in n-1
      csort::Instance inst = csort::gen_banded(n, nu);
      csort::VerificationOracle oracle(inst.truth);
      const csort::SortResult result =
          csort::sort(inst.graph, AmbiguityParams{nu, nu}, oracle);
      if (result.verifications != 0) return false;
      if (result.total_appearances() != n) return false;
      if (result.order != inst.truth.ascending()) return false;
    }
  }
  return true;
}

bool lower_bound_isomorphism() {
  for (int n : {8, 12, 20, 30, 40}) {
    for (int gamma : {1, 2, 5, 10, 18}) {
      if (gamma >= (n - 2) / 2) continue;
      const csort::LowerBoundInstance inst = csort::gen_lower_bound(n, gamma);
      if (static_cast<int>(inst.swap_pairs.size()) != inst.k) return false;
      if (inst.k != n / (2 * gamma + 2)) return false;
      for (const auto& [a, b] : inst.swap_pairs) {
        const auto pi = [&](ElementId x) {
          return x == a ? b : (x == b ? a : x);
        };
        for (ElementId i = 0; i < n; ++i)
          for (ElementId j = i + 1; j < n; ++j)
            if (inst.graph.edge_state(pi(i), pi(j)) !=
                inst.graph.edge_state(i, j))
              return false;
      }
    }
  }
  return true;
}

bool oracle_idempotent_cost() {
  std::vector<double> values;
  for (int i = 0; i < 50; ++i) values.push_back(i + 1);
  csort::GroundTruth truth(std::move(values));
  csort::VerificationOracle oracle(truth);
  csort::SplitMix64 rng(0xC0FFEE);
  std::set<std::pair<int, int>> distinct;
  for (int q = 0; q < 200; ++q) {
    const int a = static_cast<int>(rng.next_below(50));
    int b = static_cast<int>(rng.next_below(50));
    if (b == a) b = (b + 1) % 50;
    oracle.verify(a, b);
    oracle.verify(b, a);  // mirrored query must be free
    distinct.insert({std::min(a, b), std::max(a, b)});
    if (oracle.count() != distinct.size()) return false;
  }
  return true;
}

int run_selfcheck() {
  bool ok = true;
  ok &= check_line("close-pair count identity", delta_close_identity());
  ok &= check_line("log-sum bound over compositions", sum_log_compositions());
  ok &= check_line("banded inputs sort with zero verifications",
                   banded_zero_verifications());
  ok &= check_line("swap-pair transpositions fix the hard instances",
                   lower_bound_isomorphism());
  ok &= check_line("oracle bills each pair once", oracle_idempotent_cost());
  std::cout << (ok ? "selfcheck passed" : "selfcheck FAILED") << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"CandidateSort noisy-tournament sorting simulator"};
  app.require_subcommand(1);

  GenArgs gen_args;
  CLI::App* gen = app.add_subcommand("gen", "Generate a graph file");
  gen->add_option("--model", gen_args.model,
                  "banded | corrupt | jnd | lowerbound")
      ->required();
  gen->add_option("--n", gen_args.n, "Number of elements")->required();
  gen->add_option("--nu", gen_args.nu, "Band width (banded, corrupt)");
  gen->add_option("--k", gen_args.k, "Two-cycles to corrupt (corrupt)");
  gen->add_option("--delta", gen_args.delta, "Closeness threshold (jnd)");
  gen->add_option("--r", gen_args.r, "Comparisons per close pair (jnd)");
  gen->add_option("--gamma", gen_args.gamma, "Block half-width (lowerbound)");
  gen->add_option("--policy", gen_args.policy,
                  "random | correct | incorrect (corrupt)");
  gen->add_option("--seed", gen_args.seed, "Generator seed");
  gen->add_option("--out", gen_args.out, "Output path")->required();
  gen->add_flag("--redact", gen_args.redact,
                "Omit ground-truth values from the file");

  SortArgs sort_args;
  CLI::App* sort_cmd = app.add_subcommand("sort", "Sort a graph file");
  sort_cmd->add_option("--in", sort_args.in, "Graph file")->required();
  sort_cmd->add_option("--nu-plus", sort_args.nu_plus, "Ambiguity cap nu+")
      ->required();
  sort_cmd->add_option("--nu-minus", sort_args.nu_minus, "Ambiguity cap nu-")
      ->required();
  sort_cmd->add_option("--budget", sort_args.budget,
                       "Max distinct verifications");
  sort_cmd->add_option("--report", sort_args.report,
                       "Write the JSON report here instead of stdout");

  ExperimentArgs exp_args;
  CLI::App* exp = app.add_subcommand("experiment", "Run a parameter sweep");
  exp->add_option("--config", exp_args.config, "JSON config file")->required();
  exp->add_option("--out", exp_args.out, "CSV output path (overrides config)");

  CLI::App* selfcheck =
      app.add_subcommand("selfcheck", "Run the fast invariant suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (gen->parsed()) return run_gen(gen_args);
    if (sort_cmd->parsed()) return run_sort(sort_args);
    if (exp->parsed()) return run_experiment_cmd(exp_args);
    if (selfcheck->parsed()) return run_selfcheck();
  } catch (const csort::BudgetExhausted& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const csort::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
