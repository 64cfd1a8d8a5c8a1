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

#include "csort/experiment.hpp"

#include <chrono>
#include <cstdio>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "csort/analysis.hpp"
#include "csort/candidate_sort.hpp"
#include "csort/errors.hpp"
#include "csort/oracle.hpp"
#include "csort/rng.hpp"

namespace csort {
namespace {

using nlohmann::json;

constexpr std::uint64_t kTagPerm = 0x7065726DULL;  // truth-shuffle stream

std::vector<int> shuffled_values(int n, std::uint64_t seed) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  SplitMix64 rng(mix64(seed));
  for (int t = n - 1; t > 0; --t) {
    const int pick = static_cast<int>(rng.next_below(t + 1));
    std::swap(perm[t], perm[pick]);
  }
  return perm;
}

std::vector<int> grid_from_json(const json& j, const char* key) {
  std::vector<int> grid;
  if (j.is_number_integer()) {
    grid.push_back(j.get<int>());
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (!v.is_number_integer())
        throw ParseError(std::string("\"") + key +
                         "\" entries must be integers");
      grid.push_back(v.get<int>());
    }
  } else {
    throw ParseError(std::string("\"") + key +
                     "\" must be an integer or an array of integers");
  }
  if (grid.empty())
    throw ParseError(std::string("\"") + key + "\" must be non-empty");
  return grid;
}

void forbid(const json& j, const char* key, const char* model) {
  if (j.contains(key))
    throw ParseError(std::string("\"") + key + "\" does not apply to model " +
                     model);
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

std::string fmt_ms(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

struct Trial {
  ExperimentRecord record;
  Instance instance;
};

// Generates one trial instance and fills the parameter columns.
Trial make_trial(const ExperimentConfig& cfg, int n, int nu, int k, int delta,
                 int r, int gamma, std::uint64_t trial_seed) {
  const std::uint64_t perm_seed = derive_stream(trial_seed, kTagPerm, 0);
  ExperimentRecord rec;
  rec.model = cfg.model;
  rec.n = n;
  rec.seed = trial_seed;
  switch (cfg.model) {
    case Model::Banded: {
      rec.nu_plus = rec.nu_minus = nu;
      rec.bound = 0.0;
      Instance inst = gen_banded(n, nu, shuffled_values(n, perm_seed));
      rec.ambiguous_simple = count_ambiguous_simple(
          inst.graph, inst.truth, AmbiguityParams{nu, nu});
      return Trial{std::move(rec), std::move(inst)};
    }
    case Model::Corrupt: {
      rec.nu_plus = rec.nu_minus = nu;
      rec.k = k;
      rec.bound = static_cast<double>(k);
      Instance inst = gen_banded(n, nu, shuffled_values(n, perm_seed));
      inst.graph = corrupt(inst.graph, inst.truth, k, cfg.policy, trial_seed);
      rec.ambiguous_simple = count_ambiguous_simple(
          inst.graph, inst.truth, AmbiguityParams{nu, nu});
      return Trial{std::move(rec), std::move(inst)};
    }
    case Model::Jnd: {
      rec.nu_plus = rec.nu_minus = delta;
      rec.delta = delta;
      rec.r = r;
      rec.bound = jnd_bound(n, delta, r);
      Instance inst =
          gen_jnd(n, delta, r, trial_seed, shuffled_values(n, perm_seed));
      rec.ambiguous_simple = count_ambiguous_simple(
          inst.graph, inst.truth, AmbiguityParams{delta, delta});
      return Trial{std::move(rec), std::move(inst)};
    }
    default: {
      LowerBoundInstance inst = gen_lower_bound(n, gamma);
      rec.nu_plus = rec.nu_minus = gamma;
      rec.gamma = gamma;
      rec.k = inst.k;
      rec.bound = static_cast<double>(inst.k);
      rec.ambiguous_simple = count_ambiguous_simple(
          inst.graph, inst.truth, AmbiguityParams{gamma, gamma});
      return Trial{std::move(rec),
                   Instance{std::move(inst.graph), std::move(inst.truth)}};
    }
  }
}

std::string cell_label(const ExperimentRecord& rec) {
  std::ostringstream out;
  out << model_name(rec.model) << " n=" << rec.n << " nu=" << rec.nu_plus;
  if (rec.k) out << " k=" << *rec.k;
  if (rec.delta) out << " delta=" << *rec.delta;
  if (rec.r) out << " r=" << *rec.r;
  if (rec.gamma) out << " gamma=" << *rec.gamma;
  out << " seed=" << rec.seed;
  return out.str();
}

void run_trial(const ExperimentConfig& cfg, int n, int nu, int k, int delta,
               int r, int gamma, std::uint64_t trial_seed,
               std::vector<ExperimentRecord>& records) {
  Trial trial = make_trial(cfg, n, nu, k, delta, r, gamma, trial_seed);
  VerificationOracle oracle(trial.instance.truth);
  const AmbiguityParams params{trial.record.nu_plus, trial.record.nu_minus};

  const auto start = std::chrono::steady_clock::now();
  const SortResult result = sort(trial.instance.graph, params, oracle);
  const auto stop = std::chrono::steady_clock::now();

  if (result.order != trial.instance.truth.ascending())
    throw ExperimentAbort("sorted order disagrees with ground truth at " +
                          cell_label(trial.record));
  std::vector<int> trace;
  trace.reserve(result.round_trace.size());
  for (const PopEvent& ev : result.round_trace) trace.push_back(ev.heap_size);
  if (!check_sum_log_bound(trace, result.total_appearances()))
    throw ExperimentAbort("round trace violates the log-sum bound at " +
                          cell_label(trial.record));

  trial.record.verifications = result.verifications;
  trial.record.app = result.total_appearances();
  trial.record.ms =
      std::chrono::duration<double, std::milli>(stop - start).count();
  records.push_back(std::move(trial.record));
}

}  // namespace

std::string model_name(Model model) {
  switch (model) {
    case Model::Banded:
      return "banded";
    case Model::Corrupt:
      return "corrupt";
    case Model::Jnd:
      return "jnd";
    default:
      return "lowerbound";
  }
}

Model model_from_name(const std::string& name) {
  if (name == "banded") return Model::Banded;
  if (name == "corrupt") return Model::Corrupt;
  if (name == "jnd") return Model::Jnd;
  if (name == "lowerbound") return Model::LowerBound;
  throw ParseError("unknown model \"" + name +
                   "\" (want banded, corrupt, jnd, or lowerbound)");
}

std::string policy_name(CorruptionPolicy policy) {
  switch (policy) {
    case CorruptionPolicy::RandomDirection:
      return "random";
    case CorruptionPolicy::CorrectDirection:
      return "correct";
    default:
      return "incorrect";
  }
}

CorruptionPolicy policy_from_name(const std::string& name) {
  if (name == "random") return CorruptionPolicy::RandomDirection;
  if (name == "correct") return CorruptionPolicy::CorrectDirection;
  if (name == "incorrect") return CorruptionPolicy::IncorrectDirection;
  throw ParseError("unknown policy \"" + name +
                   "\" (want random, correct, or incorrect)");
}

ExperimentConfig ExperimentConfig::from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("config must be a JSON object");

  static const char* kKnown[] = {"model", "n",      "nu",     "k",
                                 "delta", "r",      "gamma",  "policy",
                                 "trials", "seed",  "out"};
  for (const auto& [key, value] : j.items()) {
    (void)value;
    bool known = false;
    for (const char* name : kKnown) known = known || key == name;
    if (!known) throw ParseError("unknown config key \"" + key + "\"");
  }

  ExperimentConfig cfg;
  if (!j.contains("model") || !j["model"].is_string())
    throw ParseError("config needs a \"model\" string");
  cfg.model = model_from_name(j["model"].get<std::string>());
  if (!j.contains("n")) throw ParseError("config needs an \"n\" grid");
  cfg.n = grid_from_json(j["n"], "n");

  const std::string model = model_name(cfg.model);
  switch (cfg.model) {
    case Model::Banded:
      if (!j.contains("nu")) throw ParseError("banded needs a \"nu\" grid");
      cfg.nu = grid_from_json(j["nu"], "nu");
      forbid(j, "k", "banded");
      forbid(j, "delta", "banded");
      forbid(j, "r", "banded");
      forbid(j, "gamma", "banded");
      forbid(j, "policy", "banded");
      break;
    case Model::Corrupt:
      if (!j.contains("nu")) throw ParseError("corrupt needs a \"nu\" grid");
      if (!j.contains("k")) throw ParseError("corrupt needs a \"k\" grid");
      cfg.nu = grid_from_json(j["nu"], "nu");
      cfg.k = grid_from_json(j["k"], "k");
      forbid(j, "delta", "corrupt");
      forbid(j, "r", "corrupt");
      forbid(j, "gamma", "corrupt");
      if (j.contains("policy")) {
        if (!j["policy"].is_string())
          throw ParseError("\"policy\" must be a string");
        cfg.policy = policy_from_name(j["policy"].get<std::string>());
      }
      break;
    case Model::Jnd:
      if (!j.contains("delta")) throw ParseError("jnd needs a \"delta\" grid");
      if (!j.contains("r")) throw ParseError("jnd needs an \"r\" grid");
      cfg.delta = grid_from_json(j["delta"], "delta");
      cfg.r = grid_from_json(j["r"], "r");
      forbid(j, "nu", "jnd");
      forbid(j, "k", "jnd");
      forbid(j, "gamma", "jnd");
      forbid(j, "policy", "jnd");
      break;
    default:
      if (!j.contains("gamma"))
        throw ParseError("lowerbound needs a \"gamma\" grid");
      cfg.gamma = grid_from_json(j["gamma"], "gamma");
      forbid(j, "nu", model.c_str());
      forbid(j, "k", model.c_str());
      forbid(j, "delta", model.c_str());
      forbid(j, "r", model.c_str());
      forbid(j, "policy", model.c_str());
      break;
  }

  if (j.contains("trials")) {
    if (!j["trials"].is_number_integer())
      throw ParseError("\"trials\" must be an integer");
    cfg.trials = j["trials"].get<int>();
    if (cfg.trials < 1) throw ParseError("\"trials\" must be at least 1");
  }
  if (j.contains("seed")) {
    if (!j["seed"].is_number_integer())
      throw ParseError("\"seed\" must be an integer");
    cfg.seed = j["seed"].get<std::uint64_t>();
  }
  if (j.contains("out")) {
    if (!j["out"].is_string()) throw ParseError("\"out\" must be a string");
    cfg.out = j["out"].get<std::string>();
  }
  return cfg;
}

std::vector<ExperimentRecord> run_experiment(const ExperimentConfig& cfg) {
  if (cfg.trials < 1) throw InvalidParameter("trials must be at least 1");
  if (cfg.n.empty()) throw InvalidParameter("empty n grid");

  // Grids that do not apply hold the single placeholder 0 so the loop nest
  // stays uniform; make_trial ignores the placeholder slots.
  const std::vector<int> one{0};
  const std::vector<int>& nus = cfg.nu.empty() ? one : cfg.nu;
  const std::vector<int>& ks = cfg.k.empty() ? one : cfg.k;
  const std::vector<int>& deltas = cfg.delta.empty() ? one : cfg.delta;
  const std::vector<int>& rs = cfg.r.empty() ? one : cfg.r;
  const std::vector<int>& gammas = cfg.gamma.empty() ? one : cfg.gamma;

  std::vector<ExperimentRecord> records;
  std::uint64_t cell = 0;
  for (int n : cfg.n)
    for (int nu : nus)
      for (int k : ks)
        for (int delta : deltas)
          for (int r : rs)
            for (int gamma : gammas) {
              for (int trial = 0; trial < cfg.trials; ++trial) {
                const std::uint64_t trial_seed =
                    derive_stream(cfg.seed, cell, trial);
                run_trial(cfg, n, nu, k, delta, r, gamma, trial_seed, records);
              }
              ++cell;
            }
  return records;
}

std::string to_csv(const std::vector<ExperimentRecord>& records) {
  std::ostringstream out;
  out << kCsvHeader << "\n";
  for (const ExperimentRecord& rec : records) {
    out << model_name(rec.model) << ',' << rec.n << ',' << rec.nu_plus << ','
        << rec.nu_minus << ',';
    if (rec.k) out << *rec.k;
    out << ',';
    if (rec.delta) out << *rec.delta;
    out << ',';
    if (rec.r) out << *rec.r;
    out << ',';
    if (rec.gamma) out << *rec.gamma;
    out << ',' << rec.seed << ',' << rec.verifications << ',' << rec.app << ','
        << rec.ambiguous_simple << ',' << fmt_double(rec.bound) << ','
        << fmt_ms(rec.ms) << "\n";
  }
  return out.str();
}

}  // namespace csort
