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

#ifndef CSORT_EXPERIMENT_HPP_
#define CSORT_EXPERIMENT_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "csort/generators.hpp"
#include "csort/graph.hpp"

namespace csort {

enum class Model { Banded, Corrupt, Jnd, LowerBound };

// Lowercase names used in config files and the CSV: banded, corrupt, jnd,
// lowerbound.
std::string model_name(Model model);
Model model_from_name(const std::string& name);

std::string policy_name(CorruptionPolicy policy);
CorruptionPolicy policy_from_name(const std::string& name);

// Parameter sweep over the cross product of the grids that apply to the
// model. JSON config keys: model (string, required), n / nu / k / delta /
// r / gamma (int or array of ints), policy (corrupt only, default
// "random"), trials (default 1), seed (default 0), out (default "").
// Grids that do not apply to the model are rejected.
struct ExperimentConfig {
  Model model = Model::Banded;
  std::vector<int> n;
  std::vector<int> nu;     // banded, corrupt
  std::vector<int> k;      // corrupt
  std::vector<int> delta;  // jnd
  std::vector<int> r;      // jnd
  std::vector<int> gamma;  // lowerbound
  CorruptionPolicy policy = CorruptionPolicy::RandomDirection;
  int trials = 1;
  std::uint64_t seed = 0;
  std::string out;

  static ExperimentConfig from_json(const std::string& text);
};

// One (cell, trial). Optionals that do not apply to the model stay empty
// in the CSV; nu_plus/nu_minus always hold the ambiguity parameters the
// sorter ran with (delta for jnd, gamma for lowerbound).
struct ExperimentRecord {
  Model model;
  int n = 0;
  int nu_plus = 0;
  int nu_minus = 0;
  std::optional<int> k;
  std::optional<int> delta;
  std::optional<int> r;
  std::optional<int> gamma;
  std::uint64_t seed = 0;
  std::size_t verifications = 0;
  long long app = 0;               // total appearances over both processes
  long long ambiguous_simple = 0;  // recounted from the generated graph
  double bound = 0.0;  // constant-free driver: 0 / k / n*delta*2^-r / k
  double ms = 0.0;     // wall time of the sort call
};

inline constexpr char kCsvHeader[] =
    "model,n,nu_plus,nu_minus,k,delta,r,gamma,seed,verifications,app,"
    "ambiguous_simple,bound,ms";

// Runs every cell x trial in deterministic grid order (n outermost, then
// nu, k, delta, r, gamma; trials innermost). Each trial derives its own
// seed from (base seed, cell index, trial), generates a fresh instance
// with a seed-shuffled truth permutation (identity for lowerbound, whose
// construction is order-rigid), sorts with a fresh oracle, and hard-fails
// with ExperimentAbort if the output order or the trace log-sum invariant
// is wrong. Records never contain an incorrect sort.
std::vector<ExperimentRecord> run_experiment(const ExperimentConfig& cfg);

// Header plus one newline-terminated row per record. Identical configs
// produce identical bytes except the ms column.
std::string to_csv(const std::vector<ExperimentRecord>& records);

}  // namespace csort

#endif  // CSORT_EXPERIMENT_HPP_
