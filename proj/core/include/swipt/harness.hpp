// Copyright 2026 The swipt-ee Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SWIPT_HARNESS_HPP_
#define SWIPT_HARNESS_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "swipt/antenna_selection.hpp"
#include "swipt/oracle.hpp"
#include "swipt/solve_result.hpp"
#include "swipt/system_model.hpp"

namespace swipt {

enum class Selection { kFixedFull, kExhaustive, kFrobenius };

std::string_view to_string(Selection s);
Selection parse_selection(std::string_view name);

struct SweepAxis {
  std::string variable;  // p_max, r_min, e_min, p_sta or n_active
  std::vector<double> values;
};

struct RunConfig {
  SystemParams params;
  QosConstraints qos;
  int trials = 1;
  std::uint64_t master_seed = 1;
  std::vector<InnerSolver> algorithms = {InnerSolver::kJeapa};
  std::vector<Selection> selection = {Selection::kFixedFull};
  std::optional<SweepAxis> sweep;
  SolverConfig solver_cfg;
  bool oracle_check = false;
  OracleConfig oracle;
  int max_channel_draws = 1000;

  void validate() const;
};

// Parses the JSON config. Unknown fields, wrong types and out-of-range values
// raise ConfigError naming the field (and the line for syntax errors).
RunConfig parse_run_config(std::string_view json_text);
RunConfig load_run_config(const std::string& path);

struct TrialRecord {
  int trial = 0;
  std::string algorithm;
  std::string selection;
  std::optional<double> sweep_value;
  int n_active = 0;
  std::string antenna_set;
  std::optional<double> ee_relaxed;
  double ee_rounded = 0.0;
  double rate = 0.0;
  double energy = 0.0;
  double power = 0.0;  // total consumed power P
  bool feasible = false;
  int outer_iters = 0;
  int inner_iters = 0;
  int channel_draws = 0;
  std::string status;  // "ok", or what stopped the solve
  double runtime_ms = 0.0;
};

struct RunOptions {
  int workers = 0;      // 0: SWIPT_WORKERS, else hardware concurrency
  bool timing = false;  // adds the runtime_ms column
};

int resolve_workers(int requested);

// Per-trial seed, then redraws (derive_seed(seed_t, attempt)) until the
// power model is well defined on the full antenna set.
struct TrialChannel {
  ChannelMatrix h;
  int draws = 0;
};
TrialChannel trial_channel(const RunConfig& config, int trial);

// One record per trial x sweep value x algorithm x selection, ordered by
// trial, then sweep value, then algorithm, then selection.
std::vector<TrialRecord> run(const RunConfig& config, const RunOptions& opts = {});
void write_records_csv(const std::vector<TrialRecord>& records, std::ostream& os,
                       bool timing = false);

// Paired per-trial differences between every two schemes, where the schemes
// are the requested algorithm/selection pairs plus the no_eh and min_power
// baselines on the full antenna set.
struct ComparisonRow {
  int trial = 0;
  std::optional<double> sweep_value;
  std::string scheme_a;
  std::string scheme_b;
  double ee_a = 0.0;
  double ee_b = 0.0;
  std::optional<double> relaxed_a;
  std::optional<double> relaxed_b;
};
std::vector<ComparisonRow> compare(const RunConfig& config, const RunOptions& opts = {});
void write_comparison_csv(const std::vector<ComparisonRow>& rows, std::ostream& os);

// Trace of one trial at the first sweep value with the first selection.
SolveResult trace(const RunConfig& config, int trial, InnerSolver algorithm);

struct OracleCheckReport {
  int checks = 0;
  int violations = 0;
  std::vector<std::string> lines;
};
// For every trial and algorithm on the full antenna set: relaxed EE >= oracle
// EE - 1e-3 and rounded EE <= relaxed EE + 1e-6. Rounded-vs-oracle gaps are
// reported, not checked.
OracleCheckReport oracle_check(const RunConfig& config, const RunOptions& opts = {});

}  // namespace swipt

#endif  // SWIPT_HARNESS_HPP_
