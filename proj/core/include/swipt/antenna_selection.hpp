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

#ifndef SWIPT_ANTENNA_SELECTION_HPP_
#define SWIPT_ANTENNA_SELECTION_HPP_

#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "swipt/channel.hpp"
#include "swipt/solve_result.hpp"
#include "swipt/system_model.hpp"

namespace swipt {

struct OracleConfig;

enum class InnerSolver { kDmCvx, kJeapa, kMooLc, kOracle };

std::string_view to_string(InnerSolver s);
// Accepts "dm_cvx", "jeapa", "moo_lc", "oracle".
InnerSolver parse_inner_solver(std::string_view name);

// Dispatches to solve_dinkelbach, solve_jeapa, solve_moo_lc or
// oracle_fixed_set.
SolveResult run_inner_solver(InnerSolver solver, const EigenChannels& lam,
                             const SystemParams& params, const QosConstraints& qos,
                             int n_active, const SolverConfig& cfg, const OracleConfig& ocfg);

struct SelectionRow {
  int n = 0;
  AntennaSet antennas;
  double ee = 0.0;  // -inf when no subset of this size was feasible
  double rate = 0.0;
  double energy = 0.0;
  double power = 0.0;
  bool feasible = false;
};

struct SelectionOutcome {
  AntennaSet best_set;
  SolveResult best_result;
  std::vector<SelectionRow> per_n_table;  // one row per N = 1..N_R
  std::string strategy;                   // "exhaustive" or "frobenius"
  std::string inner_solver;
  int evaluations = 0;
  bool feasible = false;  // some subset produced a feasible allocation
};

struct SelectionScores {
  double det_score = 0.0;    // det(H H^H)
  double trace_score = 0.0;  // tr(H H^H)
  std::vector<double> frob_scores;
  double scalarization_weight = 0.0;
  // log2 det(I + (P/N_T) H H^H) + weight * eta * (P/N_T) tr(H H^H).
  double weighted_score = 0.0;
};

struct SelectionOptions {
  InnerSolver solver = InnerSolver::kJeapa;
  SolverConfig cfg;
  int max_exhaustive_antennas = 12;
};

// Every non-empty subset; ties go to the smaller set, then the
// lexicographically smaller index list.
SelectionOutcome select_exhaustive(const ChannelMatrix& h, const SystemParams& params,
                                   const QosConstraints& qos, const SelectionOptions& opts);

// Prefixes of the antennas sorted by descending row norm.
SelectionOutcome select_frobenius(const ChannelMatrix& h, const SystemParams& params,
                                  const QosConstraints& qos, const SelectionOptions& opts);

SelectionScores selection_scores(const ChannelMatrix& h_chi, double varpi,
                                 double transmit_power = 1.0, double eta = 0.1);

// Writes N, antenna_set, ee, rate, energy, power, feasible.
void write_selection_csv(const SelectionOutcome& outcome, std::ostream& os);

// Shared by the selection strategies and the oracle. `evaluate` returns the
// inner result for one subset; failures should be reported through
// SolveResult::feasible. Evaluates in the given order and reduces with the
// documented tie rule.
SelectionOutcome reduce_subsets(const std::vector<AntennaSet>& subsets, int n_rx,
                                const std::function<SolveResult(const AntennaSet&)>& evaluate,
                                std::string strategy, std::string inner_solver);

}  // namespace swipt

#endif  // SWIPT_ANTENNA_SELECTION_HPP_
