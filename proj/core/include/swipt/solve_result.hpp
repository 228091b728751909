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

#ifndef SWIPT_SOLVE_RESULT_HPP_
#define SWIPT_SOLVE_RESULT_HPP_

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "swipt/system_model.hpp"

namespace swipt {

// Tuning shared by the three solvers.
struct SolverConfig {
  double delta = 1e-6;    // Dinkelbach residual threshold
  int max_outer = 50;     // beta updates / alternation rounds
  int max_inner = 5000;   // gradient iterations per ascent call
  double step0 = 0.1;     // initial ascent step
  double kkt_tol = 1e-5;  // KKT residual at inner termination

  void validate() const;
};

struct EvaluatedAllocation {
  Allocation alloc;
  Metrics metrics;
};

// Column-labelled numeric table; one row per iteration or phase.
struct Trace {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  void add(std::vector<double> row);
  // Header plus rows, %.9g, LF line endings.
  void write_csv(std::ostream& os) const;
};

struct SolveResult {
  std::string algorithm;
  // Relaxed optimum; absent for solvers that never hold one.
  std::optional<EvaluatedAllocation> relaxed;
  // Binary allocation after rounding, repair and power re-optimization.
  EvaluatedAllocation rounded;
  bool feasible = false;   // rounded allocation passes check_feasible
  bool converged = false;
  int outer_iterations = 0;
  int inner_iterations = 0;
  Trace trace;
};

}  // namespace swipt

#endif  // SWIPT_SOLVE_RESULT_HPP_
