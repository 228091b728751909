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

#ifndef SWIPT_DM_CVX_HPP_
#define SWIPT_DM_CVX_HPP_

#include <vector>

#include "swipt/channel.hpp"
#include "swipt/solve_result.hpp"
#include "swipt/system_model.hpp"

namespace swipt {

struct DinkelbachState {
  double beta = 0.0;
  double residual = 0.0;
  struct Step {
    double beta;
    double residual;
  };
  std::vector<Step> trace;
};

// Numerator of the EE ratio; identical to sum_rate.
double u_r(const Allocation& alloc, const EigenChannels& lam);

// Denominator of the EE ratio. Throws NonPositivePowerError when <= 0.
double u_t(const Allocation& alloc, const EigenChannels& lam, const SystemParams& params,
           int n_active);

// U_R - beta * U_T.
double subtractive_objective(const Allocation& alloc, const EigenChannels& lam,
                             const SystemParams& params, int n_active, double beta);

// Maximizes U_R - beta U_T over the relaxed feasible set, starting from
// `start` when given plus two fixed starts, and returns the best KKT point.
// Throws InfeasibleError when the problem has no feasible binary point and
// IterationLimitError when no start reaches cfg.kkt_tol.
Allocation solve_subtractive(double beta, const EigenChannels& lam,
                             const SystemParams& params, const QosConstraints& qos,
                             int n_active, const SolverConfig& cfg,
                             const Allocation* start = nullptr);

// Dinkelbach iteration from beta = 0, then rounding. Trace columns:
// iter, beta, residual, rate, energy, power, ee (last row is the rounded
// point with its residual at the final beta).
SolveResult solve_dinkelbach(const EigenChannels& lam, const SystemParams& params,
                             const QosConstraints& qos, int n_active,
                             const SolverConfig& cfg);

// The same run with the Dinkelbach state exposed.
SolveResult solve_dinkelbach(const EigenChannels& lam, const SystemParams& params,
                             const QosConstraints& qos, int n_active,
                             const SolverConfig& cfg, DinkelbachState& state);

}  // namespace swipt

#endif  // SWIPT_DM_CVX_HPP_
