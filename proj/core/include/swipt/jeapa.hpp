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

#ifndef SWIPT_JEAPA_HPP_
#define SWIPT_JEAPA_HPP_

#include <optional>
#include <span>
#include <vector>

#include "swipt/channel.hpp"
#include "swipt/solve_result.hpp"
#include "swipt/system_model.hpp"

namespace swipt {

// Per-channel gains seen by each block of the alternation.
struct EffectiveChannels {
  std::vector<double> lam_hat;    // lambda / max(a, floor)
  std::vector<double> lam_check;  // (1 - a) * lambda
  std::vector<double> lam_tilde;  // p * lambda
  double p_fix = 0.0;             // P_sta + P_ant^BS N_T + P_ant N
  double p_fix_tilde = 0.0;       // zeta sum p + p_fix - eta sum lam_tilde

  static EffectiveChannels from(const Allocation& x, const EigenChannels& lam,
                                const SystemParams& params, int n_active);
};

struct PowerDuals {
  double rho = 0.0;    // rate
  double kappa = 0.0;  // energy
  double xi = 0.0;     // budget
};

struct AssignDuals {
  std::vector<double> nu;  // a_i <= 1
  double tau = 0.0;        // rate
  double sigma_c = 0.0;    // energy
};

// EE of x plus the multiplier terms of the power block, and its gradient in p.
double power_lagrangian(const Allocation& x, const EigenChannels& lam,
                        const SystemParams& params, const QosConstraints& qos,
                        int n_active, const PowerDuals& duals);
std::vector<double> power_lagrangian_gradient(const Allocation& x, const EigenChannels& lam,
                                              const SystemParams& params,
                                              const QosConstraints& qos, int n_active,
                                              const PowerDuals& duals);

// Same for the assignment block; the gradient is taken in a.
double assignment_lagrangian(const Allocation& x, const EigenChannels& lam,
                             const SystemParams& params, const QosConstraints& qos,
                             int n_active, const AssignDuals& duals);
std::vector<double> assignment_lagrangian_gradient(const Allocation& x,
                                                   const EigenChannels& lam,
                                                   const SystemParams& params,
                                                   const QosConstraints& qos, int n_active,
                                                   const AssignDuals& duals);

struct PowerStep {
  Allocation alloc;
  PowerDuals duals;
  double kkt_residual = 0.0;
  int iterations = 0;
};

struct AssignStep {
  Allocation alloc;
  AssignDuals duals;
  double kkt_residual = 0.0;
  int iterations = 0;
};

// Maximizes EE over p with the assignment held fixed. `start` seeds the
// ascent (defaults to the cheapest feasible power). Throws InfeasibleError if
// no power within the budget meets the floors, IterationLimitError if the
// KKT tolerance is not reached.
PowerStep power_allocation(std::span<const double> assign, const EigenChannels& lam,
                           const SystemParams& params, const QosConstraints& qos,
                           int n_active, const SolverConfig& cfg,
                           std::optional<std::vector<double>> start = std::nullopt);

// Maximizes EE over a in [0, 1]^L with the power held fixed.
AssignStep eigen_assignment(std::span<const double> power, const EigenChannels& lam,
                            const SystemParams& params, const QosConstraints& qos,
                            int n_active, const SolverConfig& cfg,
                            std::optional<std::vector<double>> start = std::nullopt);

// Rounds `relaxed`, repairs the assignment by flipping entries closest to 0.5
// first, then re-optimizes power. Fills result.rounded, result.feasible and
// adds the inner iterations spent.
void round_and_reoptimize(const Allocation& relaxed, const EigenChannels& lam,
                          const SystemParams& params, const QosConstraints& qos,
                          int n_active, const SolverConfig& cfg, SolveResult& result);

// Alternates eigen_assignment and power_allocation until the EE gain of a
// round drops below 1e-6, then rounds. Trace columns:
// round, ee, rate, energy, power, max_dual (last row is the rounded point).
SolveResult solve_jeapa(const EigenChannels& lam, const SystemParams& params,
                        const QosConstraints& qos, int n_active, const SolverConfig& cfg);

}  // namespace swipt

#endif  // SWIPT_JEAPA_HPP_
