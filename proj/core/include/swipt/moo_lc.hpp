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

#ifndef SWIPT_MOO_LC_HPP_
#define SWIPT_MOO_LC_HPP_

#include <vector>

#include "swipt/channel.hpp"
#include "swipt/solve_result.hpp"
#include "swipt/system_model.hpp"

namespace swipt {

struct MooState {
  double gamma1 = 1.0;  // rate weight
  double gamma2 = 0.0;  // harvested-energy weight
  double phi = 0.0;     // budget multiplier
  double c_eh = 0.0;    // theta * eta * sum(p * lambda)
};

// gamma1 = R / (R + theta E), gamma2 = 1 - gamma1; (1, 0) when R = E = 0.
MooState moo_weights(const SystemParams& params, const QosConstraints& qos);

// gamma1 * sum log2(1 + p lambda) + gamma2 * theta * eta * sum(p lambda).
double moo_objective(std::span<const double> power, const EigenChannels& lam,
                     const SystemParams& params, const MooState& weights);

struct MooInit {
  Allocation alloc;  // assign all 0.5
  MooState state;
};

// Closed-form maximizer of moo_objective over the budget, with phi found by
// bisection so that sum(p) = P_max.
MooInit moo_power_init(const EigenChannels& lam, const SystemParams& params,
                       const QosConstraints& qos);

// Same with explicit weights (gamma1 + gamma2 must be 1).
MooInit moo_power_init(const EigenChannels& lam, const SystemParams& params,
                       const QosConstraints& qos, double gamma1, double gamma2);

// Power init, eigen_assignment at those powers, then rounding and
// power_allocation. Trace columns: phase, ee, rate, energy, power.
// Phase failures surface as InfeasibleError with phase() set to "init",
// "assignment" or "power".
SolveResult solve_moo_lc(const EigenChannels& lam, const SystemParams& params,
                         const QosConstraints& qos, int n_active, const SolverConfig& cfg);

}  // namespace swipt

#endif  // SWIPT_MOO_LC_HPP_
