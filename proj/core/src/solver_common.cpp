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

#include "solver_common.hpp"

#include <cmath>
#include <vector>


#include "swipt/error.hpp"

namespace swipt::detail {

void require_feasible(const EigenChannels& lam, const SystemParams& params,
                      const QosConstraints& qos, const std::string& phase) {
  if (cheapest_binary_allocation(lam, params, qos)) return;
  std::string constraint = "power";
  if (qos.e_min > params.eta * lam.max() * qos.p_max) {
    constraint = "energy";
  } else if (qos.r_min > 0.0) {
    const std::vector<double> p = water_filling(lam.span(), qos.p_max);
    double capacity = 0.0;
    for (int i = 0; i < lam.count(); ++i) capacity += std::log2(1.0 + lam[i] * p[i]);
    if (capacity < qos.r_min) constraint = "rate";
  }
  throw InfeasibleError(constraint,
                        "no binary allocation meets the rate and energy floors within "
                        "the power budget",
                        phase);
}

AscentOptions ascent_options(const SolverConfig& cfg) {
  AscentOptions opts;
  opts.kkt_tol = cfg.kkt_tol;
  opts.max_inner = cfg.max_inner;
  opts.step0 = cfg.step0;
  return opts;
}

std::vector<double> start_budgets(double p_max) {
  std::vector<double> out;
  for (int k = -4; std::exp2(0.5 * k) <= p_max; ++k) out.push_back(std::exp2(0.5 * k));
  if (out.empty()) out.push_back(p_max);
  return out;
}

EvaluatedAllocation evaluate(Allocation alloc, const EigenChannels& lam,
                             const SystemParams& params, int n_active) {
  Metrics m = evaluate_metrics(alloc, lam, params, n_active);
  return {std::move(alloc), m};
}

}  // namespace swipt::detail
