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

#ifndef SWIPT_ORACLE_HPP_
#define SWIPT_ORACLE_HPP_

#include "swipt/antenna_selection.hpp"
#include "swipt/channel.hpp"
#include "swipt/solve_result.hpp"
#include "swipt/system_model.hpp"

namespace swipt {

struct OracleConfig {
  int power_grid_steps = 200;  // grid points per axis, excluding 0
  int max_channels = 4;
  int max_antennas = 4;

  void validate() const;
};

// Every binary assignment crossed with every grid point of
// {p_i = k_i P_max / steps, sum k_i <= steps}. result.feasible is false (and
// rounded.metrics.ee is -inf) when no grid point meets the floors.
SolveResult oracle_fixed_set(const EigenChannels& lam, const SystemParams& params,
                             const QosConstraints& qos, int n_active,
                             const OracleConfig& ocfg);

// oracle_fixed_set on every non-empty receive-antenna subset.
SelectionOutcome oracle_full(const ChannelMatrix& h, const SystemParams& params,
                             const QosConstraints& qos, const OracleConfig& ocfg);

}  // namespace swipt

#endif  // SWIPT_ORACLE_HPP_
