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

#ifndef SWIPT_SYSTEM_MODEL_HPP_
#define SWIPT_SYSTEM_MODEL_HPP_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "swipt/channel.hpp"

namespace swipt {

// Absolute slack tolerance used by every feasibility decision.
inline constexpr double kSlackTolerance = 1e-9;

// Relaxed assignments at or below this value contribute no rate.
inline constexpr double kAssignFloor = 1e-9;

// Hardware constants of the link. Powers in watts.
struct SystemParams {
  int n_tx = 8;
  int n_rx = 8;
  double zeta = 1.0 / 0.38;  // reciprocal of the PA drain efficiency
  double eta = 0.1;          // RF-to-DC harvester efficiency
  double p_sta = 5.0;        // transmitter static power
  double p_ant_bs = 1.0;     // per transmit antenna
  double p_ant = 1.0;        // per active receive antenna
  double theta = 1.0;        // bits/s/Hz credited per harvested watt

  // P_sta + P_ant^BS * N_T.
  double static_power() const { return p_sta + p_ant_bs * n_tx; }
  // Static power plus the receive chains of `n_active` antennas.
  double circuit_power(int n_active) const { return static_power() + p_ant * n_active; }

  // Throws InvalidArgument when an invariant is broken.
  void validate() const;
};

struct QosConstraints {
  double r_min = 0.0;  // bits/s/Hz
  double e_min = 0.0;  // W
  double p_max = 1.0;  // W

  void validate() const;
};

// Eigen-channel assignment (1 = information decoding, 0 = energy harvesting,
// fractional when relaxed) and per-channel transmit power.
struct Allocation {
  std::vector<double> assign;
  std::vector<double> power;

  Allocation() = default;
  // Throws InvalidArgument on unequal lengths, assign outside [0, 1],
  // negative or non-finite power.
  Allocation(std::vector<double> assign, std::vector<double> power);

  int size() const { return static_cast<int>(assign.size()); }
  bool is_binary() const;
  double transmit_power() const;
};

struct Metrics {
  double rate = 0.0;            // C, bits/s/Hz
  double energy = 0.0;          // E, W
  double transmit_power = 0.0;  // P_T, W
  double circuit_power = 0.0;   // P_C, W
  double total_power = 0.0;     // P = zeta*P_T + P_C - E, W
  double ee = 0.0;              // C / P, bits/s/Hz per W
};

struct FeasibilityReport {
  double rate_slack = 0.0;    // C - R_min
  double energy_slack = 0.0;  // E - E_min
  double power_slack = 0.0;   // P_max - sum(p)
  double assign_slack = 0.0;  // min_i min(a_i, 1 - a_i)
  double nonneg_slack = 0.0;  // min_i p_i
  bool feasible = false;

  // Name of the first violated constraint, empty when feasible.
  std::string violated() const;
};

// Contribution a * log2(1 + z / a) of one channel with z = p * lambda; the
// a -> 0 limit is 0.
double relaxed_rate_term(double assign, double snr);

// sum_i a_i log2(1 + p_i lambda_i / a_i).
double sum_rate(const Allocation& alloc, const EigenChannels& lam);

// eta * sum_i (1 - a_i) p_i lambda_i.
double harvested_energy(const Allocation& alloc, const EigenChannels& lam,
                        const SystemParams& params);

// Fills every Metrics field. Throws NonPositivePowerError if P <= 0 and
// InvalidArgument if n_active < 1 or the lengths disagree.
Metrics evaluate_metrics(const Allocation& alloc, const EigenChannels& lam,
                         const SystemParams& params, int n_active);

FeasibilityReport check_feasible(const Allocation& alloc, const EigenChannels& lam,
                                 const SystemParams& params,
                                 const QosConstraints& qos);

// Nearest of {0, 1} per entry, ties to 1. Powers pass through unchanged.
Allocation round_assignment(const Allocation& alloc);

// ---------------------------------------------------------------------------
// Closed-form helpers shared by the solvers and the feasibility pre-pass.

// Rate-maximizing water-filling of `budget` over `gains`.
std::vector<double> water_filling(std::span<const double> gains, double budget);

// Cheapest powers reaching sum log2(1 + p_i g_i) >= rate (inverse
// water-filling). Returns nullopt if rate > 0 and every gain is zero.
std::optional<std::vector<double>> min_power_for_rate(std::span<const double> gains,
                                                      double rate);

// Minimum transmit power with which binary assignment `assign` meets both
// QoS floors, together with a power vector achieving it; nullopt if no
// finite power suffices. The budget P_max is not applied.
struct MinPowerPoint {
  double transmit_power = 0.0;
  std::vector<double> power;
};
std::optional<MinPowerPoint> min_power_for_assignment(std::span<const double> assign,
                                                      const EigenChannels& lam,
                                                      const SystemParams& params,
                                                      const QosConstraints& qos);

// Cheapest binary allocation meeting both QoS floors (at most one harvesting
// channel is ever needed). nullopt when even the cheapest exceeds P_max,
// i.e. the unrelaxed problem is infeasible.
std::optional<Allocation> cheapest_binary_allocation(const EigenChannels& lam,
                                                     const SystemParams& params,
                                                     const QosConstraints& qos);

// zeta - eta * lambda_max. The power model is well defined (P >= P_C > 0 on
// the whole feasible set) iff this is positive.
double power_model_margin(const EigenChannels& lam, const SystemParams& params);

// Throws NonPositivePowerError if power_model_margin(...) <= 0.
void screen_power_model(const EigenChannels& lam, const SystemParams& params);

}  // namespace swipt

#endif  // SWIPT_SYSTEM_MODEL_HPP_
