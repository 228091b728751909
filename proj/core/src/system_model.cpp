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

#include "swipt/system_model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "swipt/error.hpp"

namespace swipt {

namespace {

void require_same_length(const Allocation& alloc, const EigenChannels& lam) {
  if (alloc.size() != lam.count()) {
    throw InvalidArgument("allocation length " + std::to_string(alloc.size()) +
                          " does not match " + std::to_string(lam.count()) +
                          " eigen-channels");
  }
}

// Indices of `gains` sorted by descending gain, zero gains dropped.
std::vector<size_t> positive_by_gain(std::span<const double> gains) {
  std::vector<size_t> order;
  for (size_t i = 0; i < gains.size(); ++i) {
    if (gains[i] > 0.0) order.push_back(i);
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t a, size_t b) { return gains[a] > gains[b]; });
  return order;
}

}  // namespace

void SystemParams::validate() const {
  if (n_tx < 1 || n_rx < 1) throw InvalidArgument("n_tx and n_rx must be >= 1");
  if (!(zeta >= 1.0) || !std::isfinite(zeta)) {
    throw InvalidArgument("zeta must be finite and >= 1 (drain efficiency <= 100%)");
  }
  if (!(eta > 0.0 && eta <= 1.0)) throw InvalidArgument("eta must lie in (0, 1]");
  if (!(p_sta >= 0.0) || !(p_ant_bs >= 0.0) || !(p_ant >= 0.0)) {
    throw InvalidArgument("circuit powers must be >= 0");
  }
  if (!(theta > 0.0) || !std::isfinite(theta)) throw InvalidArgument("theta must be > 0");
}

void QosConstraints::validate() const {
  if (!(r_min >= 0.0) || !std::isfinite(r_min)) throw InvalidArgument("r_min must be >= 0");
  if (!(e_min >= 0.0) || !std::isfinite(e_min)) throw InvalidArgument("e_min must be >= 0");
  if (!(p_max > 0.0) || !std::isfinite(p_max)) throw InvalidArgument("p_max must be > 0");
}

Allocation::Allocation(std::vector<double> a, std::vector<double> p)
    : assign(std::move(a)), power(std::move(p)) {
  if (assign.size() != power.size()) {
    throw InvalidArgument("assign and power lengths differ");
  }
  for (size_t i = 0; i < assign.size(); ++i) {
    if (!(assign[i] >= 0.0 && assign[i] <= 1.0)) {
      throw InvalidArgument("assignment entries must lie in [0, 1]");
    }
    if (!(power[i] >= 0.0) || !std::isfinite(power[i])) {
      throw InvalidArgument("powers must be finite and >= 0");
    }
  }
}

bool Allocation::is_binary() const {
  return std::all_of(assign.begin(), assign.end(),
                     [](double a) { return a == 0.0 || a == 1.0; });
}

double Allocation::transmit_power() const {
  return std::accumulate(power.begin(), power.end(), 0.0);
}

std::string FeasibilityReport::violated() const {
  if (rate_slack < -kSlackTolerance) return "rate";
  if (energy_slack < -kSlackTolerance) return "energy";
  if (power_slack < -kSlackTolerance) return "power";
  if (assign_slack < -kSlackTolerance) return "assign";
  if (nonneg_slack < -kSlackTolerance) return "nonneg";
  return {};
}

double relaxed_rate_term(double assign, double snr) {
  if (assign <= kAssignFloor) return 0.0;
  return assign * std::log2(1.0 + snr / assign);
}

double sum_rate(const Allocation& alloc, const EigenChannels& lam) {
  require_same_length(alloc, lam);
  double c = 0.0;
  for (int i = 0; i < alloc.size(); ++i) {
    const auto k = static_cast<size_t>(i);
    c += relaxed_rate_term(alloc.assign[k], alloc.power[k] * lam[i]);
  }
  return c;
}

double harvested_energy(const Allocation& alloc, const EigenChannels& lam,
                        const SystemParams& params) {
  require_same_length(alloc, lam);
  double e = 0.0;
  for (int i = 0; i < alloc.size(); ++i) {
    const auto k = static_cast<size_t>(i);
    e += (1.0 - alloc.assign[k]) * alloc.power[k] * lam[i];
  }
  return params.eta * e;
}

Metrics evaluate_metrics(const Allocation& alloc, const EigenChannels& lam,
                         const SystemParams& params, int n_active) {
  if (n_active < 1) throw InvalidArgument("n_active must be >= 1");
  Metrics m;
  m.rate = sum_rate(alloc, lam);
  m.energy = harvested_energy(alloc, lam, params);
  m.transmit_power = alloc.transmit_power();
  m.circuit_power = params.circuit_power(n_active);
  m.total_power = params.zeta * m.transmit_power + m.circuit_power - m.energy;
  if (!(m.total_power > 0.0)) {
    throw NonPositivePowerError("net power consumption is not positive (" +
                                std::to_string(m.total_power) + " W)");
  }
  m.ee = m.rate / m.total_power;
  return m;
}

FeasibilityReport check_feasible(const Allocation& alloc, const EigenChannels& lam,
                                 const SystemParams& params,
                                 const QosConstraints& qos) {
  FeasibilityReport r;
  r.rate_slack = sum_rate(alloc, lam) - qos.r_min;
  r.energy_slack = harvested_energy(alloc, lam, params) - qos.e_min;
  r.power_slack = qos.p_max - alloc.transmit_power();
  r.assign_slack = std::numeric_limits<double>::infinity();
  r.nonneg_slack = std::numeric_limits<double>::infinity();
  for (int i = 0; i < alloc.size(); ++i) {
    const auto k = static_cast<size_t>(i);
    r.assign_slack = std::min({r.assign_slack, alloc.assign[k], 1.0 - alloc.assign[k]});
    r.nonneg_slack = std::min(r.nonneg_slack, alloc.power[k]);
  }
  r.feasible = r.violated().empty();
  return r;
}

Allocation round_assignment(const Allocation& alloc) {
  Allocation out = alloc;
  for (double& a : out.assign) a = a >= 0.5 ? 1.0 : 0.0;
  return out;
}

std::vector<double> water_filling(std::span<const double> gains, double budget) {
  std::vector<double> p(gains.size(), 0.0);
  const auto order = positive_by_gain(gains);
  if (order.empty() || !(budget > 0.0)) return p;
  double inv_sum = 0.0;
  double level = 0.0;
  size_t active = 0;
  for (size_t k = 0; k < order.size(); ++k) {
    inv_sum += 1.0 / gains[order[k]];
    const double mu = (budget + inv_sum) / static_cast<double>(k + 1);
    if (mu <= 1.0 / gains[order[k]]) break;
    level = mu;
    active = k + 1;
  }
  for (size_t k = 0; k < active; ++k) {
    p[order[k]] = std::max(0.0, level - 1.0 / gains[order[k]]);
  }
  return p;
}

std::optional<std::vector<double>> min_power_for_rate(std::span<const double> gains,
                                                      double rate) {
  std::vector<double> p(gains.size(), 0.0);
  if (!(rate > 0.0)) return p;
  const auto order = positive_by_gain(gains);
  if (order.empty()) return std::nullopt;
  double log_sum = 0.0;
  for (size_t k = 0; k < order.size(); ++k) {
    log_sum += std::log2(gains[order[k]]);
    const double mu = std::exp2((rate - log_sum) / static_cast<double>(k + 1));
    const bool last = k + 1 == order.size();
    if (last || mu <= 1.0 / gains[order[k + 1]]) {
      for (size_t j = 0; j <= k; ++j) {
        p[order[j]] = std::max(0.0, mu - 1.0 / gains[order[j]]);
      }
      return p;
    }
  }
  return std::nullopt;  // unreachable: the last k always returns
}

std::optional<MinPowerPoint> min_power_for_assignment(std::span<const double> assign,
                                                      const EigenChannels& lam,
                                                      const SystemParams& params,
                                                      const QosConstraints& qos) {
  if (static_cast<int>(assign.size()) != lam.count()) {
    throw InvalidArgument("assignment length does not match eigen-channels");
  }
  std::vector<double> id_gains(assign.size(), 0.0);
  int best_eh = -1;
  for (int i = 0; i < lam.count(); ++i) {
    const double a = assign[static_cast<size_t>(i)];
    if (a != 0.0 && a != 1.0) {
      throw InvalidArgument("min_power_for_assignment needs a binary assignment");
    }
    if (a == 1.0) {
      id_gains[static_cast<size_t>(i)] = lam[i];
    } else if (lam[i] > 0.0 && (best_eh < 0 || lam[i] > lam[best_eh])) {
      best_eh = i;
    }
  }
  auto rate_power = min_power_for_rate(id_gains, qos.r_min);
  if (!rate_power) return std::nullopt;
  MinPowerPoint point;
  point.power = std::move(*rate_power);
  if (qos.e_min > 0.0) {
    if (best_eh < 0) return std::nullopt;
    point.power[static_cast<size_t>(best_eh)] = qos.e_min / (params.eta * lam[best_eh]);
  }
  point.transmit_power = std::accumulate(point.power.begin(), point.power.end(), 0.0);
  return point;
}

std::optional<Allocation> cheapest_binary_allocation(const EigenChannels& lam,
                                                     const SystemParams& params,
                                                     const QosConstraints& qos) {
  const auto l = static_cast<size_t>(lam.count());
  std::optional<Allocation> best;
  double best_power = std::numeric_limits<double>::infinity();
  auto consider = [&](std::vector<double> assign) {
    auto point = min_power_for_assignment(assign, lam, params, qos);
    if (point && point->transmit_power < best_power) {
      best_power = point->transmit_power;
      best = Allocation(std::move(assign), std::move(point->power));
    }
  };
  consider(std::vector<double>(l, 1.0));
  for (size_t j = 0; j < l; ++j) {
    std::vector<double> assign(l, 1.0);
    assign[j] = 0.0;
    consider(std::move(assign));
  }
  if (!best || best_power > qos.p_max + kSlackTolerance) return std::nullopt;
  return best;
}

double power_model_margin(const EigenChannels& lam, const SystemParams& params) {
  return params.zeta - params.eta * lam.max();
}

void screen_power_model(const EigenChannels& lam, const SystemParams& params) {
  const double margin = power_model_margin(lam, params);
  if (!(margin > 0.0)) {
    throw NonPositivePowerError(
        "harvesting outpaces amplifier cost on the strongest eigen-channel "
        "(zeta - eta*lambda_max = " + std::to_string(margin) + ")");
  }
}

}  // namespace swipt
