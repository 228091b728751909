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

#include "swipt/oracle.hpp"

#include <cmath>
#include <limits>
#include <algorithm>
#include <bit>
#include <numeric>

#include "swipt/error.hpp"

namespace swipt {

namespace {

struct GridSearch {
  int steps;
  double unit;
  double zeta, p_circuit, r_min, e_min;
  std::vector<std::vector<double>> rate_tab, energy_tab;  // [channel][k]

  std::vector<int> mask_id;  // 1 = decode
  std::vector<int> k, best_k;
  std::vector<int> best_mask;
  double best_ee = -std::numeric_limits<double>::infinity();
  long long leaves = 0;

  void descend(size_t i, int left, double rate, double energy) {
    if (i == k.size()) {
      ++leaves;
      if (rate - r_min < -kSlackTolerance || energy - e_min < -kSlackTolerance) return;
      const int used = steps - left;
      const double total = zeta * unit * used + p_circuit - energy;
      if (!(total > 0.0)) return;
      const double ee = rate / total;
      if (ee > best_ee) {
        best_ee = ee;
        best_k = k;
        best_mask = mask_id;
      }
      return;
    }
    const bool id = mask_id[i] == 1;
    for (int kk = 0; kk <= left; ++kk) {
      k[i] = kk;
      const auto ku = static_cast<size_t>(kk);
      descend(i + 1, left - kk, id ? rate + rate_tab[i][ku] : rate,
              id ? energy : energy + energy_tab[i][ku]);
    }
  }
};

}  // namespace

void OracleConfig::validate() const {
  if (power_grid_steps < 10) throw InvalidArgument("power_grid_steps must be >= 10");
  if (max_channels < 1 || max_antennas < 1) throw InvalidArgument("oracle caps must be >= 1");
}

SolveResult oracle_fixed_set(const EigenChannels& lam, const SystemParams& params,
                             const QosConstraints& qos, int n_active,
                             const OracleConfig& ocfg) {
  ocfg.validate();
  params.validate();
  qos.validate();
  if (n_active < 1) throw InvalidArgument("n_active must be >= 1");
  const int l = lam.count();
  if (l > ocfg.max_channels) {
    throw InvalidArgument("oracle refused: " + std::to_string(l) + " eigen-channels exceed the cap of " +
                          std::to_string(ocfg.max_channels));
  }

  GridSearch g;
  g.steps = ocfg.power_grid_steps;
  g.unit = qos.p_max / g.steps;
  g.zeta = params.zeta;
  g.p_circuit = params.circuit_power(n_active);
  g.r_min = qos.r_min;
  g.e_min = qos.e_min;
  g.rate_tab.assign(static_cast<size_t>(l), std::vector<double>(static_cast<size_t>(g.steps) + 1));
  g.energy_tab = g.rate_tab;
  for (int i = 0; i < l; ++i) {
    for (int kk = 0; kk <= g.steps; ++kk) {
      const double z = kk * g.unit * lam[i];
      g.rate_tab[static_cast<size_t>(i)][static_cast<size_t>(kk)] = std::log2(1.0 + z);
      g.energy_tab[static_cast<size_t>(i)][static_cast<size_t>(kk)] = params.eta * z;
    }
  }
  g.k.assign(static_cast<size_t>(l), 0);
  g.mask_id.assign(static_cast<size_t>(l), 0);
  for (unsigned mask = 0; mask < (1u << l); ++mask) {
    for (int i = 0; i < l; ++i) g.mask_id[static_cast<size_t>(i)] = (mask >> i) & 1u;
    g.descend(0, g.steps, 0.0, 0.0);
  }

  SolveResult out;
  out.algorithm = "oracle";
  out.converged = true;
  out.outer_iterations = 1 << l;
  out.inner_iterations = static_cast<int>(std::min<long long>(g.leaves, std::numeric_limits<int>::max()));
  if (g.best_k.empty()) {
    out.rounded.alloc = Allocation(std::vector<double>(static_cast<size_t>(l), 1.0),
                                   std::vector<double>(static_cast<size_t>(l), 0.0));
    out.rounded.metrics.ee = -std::numeric_limits<double>::infinity();
    out.feasible = false;
    return out;
  }
  std::vector<double> assign(static_cast<size_t>(l)), power(static_cast<size_t>(l));
  for (size_t i = 0; i < assign.size(); ++i) {
    assign[i] = g.best_mask[i];
    power[i] = g.best_k[i] * g.unit;
  }
  out.rounded.alloc = Allocation(std::move(assign), std::move(power));
  out.rounded.metrics = evaluate_metrics(out.rounded.alloc, lam, params, n_active);
  out.feasible = true;
  return out;
}

SelectionOutcome oracle_full(const ChannelMatrix& h, const SystemParams& params,
                             const QosConstraints& qos, const OracleConfig& ocfg) {
  ocfg.validate();
  if (h.n_rx() > ocfg.max_antennas) {
    throw InvalidArgument("oracle refused: " + std::to_string(h.n_rx()) +
                          " receive antennas exceed the cap of " +
                          std::to_string(ocfg.max_antennas));
  }
  std::vector<AntennaSet> subsets;
  const int n_rx = h.n_rx();
  for (int n = 1; n <= n_rx; ++n) {
    for (unsigned mask = 0; mask < (1u << n_rx); ++mask) {
      if (std::popcount(mask) != n) continue;
      std::vector<int> idx;
      for (int i = 0; i < n_rx; ++i) {
        if ((mask >> i) & 1u) idx.push_back(i);
      }
      subsets.emplace_back(std::move(idx));
    }
  }
  // Within one size, masks ascend in reverse-lexicographic order; sort to
  // keep the tie rule identical to select_exhaustive.
  std::stable_sort(subsets.begin(), subsets.end(), [](const AntennaSet& a, const AntennaSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a.indices() < b.indices();
  });
  auto evaluate = [&](const AntennaSet& chi) {
    const EigenChannels lam = eigen_channels(select_rows(h, chi));
    return oracle_fixed_set(lam, params, qos, chi.size(), ocfg);
  };
  return reduce_subsets(subsets, n_rx, evaluate, "exhaustive", "oracle");
}

}  // namespace swipt
