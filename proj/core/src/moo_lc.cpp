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

#include "swipt/moo_lc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "solver_common.hpp"
#include "swipt/error.hpp"
#include "swipt/jeapa.hpp"

namespace swipt {

using detail::kLog2e;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Stationary power of every channel at multiplier phi; +inf where the
// harvesting term alone outweighs phi.
std::vector<double> powers_at(double phi, const EigenChannels& lam, double g1, double lin) {
  std::vector<double> p(static_cast<size_t>(lam.count()), 0.0);
  for (int i = 0; i < lam.count(); ++i) {
    if (lam[i] <= 0.0) continue;
    const double denom = phi - lin * lam[i];
    p[static_cast<size_t>(i)] =
        denom <= 0.0 ? kInf : std::max(0.0, g1 * kLog2e / denom - 1.0 / lam[i]);
  }
  return p;
}

double total(const std::vector<double>& p) { return std::accumulate(p.begin(), p.end(), 0.0); }

}  // namespace

MooState moo_weights(const SystemParams& params, const QosConstraints& qos) {
  MooState s;
  const double denom = qos.r_min + params.theta * qos.e_min;
  if (denom > 0.0) {
    s.gamma1 = qos.r_min / denom;
    s.gamma2 = 1.0 - s.gamma1;
  }
  return s;
}

double moo_objective(std::span<const double> power, const EigenChannels& lam,
                     const SystemParams& params, const MooState& w) {
  if (static_cast<int>(power.size()) != lam.count()) {
    throw InvalidArgument("power length does not match eigen-channel count");
  }
  double v = 0.0;
  for (int i = 0; i < lam.count(); ++i) {
    const double z = power[static_cast<size_t>(i)] * lam[i];
    v += w.gamma1 * std::log2(1.0 + z) + w.gamma2 * params.theta * params.eta * z;
  }
  return v;
}

MooInit moo_power_init(const EigenChannels& lam, const SystemParams& params,
                       const QosConstraints& qos) {
  const MooState w = moo_weights(params, qos);
  return moo_power_init(lam, params, qos, w.gamma1, w.gamma2);
}

MooInit moo_power_init(const EigenChannels& lam, const SystemParams& params,
                       const QosConstraints& qos, double g1, double g2) {
  if (!(g1 >= 0.0 && g2 >= 0.0) || std::abs(g1 + g2 - 1.0) > 1e-12) {
    throw InvalidArgument("weights must be non-negative and sum to 1");
  }
  if (lam.max() <= 0.0) throw InvalidArgument("every eigen-channel gain is zero");
  const double lin = g2 * params.theta * params.eta;
  const double budget = qos.p_max;

  double lo = 1e-12;
  double hi = g1 * lam.max() * kLog2e + lin * lam.max() + 1.0;
  int widen = 0;
  while (total(powers_at(hi, lam, g1, lin)) > budget) {
    if (++widen > 6) throw Error("phi bracket does not straddle the power budget");
    hi *= 10.0;
  }
  if (total(powers_at(lo, lam, g1, lin)) <= budget) hi = lo;
  for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (total(powers_at(mid, lam, g1, lin)) > budget ? lo : hi) = mid;
  }

  // The sum is monotone but may jump where a channel's harvesting term
  // crosses phi; the leftover budget goes to the channel with the largest
  // marginal gain.
  std::vector<double> p = powers_at(hi, lam, g1, lin);
  const double left = budget - total(p);
  if (left > 0.0) {
    int best = 0;
    double best_marginal = -kInf;
    for (int i = 0; i < lam.count(); ++i) {
      const double m = g1 * lam[i] * kLog2e / (1.0 + p[static_cast<size_t>(i)] * lam[i]) +
                       lin * lam[i];
      if (m > best_marginal) {
        best_marginal = m;
        best = i;
      }
    }
    p[static_cast<size_t>(best)] += left;
  }

  MooInit out{Allocation(std::vector<double>(p.size(), 0.5), p), {}};
  out.state.gamma1 = g1;
  out.state.gamma2 = g2;
  out.state.phi = hi;
  double harvest = 0.0;
  for (int i = 0; i < lam.count(); ++i) harvest += p[static_cast<size_t>(i)] * lam[i];
  out.state.c_eh = params.theta * params.eta * harvest;
  return out;
}

SolveResult solve_moo_lc(const EigenChannels& lam, const SystemParams& params,
                         const QosConstraints& qos, int n_active, const SolverConfig& cfg) {
  params.validate();
  qos.validate();
  cfg.validate();
  screen_power_model(lam, params);
  detail::require_feasible(lam, params, qos, "init");

  SolveResult out;
  out.algorithm = "moo_lc";
  out.trace.columns = {"phase", "ee", "rate", "energy", "power"};
  auto add_row = [&](int phase, const Metrics& m) {
    out.trace.add({static_cast<double>(phase), m.ee, m.rate, m.energy, m.total_power});
  };

  const MooInit init = moo_power_init(lam, params, qos);
  add_row(1, evaluate_metrics(init.alloc, lam, params, n_active));
  out.outer_iterations = 1;

  Allocation assigned;
  try {
    AssignStep step =
        eigen_assignment(init.alloc.power, lam, params, qos, n_active, cfg, init.alloc.assign);
    out.inner_iterations += step.iterations;
    assigned = std::move(step.alloc);
  } catch (const InfeasibleError& e) {
    throw InfeasibleError(e.constraint(), e.what(), "assignment");
  } catch (const IterationLimitError& e) {
    assigned = Allocation(e.best_iterate(), init.alloc.power);
  }
  add_row(2, evaluate_metrics(assigned, lam, params, n_active));
  out.outer_iterations = 2;

  out.converged = true;
  round_and_reoptimize(assigned, lam, params, qos, n_active, cfg, out);
  if (!out.feasible) {
    throw InfeasibleError("power", "rounded assignment cannot be repaired", "power");
  }
  add_row(3, out.rounded.metrics);
  out.outer_iterations = 3;
  return out;
}

}  // namespace swipt
