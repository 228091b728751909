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

#include "swipt/dm_cvx.hpp"

#include <cmath>
#include <limits>

#include "augmented_ascent.hpp"
#include "solver_common.hpp"
#include "swipt/error.hpp"
#include "swipt/jeapa.hpp"

namespace swipt {

using detail::kLog2e;
using detail::JointProblem;
using detail::pack;
using detail::unpack;
using detail::Vec;

double u_r(const Allocation& alloc, const EigenChannels& lam) { return sum_rate(alloc, lam); }

double u_t(const Allocation& alloc, const EigenChannels& lam, const SystemParams& params,
           int n_active) {
  return evaluate_metrics(alloc, lam, params, n_active).total_power;
}

double subtractive_objective(const Allocation& alloc, const EigenChannels& lam,
                             const SystemParams& params, int n_active, double beta) {
  return u_r(alloc, lam) - beta * u_t(alloc, lam, params, n_active);
}

namespace {

Allocation subtractive_impl(double beta, const EigenChannels& lam, const SystemParams& params,
                            const QosConstraints& qos, int n_active, const SolverConfig& cfg,
                            const Allocation* start, int& iterations) {
  if (!(beta >= 0.0)) throw InvalidArgument("beta must be >= 0");
  params.validate();
  qos.validate();
  cfg.validate();
  detail::require_feasible(lam, params, qos);

  const JointProblem jp(lam, params, n_active);
  const Eigen::Index l = jp.l;
  const double s_r = detail::rate_scale(qos);
  const double s_e = detail::energy_scale(qos);
  detail::AscentProblem prob;
  prob.objective = [&](const Vec& x) { return jp.rate(x) - beta * jp.total(x); };
  prob.gradient = [&](const Vec& x) { return Vec(jp.rate_grad(x) - beta * jp.total_grad(x)); };
  if (qos.r_min > 0.0) {
    prob.constraints.push_back({[&](const Vec& x) { return (jp.rate(x) - qos.r_min) / s_r; },
                                [&](const Vec& x) { return Vec(jp.rate_grad(x) / s_r); }});
  }
  if (qos.e_min > 0.0) {
    prob.constraints.push_back({[&](const Vec& x) { return (jp.energy(x) - qos.e_min) / s_e; },
                                [&](const Vec& x) { return Vec(jp.energy_grad(x) / s_e); }});
  }
  const double cap = qos.p_max;
  prob.project = [l, cap](const Vec& x) {
    Vec y(x.size());
    y << detail::project_capped_simplex(x.head(l), cap), detail::clip_unit_box(x.tail(l));
    return y;
  };

  std::vector<Vec> starts;
  if (start) {
    if (start->size() != lam.count()) throw InvalidArgument("start length mismatch");
    starts.push_back(pack(*start));
  }
  for (double b : detail::start_budgets(qos.p_max)) {
    Vec x(2 * l);
    x << detail::to_vec(water_filling(lam.span(), b)), Vec::Ones(l);
    starts.push_back(x);
    x << Vec::Constant(l, b / (2.0 * static_cast<double>(l))), Vec::Constant(l, 0.5);
    starts.push_back(x);
  }

  const auto opts = detail::ascent_options(cfg);
  std::optional<Vec> best;
  double best_val = -std::numeric_limits<double>::infinity();
  std::optional<Vec> fallback;
  double fallback_val = -std::numeric_limits<double>::infinity();
  for (const Vec& x0 : starts) {
    const detail::AscentResult r = detail::maximize(prob, x0, opts);
    iterations += r.iterations;
    const double v = prob.objective(r.x);
    if (r.converged && v > best_val) {
      best = r.x;
      best_val = v;
    } else if (!r.converged && r.violation <= 1e-9 && v > fallback_val) {
      fallback = r.x;
      fallback_val = v;
    }
  }
  if (!best) {
    std::vector<double> flat;
    if (fallback) flat = detail::to_std(*fallback);
    throw IterationLimitError("no start of the subtractive problem reached the KKT tolerance",
                              std::move(flat));
  }
  return unpack(*best, qos.p_max);
}

}  // namespace

Allocation solve_subtractive(double beta, const EigenChannels& lam, const SystemParams& params,
                             const QosConstraints& qos, int n_active, const SolverConfig& cfg,
                             const Allocation* start) {
  int iterations = 0;
  return subtractive_impl(beta, lam, params, qos, n_active, cfg, start, iterations);
}

SolveResult solve_dinkelbach(const EigenChannels& lam, const SystemParams& params,
                             const QosConstraints& qos, int n_active,
                             const SolverConfig& cfg) {
  DinkelbachState state;
  return solve_dinkelbach(lam, params, qos, n_active, cfg, state);
}

SolveResult solve_dinkelbach(const EigenChannels& lam, const SystemParams& params,
                             const QosConstraints& qos, int n_active, const SolverConfig& cfg,
                             DinkelbachState& state) {
  params.validate();
  qos.validate();
  cfg.validate();
  screen_power_model(lam, params);
  detail::require_feasible(lam, params, qos);

  SolveResult out;
  out.algorithm = "dm_cvx";
  out.trace.columns = {"iter", "beta", "residual", "rate", "energy", "power", "ee"};
  state = DinkelbachState{};

  std::optional<Allocation> prev;
  std::optional<Allocation> x;
  double beta = 0.0;
  for (int k = 1; k <= cfg.max_outer; ++k) {
    out.outer_iterations = k;
    Allocation cand;
    try {
      cand = subtractive_impl(beta, lam, params, qos, n_active, cfg, prev ? &*prev : nullptr,
                              out.inner_iterations);
    } catch (const IterationLimitError&) {
      if (!prev) throw;
      break;
    }
    double residual = subtractive_objective(cand, lam, params, n_active, beta);
    if (prev) {
      const double keep = subtractive_objective(*prev, lam, params, n_active, beta);
      if (residual < keep) {
        cand = *prev;
        residual = keep;
      }
    }
    x = cand;
    const Metrics m = evaluate_metrics(*x, lam, params, n_active);
    state.beta = beta;
    state.residual = residual;
    state.trace.push_back({beta, residual});
    out.trace.add({static_cast<double>(k), beta, residual, m.rate, m.energy, m.total_power, m.ee});
    if (residual <= cfg.delta) {
      out.converged = true;
      break;
    }
    beta = m.ee;
    prev = x;
  }
  out.relaxed = detail::evaluate(*x, lam, params, n_active);
  const bool converged = out.converged;
  out.converged = true;
  round_and_reoptimize(*x, lam, params, qos, n_active, cfg, out);
  out.converged = out.converged && converged;
  const Metrics& r = out.rounded.metrics;
  out.trace.add({static_cast<double>(out.trace.rows.size() + 1), beta,
                 r.rate - beta * r.total_power, r.rate, r.energy, r.total_power, r.ee});
  return out;
}

}  // namespace swipt
