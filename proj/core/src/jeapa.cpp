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

#include "swipt/jeapa.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <vector>

#include "augmented_ascent.hpp"
#include "solver_common.hpp"
#include "swipt/error.hpp"

namespace swipt {

using detail::kLog2e;
using detail::Vec;

namespace {

// EE pieces of the power block with the assignment frozen.
struct PowerBlock {
  Vec lam, assign, lam_hat, lam_check;
  double zeta, eta, p_fix;

  PowerBlock(std::span<const double> a, const EigenChannels& l, const SystemParams& params,
             int n_active)
      : lam(detail::to_vec(l.span())), assign(detail::to_vec(a)),
        zeta(params.zeta), eta(params.eta), p_fix(params.circuit_power(n_active)) {
    lam_hat = lam.array() / assign.array().max(kAssignFloor);
    lam_check = (1.0 - assign.array()) * lam.array();
  }
  double rate(const Vec& p) const {
    double c = 0.0;
    for (Eigen::Index i = 0; i < p.size(); ++i) {
      if (assign[i] > kAssignFloor) c += assign[i] * std::log2(1.0 + p[i] * lam_hat[i]);
    }
    return c;
  }
  Vec rate_grad(const Vec& p) const {
    Vec g(p.size());
    for (Eigen::Index i = 0; i < p.size(); ++i) {
      g[i] = assign[i] > kAssignFloor ? lam[i] * kLog2e / (1.0 + p[i] * lam_hat[i]) : 0.0;
    }
    return g;
  }
  double energy(const Vec& p) const { return eta * lam_check.dot(p); }
  Vec cost() const { return (zeta - eta * lam_check.array()).matrix(); }
  double denom(const Vec& p) const { return cost().dot(p) + p_fix; }
  double ee(const Vec& p) const { return rate(p) / denom(p); }
  Vec ee_grad(const Vec& p) const {
    const double d = denom(p);
    return rate_grad(p) / d - cost() * (rate(p) / (d * d));
  }
};

// EE pieces of the assignment block with the power frozen.
struct AssignBlock {
  Vec lam_tilde;
  double eta, fixed;  // fixed = zeta sum p + p_fix

  AssignBlock(std::span<const double> p, const EigenChannels& l, const SystemParams& params,
              int n_active)
      : eta(params.eta) {
    const Vec pv = detail::to_vec(p);
    lam_tilde = pv.array() * detail::to_vec(l.span()).array();
    fixed = params.zeta * pv.sum() + params.circuit_power(n_active);
  }
  double rate(const Vec& a) const {
    double c = 0.0;
    for (Eigen::Index i = 0; i < a.size(); ++i) c += detail::rate_term(a[i], lam_tilde[i]).value;
    return c;
  }
  Vec rate_grad(const Vec& a) const {
    Vec g(a.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) {
      g[i] = detail::rate_term(a[i], lam_tilde[i]).d_assign;
    }
    return g;
  }
  double energy(const Vec& a) const {
    return eta * ((1.0 - a.array()) * lam_tilde.array()).sum();
  }
  double denom(const Vec& a) const { return fixed - energy(a); }
  double ee(const Vec& a) const { return rate(a) / denom(a); }
  Vec ee_grad(const Vec& a) const {
    const double d = denom(a);
    return rate_grad(a) / d - eta * lam_tilde * (rate(a) / (d * d));
  }
};

void check_lengths(size_t n, const EigenChannels& lam) {
  if (static_cast<int>(n) != lam.count()) {
    throw InvalidArgument("vector length does not match eigen-channel count");
  }
}

double max_dual(const PowerDuals& d) { return std::max({d.rho, d.kappa, d.xi}); }
double max_dual(const AssignDuals& d) {
  double m = std::max(d.tau, d.sigma_c);
  for (double v : d.nu) m = std::max(m, v);
  return m;
}

struct PowerRun {
  detail::AscentResult res;
  PowerDuals duals;
};

PowerRun run_power(const PowerBlock& blk, const QosConstraints& qos, const Vec& p0,
                   const SolverConfig& cfg) {
  const double s_r = detail::rate_scale(qos);
  const double s_e = detail::energy_scale(qos);
  detail::AscentProblem prob;
  prob.objective = [&](const Vec& p) { return blk.ee(p); };
  prob.gradient = [&](const Vec& p) { return blk.ee_grad(p); };
  if (qos.r_min > 0.0) {
    prob.constraints.push_back({[&, s_r](const Vec& p) { return (blk.rate(p) - qos.r_min) / s_r; },
                                [&, s_r](const Vec& p) { return Vec(blk.rate_grad(p) / s_r); }});
  }
  if (qos.e_min > 0.0) {
    prob.constraints.push_back(
        {[&, s_e](const Vec& p) { return (blk.energy(p) - qos.e_min) / s_e; },
         [&, s_e](const Vec&) { return Vec(blk.eta * blk.lam_check / s_e); }});
  }
  const double cap = qos.p_max;
  prob.project = [cap](const Vec& p) { return detail::project_capped_simplex(p, cap); };

  PowerRun out{detail::maximize(prob, p0, detail::ascent_options(cfg)), {}};
  size_t j = 0;
  if (qos.r_min > 0.0) out.duals.rho = out.res.multipliers[j++] / s_r;
  if (qos.e_min > 0.0) out.duals.kappa = out.res.multipliers[j++] / s_e;
  const Vec& p = out.res.x;
  if (p.sum() >= cap - 1e-9) {
    const Vec g = blk.ee_grad(p) + out.duals.rho * blk.rate_grad(p) +
                  out.duals.kappa * blk.eta * blk.lam_check;
    double acc = 0.0;
    int n = 0;
    for (Eigen::Index i = 0; i < p.size(); ++i) {
      if (p[i] > 1e-12) {
        acc += g[i];
        ++n;
      }
    }
    out.duals.xi = n > 0 ? std::max(0.0, acc / n) : 0.0;
  }
  return out;
}

struct AssignRun {
  detail::AscentResult res;
  AssignDuals duals;
};

AssignRun run_assign(const AssignBlock& blk, const QosConstraints& qos, const Vec& a0,
                     const SolverConfig& cfg) {
  const double s_r = detail::rate_scale(qos);
  const double s_e = detail::energy_scale(qos);
  detail::AscentProblem prob;
  prob.objective = [&](const Vec& a) { return blk.ee(a); };
  prob.gradient = [&](const Vec& a) { return blk.ee_grad(a); };
  if (qos.r_min > 0.0) {
    prob.constraints.push_back({[&, s_r](const Vec& a) { return (blk.rate(a) - qos.r_min) / s_r; },
                                [&, s_r](const Vec& a) { return Vec(blk.rate_grad(a) / s_r); }});
  }
  if (qos.e_min > 0.0) {
    prob.constraints.push_back(
        {[&, s_e](const Vec& a) { return (blk.energy(a) - qos.e_min) / s_e; },
         [&, s_e](const Vec&) { return Vec(-blk.eta * blk.lam_tilde / s_e); }});
  }
  prob.project = detail::clip_unit_box;

  AssignRun out{detail::maximize(prob, a0, detail::ascent_options(cfg)), {}};
  size_t j = 0;
  if (qos.r_min > 0.0) out.duals.tau = out.res.multipliers[j++] / s_r;
  if (qos.e_min > 0.0) out.duals.sigma_c = out.res.multipliers[j++] / s_e;
  const Vec& a = out.res.x;
  const Vec g = blk.ee_grad(a) + out.duals.tau * blk.rate_grad(a) -
                out.duals.sigma_c * blk.eta * blk.lam_tilde;
  out.duals.nu.assign(static_cast<size_t>(a.size()), 0.0);
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a[i] >= 1.0 - 1e-12) out.duals.nu[static_cast<size_t>(i)] = std::max(0.0, g[i]);
  }
  return out;
}

// Accepts a run that ended within the engine's feasibility tolerance even if
// the KKT tolerance was missed.
constexpr double kUsableViolation = 1e-9;

std::vector<double> default_power_start(std::span<const double> assign,
                                        const EigenChannels& lam, const SystemParams& params,
                                        const QosConstraints& qos) {
  const bool binary = std::all_of(assign.begin(), assign.end(),
                                  [](double a) { return a == 0.0 || a == 1.0; });
  if (binary) {
    if (auto pt = min_power_for_assignment(assign, lam, params, qos)) return pt->power;
  }
  return std::vector<double>(assign.size(), qos.p_max / (2.0 * static_cast<double>(assign.size())));
}

}  // namespace

EffectiveChannels EffectiveChannels::from(const Allocation& x, const EigenChannels& lam,
                                          const SystemParams& params, int n_active) {
  check_lengths(x.assign.size(), lam);
  EffectiveChannels e;
  double sum_p = 0.0, sum_tilde = 0.0;
  for (int i = 0; i < lam.count(); ++i) {
    const auto k = static_cast<size_t>(i);
    e.lam_hat.push_back(lam[i] / std::max(x.assign[k], kAssignFloor));
    e.lam_check.push_back((1.0 - x.assign[k]) * lam[i]);
    e.lam_tilde.push_back(x.power[k] * lam[i]);
    sum_p += x.power[k];
    sum_tilde += e.lam_tilde.back();
  }
  e.p_fix = params.circuit_power(n_active);
  e.p_fix_tilde = params.zeta * sum_p + e.p_fix - params.eta * sum_tilde;
  return e;
}

double power_lagrangian(const Allocation& x, const EigenChannels& lam,
                        const SystemParams& params, const QosConstraints& qos, int n_active,
                        const PowerDuals& d) {
  check_lengths(x.assign.size(), lam);
  const PowerBlock blk(x.assign, lam, params, n_active);
  const Vec p = detail::to_vec(x.power);
  return blk.ee(p) + d.rho * (blk.rate(p) - qos.r_min) +
         d.kappa * (blk.energy(p) - qos.e_min) + d.xi * (qos.p_max - p.sum());
}

std::vector<double> power_lagrangian_gradient(const Allocation& x, const EigenChannels& lam,
                                              const SystemParams& params,
                                              const QosConstraints&, int n_active,
                                              const PowerDuals& d) {
  check_lengths(x.assign.size(), lam);
  const PowerBlock blk(x.assign, lam, params, n_active);
  const Vec p = detail::to_vec(x.power);
  const Vec g = blk.ee_grad(p) + d.rho * blk.rate_grad(p) +
                (d.kappa * blk.eta * blk.lam_check.array() - d.xi).matrix();
  return detail::to_std(g);
}

double assignment_lagrangian(const Allocation& x, const EigenChannels& lam,
                             const SystemParams& params, const QosConstraints& qos,
                             int n_active, const AssignDuals& d) {
  check_lengths(x.assign.size(), lam);
  const AssignBlock blk(x.power, lam, params, n_active);
  const Vec a = detail::to_vec(x.assign);
  double v = blk.ee(a) + d.tau * (blk.rate(a) - qos.r_min) +
             d.sigma_c * (blk.energy(a) - qos.e_min);
  for (size_t i = 0; i < d.nu.size(); ++i) v += d.nu[i] * (1.0 - x.assign[i]);
  return v;
}

std::vector<double> assignment_lagrangian_gradient(const Allocation& x,
                                                   const EigenChannels& lam,
                                                   const SystemParams& params,
                                                   const QosConstraints&, int n_active,
                                                   const AssignDuals& d) {
  check_lengths(x.assign.size(), lam);
  const AssignBlock blk(x.power, lam, params, n_active);
  const Vec a = detail::to_vec(x.assign);
  Vec g = blk.ee_grad(a) + d.tau * blk.rate_grad(a) - d.sigma_c * blk.eta * blk.lam_tilde;
  for (size_t i = 0; i < d.nu.size(); ++i) g[static_cast<Eigen::Index>(i)] -= d.nu[i];
  return detail::to_std(g);
}

PowerStep power_allocation(std::span<const double> assign, const EigenChannels& lam,
                           const SystemParams& params, const QosConstraints& qos,
                           int n_active, const SolverConfig& cfg,
                           std::optional<std::vector<double>> start) {
  check_lengths(assign.size(), lam);
  cfg.validate();
  const PowerBlock blk(assign, lam, params, n_active);
  const std::vector<double> p0 =
      start ? *start : default_power_start(assign, lam, params, qos);
  check_lengths(p0.size(), lam);
  PowerRun run = run_power(blk, qos, detail::to_vec(p0), cfg);
  if (run.res.violation > kUsableViolation) {
    throw InfeasibleError(blk.rate(run.res.x) < qos.r_min ? "rate" : "energy",
                          "power allocation cannot meet the floors for this assignment");
  }
  auto power = detail::sanitize(run.res.x, qos.p_max);
  if (!run.res.converged) {
    throw IterationLimitError("power allocation missed the KKT tolerance", power);
  }
  return {Allocation({assign.begin(), assign.end()}, std::move(power)), run.duals,
          run.res.kkt_residual, run.res.iterations};
}

AssignStep eigen_assignment(std::span<const double> power, const EigenChannels& lam,
                            const SystemParams& params, const QosConstraints& qos,
                            int n_active, const SolverConfig& cfg,
                            std::optional<std::vector<double>> start) {
  check_lengths(power.size(), lam);
  cfg.validate();
  const AssignBlock blk(power, lam, params, n_active);
  if (qos.e_min > 0.0 && blk.energy(Vec::Zero(blk.lam_tilde.size())) < qos.e_min - kSlackTolerance) {
    throw InfeasibleError("energy", "energy floor exceeds eta * sum(p * lambda)");
  }
  if (qos.r_min > 0.0 && blk.rate(Vec::Ones(blk.lam_tilde.size())) < qos.r_min - kSlackTolerance) {
    throw InfeasibleError("rate", "rate floor exceeds the rate with every channel decoding");
  }
  const Vec zero = Vec::Zero(blk.lam_tilde.size());
  if (qos.e_min > 0.0 && blk.energy(zero) <= qos.e_min + kSlackTolerance) {
    // The floor equals the full harvest: every channel with p * lambda > 0 harvests.
    if (blk.rate(zero) < qos.r_min - kSlackTolerance) {
      throw InfeasibleError("rate", "the energy floor leaves no channel for decoding");
    }
    return {Allocation(std::vector<double>(power.size(), 0.0), {power.begin(), power.end()}),
            AssignDuals{std::vector<double>(power.size(), 0.0), 0.0, 0.0}, 0.0, 0};
  }
  const Vec a0 = start ? detail::to_vec(*start) : Vec::Constant(blk.lam_tilde.size(), 0.5);
  AssignRun run = run_assign(blk, qos, a0, cfg);
  if (run.res.violation > kUsableViolation) {
    throw InfeasibleError(blk.rate(run.res.x) < qos.r_min ? "rate" : "energy",
                          "no assignment meets both floors at this power");
  }
  auto a = detail::sanitize(run.res.x, 1.0);
  if (!run.res.converged) {
    throw IterationLimitError("eigen-channel assignment missed the KKT tolerance", a);
  }
  return {Allocation(std::move(a), {power.begin(), power.end()}), run.duals,
          run.res.kkt_residual, run.res.iterations};
}

void round_and_reoptimize(const Allocation& relaxed, const EigenChannels& lam,
                          const SystemParams& params, const QosConstraints& qos,
                          int n_active, const SolverConfig& cfg, SolveResult& result) {
  Allocation binary = round_assignment(relaxed);
  std::vector<size_t> order(relaxed.assign.size());
  std::iota(order.begin(), order.end(), size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return std::abs(relaxed.assign[a] - 0.5) < std::abs(relaxed.assign[b] - 0.5);
  });

  auto fits = [&](const std::vector<double>& a) {
    auto pt = min_power_for_assignment(a, lam, params, qos);
    return pt && pt->transmit_power <= qos.p_max + kSlackTolerance ? pt : std::nullopt;
  };
  auto point = fits(binary.assign);
  for (size_t k = 0; !point && k < order.size(); ++k) {
    binary.assign[order[k]] = 1.0 - binary.assign[order[k]];
    point = fits(binary.assign);
  }
  if (!point) {
    Allocation fallback = round_assignment(relaxed);
    result.rounded = detail::evaluate(fallback, lam, params, n_active);
    result.feasible = false;
    return;
  }

  std::vector<double> start = point->power;
  const double cap_scale = std::accumulate(start.begin(), start.end(), 0.0);
  if (cap_scale > qos.p_max) {
    for (double& v : start) v *= qos.p_max / cap_scale;
  }
  Allocation best(binary.assign, start);
  try {
    PowerStep step = power_allocation(binary.assign, lam, params, qos, n_active, cfg, start);
    result.inner_iterations += step.iterations;
    best = std::move(step.alloc);
  } catch (const IterationLimitError& e) {
    Allocation cand(binary.assign, e.best_iterate());
    if (check_feasible(cand, lam, params, qos).feasible &&
        evaluate_metrics(cand, lam, params, n_active).ee >=
            evaluate_metrics(best, lam, params, n_active).ee) {
      best = std::move(cand);
    }
    result.converged = false;
  } catch (const InfeasibleError&) {
    result.converged = false;
  }
  result.rounded = detail::evaluate(std::move(best), lam, params, n_active);
  result.feasible = check_feasible(result.rounded.alloc, lam, params, qos).feasible;
}

namespace {

// Feasible starting point for the alternation; none when no binary
// allocation fits the budget.
std::optional<Allocation> jeapa_start(const EigenChannels& lam, const SystemParams& params,
                                      const QosConstraints& qos) {
  auto cheapest = cheapest_binary_allocation(lam, params, qos);
  if (!cheapest) return std::nullopt;
  const auto l = static_cast<size_t>(lam.count());
  const double ld = static_cast<double>(l);
  Allocation x(std::vector<double>(l, 0.5), std::vector<double>(l, qos.p_max / (2.0 * ld)));
  if (check_feasible(x, lam, params, qos).feasible) return x;

  x.power.assign(l, qos.p_max / ld);
  auto at = [&](double t) {
    x.assign.assign(l, 0.5 + 0.5 * t);
    return x;
  };
  if (sum_rate(at(1.0), lam) >= qos.r_min) {
    double lo = -1.0, hi = 1.0;
    if (sum_rate(at(lo), lam) >= qos.r_min) hi = lo;
    for (int it = 0; it < 80 && hi > lo; ++it) {
      const double mid = 0.5 * (lo + hi);
      (sum_rate(at(mid), lam) >= qos.r_min ? hi : lo) = mid;
    }
    Allocation cand = at(hi);
    if (check_feasible(cand, lam, params, qos).feasible) return cand;
  }
  return cheapest;
}

// Joint ascent on EE(p, a) from `x0` under the same constraints. At a point
// where the alternation stops with the energy floor binding, (1 - a_i) p_i is
// pinned for the harvesting channel and neither block can move along it.
std::optional<EvaluatedAllocation> joint_refine(const Allocation& x0, const EigenChannels& lam,
                                                const SystemParams& params,
                                                const QosConstraints& qos, int n_active,
                                                const SolverConfig& cfg, int& iterations) {
  const detail::JointProblem jp(lam, params, n_active);
  const Eigen::Index l = jp.l;
  const double s_r = detail::rate_scale(qos);
  const double s_e = detail::energy_scale(qos);
  detail::AscentProblem prob;
  prob.objective = [&](const Vec& x) { return jp.rate(x) / jp.total(x); };
  prob.gradient = [&](const Vec& x) {
    const double t = jp.total(x);
    return Vec(jp.rate_grad(x) / t - jp.total_grad(x) * (jp.rate(x) / (t * t)));
  };
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
  detail::AscentOptions opts = detail::ascent_options(cfg);
  opts.kkt_tol = 1e-3 * cfg.kkt_tol;
  const detail::AscentResult r = detail::maximize(prob, detail::pack(x0), opts);
  iterations += r.iterations;
  if (!r.converged) return std::nullopt;
  Allocation x = detail::unpack(r.x, qos.p_max);
  if (!check_feasible(x, lam, params, qos).feasible) return std::nullopt;
  return detail::evaluate(std::move(x), lam, params, n_active);
}

}  // namespace

SolveResult solve_jeapa(const EigenChannels& lam, const SystemParams& params,
                        const QosConstraints& qos, int n_active, const SolverConfig& cfg) {
  params.validate();
  qos.validate();
  cfg.validate();
  screen_power_model(lam, params);
  detail::require_feasible(lam, params, qos);

  SolveResult out;
  out.algorithm = "jeapa";
  out.trace.columns = {"round", "ee", "rate", "energy", "power", "max_dual"};

  EvaluatedAllocation cur = detail::evaluate(*jeapa_start(lam, params, qos), lam, params, n_active);
  auto add_row = [&](int round, const Metrics& m, double dual) {
    out.trace.add({static_cast<double>(round), m.ee, m.rate, m.energy, m.total_power, dual});
  };
  add_row(0, cur.metrics, 0.0);

  bool converged = false;
  for (int round = 1; round <= cfg.max_outer; ++round) {
    out.outer_iterations = round;
    double dual = 0.0;
    Allocation next = cur.alloc;
    bool block_ok = true;
    try {
      AssignStep as = eigen_assignment(next.power, lam, params, qos, n_active, cfg, next.assign);
      out.inner_iterations += as.iterations;
      dual = std::max(dual, max_dual(as.duals));
      next.assign = as.alloc.assign;
      PowerStep ps = power_allocation(next.assign, lam, params, qos, n_active, cfg, next.power);
      out.inner_iterations += ps.iterations;
      dual = std::max(dual, max_dual(ps.duals));
      next.power = ps.alloc.power;
    } catch (const Error&) {
      block_ok = false;
    }
    if (!block_ok || !check_feasible(next, lam, params, qos).feasible) break;
    EvaluatedAllocation cand = detail::evaluate(std::move(next), lam, params, n_active);
    if (cand.metrics.ee < cur.metrics.ee) {
      converged = true;
      break;
    }
    const double gain = cand.metrics.ee - cur.metrics.ee;
    cur = std::move(cand);
    add_row(round, cur.metrics, dual);
    if (gain < 1e-6) {
      converged = true;
      break;
    }
  }

  if (auto refined = joint_refine(cur.alloc, lam, params, qos, n_active, cfg,
                                  out.inner_iterations);
      refined && refined->metrics.ee > cur.metrics.ee) {
    cur = std::move(*refined);
    add_row(static_cast<int>(out.trace.rows.size()), cur.metrics, 0.0);
  }

  out.relaxed = cur;
  out.converged = true;
  round_and_reoptimize(cur.alloc, lam, params, qos, n_active, cfg, out);
  out.converged = out.converged && converged;
  add_row(static_cast<int>(out.trace.rows.size()), out.rounded.metrics, 0.0);
  return out;
}

}  // namespace swipt
