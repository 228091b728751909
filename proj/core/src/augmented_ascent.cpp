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

#include "augmented_ascent.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

namespace swipt::detail {

Vec project_capped_simplex(const Vec& p, double cap) {
  Vec q = p.cwiseMax(0.0);
  if (q.sum() <= cap) return q;
  std::vector<double> u(q.data(), q.data() + q.size());
  std::sort(u.begin(), u.end(), std::greater<>());
  double css = 0.0;
  double tau = 0.0;
  for (size_t k = 0; k < u.size(); ++k) {
    css += u[k];
    const double t = (css - cap) / static_cast<double>(k + 1);
    if (u[k] > t) tau = t;
  }
  return (q.array() - tau).cwiseMax(0.0).matrix();
}

Vec clip_unit_box(const Vec& a) { return a.cwiseMax(0.0).cwiseMin(1.0); }

namespace {

// Multipliers and constraint rows here refer to the rows divided by
// `weight`, which brings every constraint gradient to unit size at the start.
class AugmentedLagrangian {
 public:
  AugmentedLagrangian(const AscentProblem& problem, const std::vector<double>& weight,
                      std::vector<double>& mu, double& c)
      : problem_(problem), weight_(weight), mu_(mu), c_(c) {}

  double row(size_t j, const Vec& x) const {
    return problem_.constraints[j].value(x) / weight_[j];
  }
  Vec row_gradient(size_t j, const Vec& x) const {
    return problem_.constraints[j].gradient(x) / weight_[j];
  }

  double value(const Vec& x) const {
    double v = problem_.objective(x);
    for (size_t j = 0; j < mu_.size(); ++j) {
      const double t = std::max(mu_[j] - c_ * row(j, x), 0.0);
      v -= (t * t - mu_[j] * mu_[j]) / (2.0 * c_);
    }
    return v;
  }

  Vec gradient(const Vec& x) const {
    Vec g = problem_.gradient(x);
    for (size_t j = 0; j < mu_.size(); ++j) {
      const double t = std::max(mu_[j] - c_ * row(j, x), 0.0);
      if (t > 0.0) g += t * row_gradient(j, x);
    }
    return g;
  }

 private:
  const AscentProblem& problem_;
  const std::vector<double>& weight_;
  std::vector<double>& mu_;
  double& c_;
};

constexpr size_t kNonmonotoneMemory = 10;

double projected_step_norm(const AscentProblem& problem, const Vec& x, const Vec& g) {
  return (problem.project(x + g) - x).lpNorm<Eigen::Infinity>();
}

}  // namespace

AscentResult maximize(const AscentProblem& problem, const Vec& x0,
                      const AscentOptions& opts) {
  const size_t m = problem.constraints.size();
  AscentResult out;
  std::vector<double> mu(m, 0.0);
  Vec x = problem.project(x0);

  std::vector<double> weight(m, 1.0);
  for (size_t j = 0; j < m; ++j) {
    weight[j] = std::max(problem.constraints[j].gradient(x).lpNorm<Eigen::Infinity>(), 1e-3);
  }
  double c = opts.penalty0 * std::max(problem.gradient(x).lpNorm<Eigen::Infinity>(), 1e-6);
  AugmentedLagrangian phi(problem, weight, mu, c);

  double prev_violation = std::numeric_limits<double>::infinity();
  const double inner_tol = std::max(0.1 * opts.kkt_tol, 1e-12);
  for (int round = 0; round < opts.max_rounds; ++round) {
    double step = opts.step0;
    Vec g = phi.gradient(x);
    double fx = phi.value(x);
    std::deque<double> recent{fx};
    for (int it = 0; it < opts.max_inner && out.iterations < opts.max_inner; ++it) {
      ++out.iterations;
      if (projected_step_norm(problem, x, g) < inner_tol) break;
      Vec xn;
      double fn = 0.0;
      const double ref = *std::min_element(recent.begin(), recent.end());
      while (true) {
        xn = problem.project(x + step * g);
        fn = phi.value(xn);
        if (fn >= ref + 1e-4 * g.dot(xn - x) || step < 1e-16) break;
        step *= 0.5;
      }
      const Vec gn = phi.gradient(xn);
      const Vec s = xn - x;
      const double sy = -s.dot(gn - g);
      x = xn;
      g = gn;
      fx = fn;
      recent.push_back(fx);
      if (recent.size() > kNonmonotoneMemory) recent.pop_front();
      if (s.lpNorm<Eigen::Infinity>() == 0.0) break;
      step = sy > 1e-20 ? std::clamp(s.squaredNorm() / sy, 1e-10, 1e10)
                        : std::min(step * 2.0, 1e10);
    }

    double violation = 0.0;
    for (size_t j = 0; j < m; ++j) {
      const double gj = phi.row(j, x);
      violation = std::max(violation, -problem.constraints[j].value(x));
      mu[j] = std::max(mu[j] - c * gj, 0.0);
    }

    Vec grad_l = problem.gradient(x);
    double slackness = 0.0;
    out.multipliers.assign(m, 0.0);
    for (size_t j = 0; j < m; ++j) {
      out.multipliers[j] = mu[j] / weight[j];
      grad_l += mu[j] * phi.row_gradient(j, x);
      slackness = std::max(slackness, std::abs(mu[j] * phi.row(j, x)));
    }
    out.x = x;
    out.violation = violation;
    out.kkt_residual =
        std::max({violation, slackness, projected_step_norm(problem, x, grad_l)});
    if (out.kkt_residual <= opts.kkt_tol && violation <= opts.feas_tol) {
      out.converged = true;
      return out;
    }
    if (out.iterations >= opts.max_inner) break;
    if (violation > opts.feas_tol && violation > 0.25 * prev_violation) {
      c = std::min(c * 10.0, 1e14);
    }
    prev_violation = violation;
  }
  return out;
}

}  // namespace swipt::detail
