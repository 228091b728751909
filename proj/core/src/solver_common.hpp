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

#ifndef SWIPT_SOLVER_COMMON_HPP_
#define SWIPT_SOLVER_COMMON_HPP_

#include <Eigen/Core>

#include <cmath>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "augmented_ascent.hpp"
#include "swipt/channel.hpp"
#include "swipt/solve_result.hpp"
#include "swipt/system_model.hpp"

namespace swipt::detail {

inline constexpr double kLog2e = std::numbers::log2e;

// Constraint rows are divided by these so the penalty sees order-one values.
inline double rate_scale(const QosConstraints& qos) { return std::max(qos.r_min, 1.0); }
inline double energy_scale(const QosConstraints& qos) { return std::max(qos.e_min, 1e-3); }

inline Vec to_vec(std::span<const double> v) {
  return Eigen::Map<const Vec>(v.data(), static_cast<Eigen::Index>(v.size()));
}
inline std::vector<double> to_std(const Vec& v) { return {v.data(), v.data() + v.size()}; }

// Clears -0 and tiny negatives left by floating point in projected iterates.
inline std::vector<double> sanitize(const Vec& v, double hi) {
  std::vector<double> out(static_cast<size_t>(v.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    out[static_cast<size_t>(i)] = std::clamp(v[i], 0.0, hi);
  }
  return out;
}

// a * log2(1 + snr / max(a, floor)) and its partials in a and in snr. Below
// the floor this is a linear extension that stays within 1e-9 * log2(1 +
// 1e9 snr) of the exact limit 0 while keeping value and gradient consistent.
struct RateTerm {
  double value, d_assign, d_snr;
};
inline RateTerm rate_term(double a, double snr) {
  if (a >= kAssignFloor) {
    const double z = snr / a;
    const double l = std::log2(1.0 + z);
    return {a * l, l - z * kLog2e / (1.0 + z), kLog2e / (1.0 + z)};
  }
  const double z = snr / kAssignFloor;
  const double l = std::log2(1.0 + z);
  return {a * l, l, a / kAssignFloor * kLog2e / (1.0 + z)};
}

// x = [p; a], length 2L.
struct JointProblem {
  Vec lam;
  double zeta, eta, p_fix;
  Eigen::Index l;

  JointProblem(const EigenChannels& lc, const SystemParams& params, int n_active)
      : lam(to_vec(lc.span())), zeta(params.zeta), eta(params.eta),
        p_fix(params.circuit_power(n_active)), l(lc.count()) {}

  double rate(const Vec& x) const {
    double c = 0.0;
    for (Eigen::Index i = 0; i < l; ++i) c += rate_term(x[l + i], x[i] * lam[i]).value;
    return c;
  }
  Vec rate_grad(const Vec& x) const {
    Vec g(2 * l);
    for (Eigen::Index i = 0; i < l; ++i) {
      const auto t = rate_term(x[l + i], x[i] * lam[i]);
      g[i] = lam[i] * t.d_snr;
      g[l + i] = t.d_assign;
    }
    return g;
  }
  double energy(const Vec& x) const {
    double e = 0.0;
    for (Eigen::Index i = 0; i < l; ++i) e += (1.0 - x[l + i]) * x[i] * lam[i];
    return eta * e;
  }
  Vec energy_grad(const Vec& x) const {
    Vec g(2 * l);
    for (Eigen::Index i = 0; i < l; ++i) {
      g[i] = eta * (1.0 - x[l + i]) * lam[i];
      g[l + i] = -eta * x[i] * lam[i];
    }
    return g;
  }
  double total(const Vec& x) const { return zeta * x.head(l).sum() + p_fix - energy(x); }
  Vec total_grad(const Vec& x) const {
    Vec g = -energy_grad(x);
    g.head(l).array() += zeta;
    return g;
  }
};

inline Vec pack(const Allocation& a) {
  Vec x(2 * a.size());
  x << to_vec(a.power), to_vec(a.assign);
  return x;
}

inline Allocation unpack(const Vec& x, double p_max) {
  const Eigen::Index l = x.size() / 2;
  return Allocation(sanitize(x.tail(l), 1.0), sanitize(x.head(l), p_max));
}

// Throws InfeasibleError unless some binary allocation meets every
// constraint. `phase` tags the error for multi-phase solvers.
void require_feasible(const EigenChannels& lam, const SystemParams& params,
                      const QosConstraints& qos, const std::string& phase = {});

AscentOptions ascent_options(const SolverConfig& cfg);

// Multi-start budgets 2^(k/2) W from 1/4 W up to p_max, or {p_max} when
// p_max < 1/4. The ladder does not move with p_max, so solves at different
// budgets share their starts.
std::vector<double> start_budgets(double p_max);

EvaluatedAllocation evaluate(Allocation alloc, const EigenChannels& lam,
                             const SystemParams& params, int n_active);

}  // namespace swipt::detail

#endif  // SWIPT_SOLVER_COMMON_HPP_
