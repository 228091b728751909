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

#ifndef SWIPT_AUGMENTED_ASCENT_HPP_
#define SWIPT_AUGMENTED_ASCENT_HPP_

#include <Eigen/Core>

#include <functional>
#include <vector>

namespace swipt::detail {

using Vec = Eigen::VectorXd;

// g(x) >= 0, already scaled to order one.
struct InequalityConstraint {
  std::function<double(const Vec&)> value;
  std::function<Vec(const Vec&)> gradient;
};

// maximize f(x) subject to g_j(x) >= 0 and x in the set handled by `project`.
struct AscentProblem {
  std::function<double(const Vec&)> objective;
  std::function<Vec(const Vec&)> gradient;
  std::vector<InequalityConstraint> constraints;
  std::function<Vec(const Vec&)> project;
};

struct AscentOptions {
  double kkt_tol = 1e-5;
  double feas_tol = 1e-10;
  int max_inner = 5000;   // gradient iterations over all penalty rounds
  int max_rounds = 60;
  double penalty0 = 10.0;
  double step0 = 0.1;
};

struct AscentResult {
  Vec x;
  std::vector<double> multipliers;
  double kkt_residual = 0.0;
  double violation = 0.0;
  int iterations = 0;
  bool converged = false;
};

// Augmented Lagrangian on the inequality constraints; each subproblem is
// solved by projected gradient with Barzilai-Borwein steps and Armijo
// backtracking along the projection arc.
AscentResult maximize(const AscentProblem& problem, const Vec& x0,
                      const AscentOptions& opts);

// Euclidean projection onto {p >= 0, sum p <= cap}.
Vec project_capped_simplex(const Vec& p, double cap);

Vec clip_unit_box(const Vec& a);

}  // namespace swipt::detail

#endif  // SWIPT_AUGMENTED_ASCENT_HPP_
