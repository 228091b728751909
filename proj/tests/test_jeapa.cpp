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


#include <cmath>
#include <random>

#include "doctest.h"
#include "support/oracles.hpp"
#include "swipt/channel.hpp"
#include "swipt/dm_cvx.hpp"
#include "swipt/error.hpp"
#include "swipt/jeapa.hpp"
#include "swipt/seeding.hpp"

using namespace swipt;

namespace {

// Golden scan over the total power with water-filling inside; gains
// (6, 3, 1), P_max 10, circuit power 16 W.
constexpr double kAllIdBestEe = 0.25780735209;
// 2-channel power grid (step 0.005), gains (5, 2), alpha = (1, 0).
constexpr double kBinaryGridEe = 0.158116322684;
// 2-channel assignment grid (step 0.01), gains (5, 2), p = (1, 0.5).
constexpr double kAssignGridEe = 0.189206354205;

SystemParams two_channel_params() {
  SystemParams sp;
  sp.zeta = 2.6316;
  return sp;
}

}  // namespace

TEST_CASE("frozen jeapa references reproduce") {
  CHECK(oracles::best_ee_all_id({6, 3, 1}, 1.0 / 0.38, 16.0, 10.0) ==
        doctest::Approx(kAllIdBestEe).epsilon(1e-9));
  oracles::Link k{{5, 2}, 2.6316, 0.1, 15.0, 1.0, 0.2, 10.0};
  CHECK(oracles::binary_grid_2ch(k, {1, 0}, 0.005) == doctest::Approx(kBinaryGridEe).epsilon(1e-10));
}

TEST_CASE("effective channels") {
  SystemParams sp;
  const Allocation x({0.5, 0.0}, {2.0, 1.0});
  const auto e = EffectiveChannels::from(x, EigenChannels({4, 2}), sp, 2);
  CHECK(e.lam_hat[0] == doctest::Approx(8.0));
  CHECK(std::isfinite(e.lam_hat[1]));
  CHECK(e.lam_check == std::vector<double>{2.0, 2.0});
  CHECK(e.lam_tilde == std::vector<double>{8.0, 2.0});
  CHECK(e.p_fix == doctest::Approx(15.0));
  CHECK(e.p_fix_tilde == doctest::Approx(sp.zeta * 3.0 + 15.0 - 0.1 * 10.0));
}

TEST_CASE("power allocation without floors is EE-optimal water-filling") {
  SystemParams sp;
  const EigenChannels lam({6, 3, 1});
  const QosConstraints q{0, 0, 10};
  const std::vector<double> ones{1, 1, 1};
  const auto r = power_allocation(ones, lam, sp, q, 3, SolverConfig{});
  const double ee = evaluate_metrics(r.alloc, lam, sp, 3).ee;
  CHECK(ee == doctest::Approx(kAllIdBestEe).epsilon(1e-3));
  CHECK(r.duals.kappa == 0.0);
  CHECK(r.duals.rho == 0.0);
}

TEST_CASE("power allocation with fixed binary assignment matches a grid search") {
  const auto sp = two_channel_params();
  const EigenChannels lam({5, 2});
  const QosConstraints q{1, 0.2, 10};
  const std::vector<double> a{1, 0};
  const auto r = power_allocation(a, lam, sp, q, 2, SolverConfig{});
  CHECK(check_feasible(r.alloc, lam, sp, q).feasible);
  const double ee = evaluate_metrics(r.alloc, lam, sp, 2).ee;
  CHECK(std::abs(ee - kBinaryGridEe) <= 1e-3);
  CHECK(r.duals.rho >= 0.0);
  CHECK(r.duals.kappa >= 0.0);
  CHECK(r.duals.xi >= 0.0);
}

TEST_CASE("assignment without floors prefers decoding") {
  SystemParams sp;
  sp.n_tx = 8;
  const EigenChannels lam({5, 2});
  const std::vector<double> p{1.0, 0.5};
  const auto r = eigen_assignment(p, lam, sp, {0, 0, 10}, 2, SolverConfig{});
  CHECK(r.alloc.assign[0] == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(r.alloc.assign[1] == doctest::Approx(1.0).epsilon(1e-6));
  const double ee = evaluate_metrics(r.alloc, lam, sp, 2).ee;
  CHECK(std::abs(ee - kAssignGridEe) <= 1e-3);
  CHECK(ee >= kAssignGridEe - 1e-9);
}

TEST_CASE("energy floor equal to the full harvest forces every channel to harvest") {
  SystemParams sp;
  const EigenChannels lam({5, 2});
  const std::vector<double> p{1.0, 0.5};
  const double full = sp.eta * (1.0 * 5 + 0.5 * 2);
  const auto r = eigen_assignment(p, lam, sp, {0, full, 10}, 2, SolverConfig{});
  CHECK(r.alloc.assign[0] < 1e-6);
  CHECK(r.alloc.assign[1] < 1e-6);
  CHECK_THROWS_AS(eigen_assignment(p, lam, sp, {0, full + 0.01, 10}, 2, SolverConfig{}),
                  InfeasibleError);
}

TEST_CASE("assignment stays in the unit box") {
  SystemParams sp;
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 2.0);
  for (int k = 0; k < 20; ++k) {
    const EigenChannels lam({u(rng) + 1, u(rng) + 0.5, u(rng)});
    const std::vector<double> p{u(rng) + 0.1, u(rng), u(rng)};
    const std::vector<double> start{1.7, -0.4, 0.5};
    const auto r = eigen_assignment(p, lam, sp, {0.1, 0.0, 10}, 3, SolverConfig{}, start);
    for (double a : r.alloc.assign) {
      CHECK(a >= 0.0);
      CHECK(a <= 1.0);
    }
    CHECK(r.duals.tau >= 0.0);
    CHECK(r.duals.sigma_c >= 0.0);
    for (double v : r.duals.nu) CHECK(v >= 0.0);
  }
}

TEST_CASE("Lagrangian gradients match central differences") {
  SystemParams sp;
  const QosConstraints q{1, 0.2, 10};
  std::mt19937_64 rng(1234);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int k = 0; k < 100; ++k) {
    const EigenChannels lam({4 * u(rng) + 0.5, 3 * u(rng) + 0.2, 2 * u(rng) + 0.1});
    Allocation x({0.05 + 0.9 * u(rng), 0.05 + 0.9 * u(rng), 0.05 + 0.9 * u(rng)},
                 {0.1 + 3 * u(rng), 0.1 + 3 * u(rng), 0.1 + 3 * u(rng)});
    const PowerDuals pd{u(rng), u(rng), u(rng)};
    const AssignDuals ad{{u(rng), u(rng), u(rng)}, u(rng), u(rng)};
    const auto gp = power_lagrangian_gradient(x, lam, sp, q, 3, pd);
    const auto ga = assignment_lagrangian_gradient(x, lam, sp, q, 3, ad);
    for (int i = 0; i < 3; ++i) {
      const double h = 1e-6 * std::max(1.0, x.power[i]);
      Allocation up = x, dn = x;
      up.power[i] += h;
      dn.power[i] -= h;
      const double fd = (power_lagrangian(up, lam, sp, q, 3, pd) -
                         power_lagrangian(dn, lam, sp, q, 3, pd)) / (2 * h);
      CHECK(std::abs(fd - gp[i]) <= 1e-4 * std::max(1.0, std::abs(fd)));

      const double ha = 1e-6;
      up = x;
      dn = x;
      up.assign[i] += ha;
      dn.assign[i] -= ha;
      const double fa = (assignment_lagrangian(up, lam, sp, q, 3, ad) -
                         assignment_lagrangian(dn, lam, sp, q, 3, ad)) / (2 * ha);
      CHECK(std::abs(fa - ga[i]) <= 1e-4 * std::max(1.0, std::abs(fa)));
    }
  }
}

TEST_CASE("JEAPA rounds are monotone and agree with Dinkelbach") {
  SystemParams sp;
  sp.n_tx = 3;
  sp.n_rx = 3;
  const SolverConfig cfg;
  int compared = 0;
  for (int t = 0; t < 20; ++t) {
    const auto lam = eigen_channels(generate_rayleigh(3, 3, derive_seed(8, t)));
    if (power_model_margin(lam, sp) <= 0) continue;
    const QosConstraints q{1, 0.1, 5};
    const auto j = solve_jeapa(lam, sp, q, 3, cfg);
    const auto d = solve_dinkelbach(lam, sp, q, 3, cfg);
    CAPTURE(t);
    // Pre-rounding rows are every row but the last.
    const auto& rows = j.trace.rows;
    for (size_t k = 1; k + 1 < rows.size(); ++k) CHECK(rows[k][1] >= rows[k - 1][1] - 1e-12);
    CHECK(rows.back()[1] <= rows[rows.size() - 2][1] + 1e-6);
    CHECK(j.rounded.metrics.ee <= j.relaxed->metrics.ee + 1e-6);
    CHECK(std::abs(j.relaxed->metrics.ee - d.relaxed->metrics.ee) <=
          0.01 * d.relaxed->metrics.ee);
    ++compared;
  }
  CHECK(compared >= 15);
}

TEST_CASE("JEAPA without floors matches Dinkelbach") {
  SystemParams sp;
  sp.n_tx = 4;
  sp.n_rx = 4;
  for (int t = 0; t < 10; ++t) {
    const auto lam = eigen_channels(generate_rayleigh(4, 4, derive_seed(9, t)));
    if (power_model_margin(lam, sp) <= 0) continue;
    const QosConstraints q{0, 0, 8};
    const auto j = solve_jeapa(lam, sp, q, 4, SolverConfig{});
    const auto d = solve_dinkelbach(lam, sp, q, 4, SolverConfig{});
    CHECK(j.relaxed->metrics.ee == doctest::Approx(d.relaxed->metrics.ee).epsilon(1e-3));
  }
}

TEST_CASE("rounding repair reaches a feasible binary point") {
  SystemParams sp;
  const EigenChannels lam({6, 3, 1});
  const QosConstraints q{2, 0.3, 10};
  // Rounds to all-decoding, which misses the energy floor.
  const Allocation relaxed({0.9, 0.6, 0.45}, {2, 2, 2});
  SolveResult res;
  res.converged = true;
  round_and_reoptimize(relaxed, lam, sp, q, 3, SolverConfig{}, res);
  CHECK(res.feasible);
  CHECK(res.rounded.alloc.is_binary());
  CHECK(check_feasible(res.rounded.alloc, lam, sp, q).feasible);
}

TEST_CASE("JEAPA trace columns") {
  SystemParams sp;
  const auto r = solve_jeapa(EigenChannels({3, 1}), sp, {0.5, 0.05, 4}, 2, SolverConfig{});
  CHECK(r.trace.columns ==
        std::vector<std::string>{"round", "ee", "rate", "energy", "power", "max_dual"});
  CHECK(r.trace.rows.front()[0] == 0.0);
}

TEST_CASE("JEAPA inner iterations against Dinkelbach, reported") {
  SystemParams sp;
  const QosConstraints q{2, 0.5, 20};
  const SolverConfig cfg;
  int faster = 0, total = 0;
  for (int t = 0; total < 100; ++t) {
    const auto lam = eigen_channels(generate_rayleigh(8, 8, derive_seed(31, t)));
    if (power_model_margin(lam, sp) <= 0) continue;
    const auto j = solve_jeapa(lam, sp, q, 8, cfg);
    const auto d = solve_dinkelbach(lam, sp, q, 8, cfg);
    faster += 2 * j.inner_iterations <= d.inner_iterations;
    ++total;
  }
  MESSAGE(faster, " of ", total, " trials: JEAPA used at most half the inner iterations of dm_cvx");
  CHECK(total == 100);
}
