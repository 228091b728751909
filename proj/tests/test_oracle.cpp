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
#include <limits>

#include "doctest.h"
#include "support/oracles.hpp"
#include "swipt/channel.hpp"
#include "swipt/dm_cvx.hpp"
#include "swipt/error.hpp"
#include "swipt/jeapa.hpp"
#include "swipt/moo_lc.hpp"
#include "swipt/oracle.hpp"
#include "swipt/seeding.hpp"

using namespace swipt;

TEST_CASE("oracle on one channel agrees with a golden scan") {
  SystemParams sp;
  const auto r = oracle_fixed_set(EigenChannels({4}), sp, {0, 0, 10}, 1, OracleConfig{});
  REQUIRE(r.feasible);
  const double zeta = sp.zeta;
  auto ee = [&](double p) { return std::log2(1 + 4 * p) / (zeta * p + 14.0); };
  const double p_star = oracles::golden_max(ee, 0, 10);
  const double step = 10.0 / 200;
  const double tol = ee(p_star) - std::min(ee(p_star - step), ee(p_star + step));
  CHECK(r.rounded.metrics.ee <= ee(p_star) + 1e-12);
  CHECK(r.rounded.metrics.ee >= ee(p_star) - tol);
}

TEST_CASE("without floors the oracle never harvests when harvesting is a net loss") {
  SystemParams sp;
  const auto r = oracle_fixed_set(EigenChannels({3, 1}), sp, {0, 0, 5}, 2, OracleConfig{});
  REQUIRE(r.feasible);
  for (size_t i = 0; i < 2; ++i) {
    if (r.rounded.alloc.power[i] > 0) CHECK(r.rounded.alloc.assign[i] == 1.0);
  }
}

TEST_CASE("energy floor above the reachable harvest has no feasible point") {
  SystemParams sp;
  const QosConstraints q{0, 0.1 * 5 * 3 + 0.01, 5};
  const auto r = oracle_fixed_set(EigenChannels({3, 1}), sp, q, 2, OracleConfig{});
  CHECK_FALSE(r.feasible);
  CHECK(r.rounded.metrics.ee == -std::numeric_limits<double>::infinity());
}

TEST_CASE("a finer grid never does worse") {
  SystemParams sp;
  sp.n_tx = 3;
  const auto lam = eigen_channels(generate_rayleigh(3, 3, 9));
  const QosConstraints q{1, 0.1, 5};
  OracleConfig coarse;
  coarse.power_grid_steps = 40;
  OracleConfig fine;
  fine.power_grid_steps = 80;
  const double a = oracle_fixed_set(lam, sp, q, 3, coarse).rounded.metrics.ee;
  const double b = oracle_fixed_set(lam, sp, q, 3, fine).rounded.metrics.ee;
  CHECK(b >= a);
}

TEST_CASE("oracle value ignores the order the gains are given in") {
  SystemParams sp;
  const QosConstraints q{1, 0.1, 4};
  const auto a = oracle_fixed_set(EigenChannels({5, 2, 0.5}), sp, q, 3, OracleConfig{});
  const auto b = oracle_fixed_set(EigenChannels({0.5, 5, 2}), sp, q, 3, OracleConfig{});
  CHECK(a.rounded.metrics.ee == b.rounded.metrics.ee);
}

TEST_CASE("oracle caps") {
  SystemParams sp;
  OracleConfig o;
  o.max_channels = 2;
  CHECK_THROWS_AS(oracle_fixed_set(EigenChannels({3, 2, 1}), sp, {0, 0, 1}, 3, o), InvalidArgument);
  o = OracleConfig{};
  o.max_antennas = 2;
  CHECK_THROWS_AS(oracle_full(generate_rayleigh(3, 2, 1), sp, {0, 0, 1}, o), InvalidArgument);
  o = OracleConfig{};
  o.power_grid_steps = 5;
  CHECK_THROWS_AS(o.validate(), InvalidArgument);
}

TEST_CASE("oracle_full") {
  SystemParams sp;
  sp.n_tx = 2;
  OracleConfig o;
  o.power_grid_steps = 60;
  SUBCASE("one antenna reduces to the fixed set") {
    sp.n_rx = 1;
    const auto h = generate_rayleigh(1, 2, 4);
    const auto full = oracle_full(h, sp, {0.5, 0, 3}, o);
    const auto fixed = oracle_fixed_set(eigen_channels(h), sp, {0.5, 0, 3}, 1, o);
    CHECK(full.evaluations == 1);
    CHECK(full.best_result.rounded.metrics.ee == fixed.rounded.metrics.ee);
    CHECK(full.strategy == "exhaustive");
    CHECK(full.inner_solver == "oracle");
  }
  SUBCASE("a dead antenna is left out") {
    sp.n_rx = 2;
    ComplexMatrix m = generate_rayleigh(2, 2, 6).entries();
    m.row(1).setZero();
    const auto full = oracle_full(ChannelMatrix(m), sp, {0.5, 0, 3}, o);
    CHECK(full.best_set == AntennaSet({0}));
  }
}

TEST_CASE("oracle dominates every solver's rounded point") {
  SystemParams sp;
  sp.n_tx = 3;
  sp.n_rx = 3;
  const QosConstraints q{1, 0.1, 5};
  for (int t = 0; t < 5; ++t) {
    const auto lam = eigen_channels(generate_rayleigh(3, 3, derive_seed(30, t)));
    if (power_model_margin(lam, sp) <= 0) continue;
    const auto o = oracle_fixed_set(lam, sp, q, 3, OracleConfig{});
    REQUIRE(o.feasible);
    const double best = o.rounded.metrics.ee;
    CAPTURE(t);
    CHECK(solve_dinkelbach(lam, sp, q, 3, SolverConfig{}).rounded.metrics.ee <= best + 1e-3);
    CHECK(solve_jeapa(lam, sp, q, 3, SolverConfig{}).rounded.metrics.ee <= best + 1e-3);
    CHECK(solve_moo_lc(lam, sp, q, 3, SolverConfig{}).rounded.metrics.ee <= best + 1e-3);
  }
}
