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
#include <random>

#include "doctest.h"
#include "swipt/error.hpp"
#include "swipt/system_model.hpp"

using namespace swipt;

namespace {

SystemParams default_params() {
  SystemParams p;
  p.zeta = 2.6316;
  return p;
}

}  // namespace

TEST_CASE("sum_rate") {
  CHECK(sum_rate(Allocation({0, 0}, {1, 2}), EigenChannels({3, 1})) == 0.0);
  CHECK(sum_rate(Allocation({1}, {1}), EigenChannels({1})) == doctest::Approx(1.0));
  CHECK(sum_rate(Allocation({1, 1}, {1, 2}), EigenChannels({3, 1})) ==
        doctest::Approx(3.5849625).epsilon(1e-8));
  CHECK_THROWS_AS(sum_rate(Allocation({1}, {1}), EigenChannels({3, 1})), InvalidArgument);
}

TEST_CASE("relaxed rate term vanishes at the floor") {
  for (double z : {1e-3, 1.0, 10.0, 1e3}) CHECK(relaxed_rate_term(1e-9, z) < 1e-6);
  CHECK(relaxed_rate_term(0.0, 5.0) == 0.0);
  CHECK(relaxed_rate_term(1.0, 3.0) == doctest::Approx(2.0));
}

TEST_CASE("relaxed and binary rates agree on binary assignments") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0.0, 5.0);
  for (int k = 0; k < 100; ++k) {
    const EigenChannels lam({u(rng), u(rng), u(rng)});
    std::vector<double> a{double(k & 1), double((k >> 1) & 1), double((k >> 2) & 1)};
    std::vector<double> p{u(rng), u(rng), u(rng)};
    double direct = 0.0;
    for (int i = 0; i < 3; ++i) direct += std::log2(1.0 + a[i] * p[i] * lam[i]);
    CHECK(sum_rate(Allocation(a, p), lam) == doctest::Approx(direct).epsilon(1e-14));
  }
}

TEST_CASE("harvested_energy") {
  SystemParams sp;
  CHECK(harvested_energy(Allocation({1, 1}, {1, 2}), EigenChannels({3, 1}), sp) == 0.0);
  CHECK(harvested_energy(Allocation({0, 1}, {2, 1}), EigenChannels({3, 1}), sp) ==
        doctest::Approx(0.6));
  CHECK(harvested_energy(Allocation({0.5}, {4}), EigenChannels({2}), sp) == doctest::Approx(0.4));
}

TEST_CASE("evaluate_metrics power model") {
  SUBCASE("default hardware, eight antennas") {
    // Sum of powers 2 W on an EH channel harvesting 0.6 W.
    const auto sp = default_params();
    const Allocation x({0, 1}, {2, 0});
    const auto m = evaluate_metrics(x, EigenChannels({3, 1}), sp, 8);
    CHECK(m.energy == doctest::Approx(0.6));
    CHECK(m.total_power == doctest::Approx(25.6632).epsilon(1e-12));
    CHECK(m.circuit_power == doctest::Approx(21.0));
  }
  SUBCASE("zero allocation") {
    SystemParams sp;
    const auto m = evaluate_metrics(Allocation({1}, {0}), EigenChannels({2}), sp, 1);
    CHECK(m.total_power == doctest::Approx(14.0));
    CHECK(m.ee == 0.0);
  }
  SUBCASE("ee is rate over power") {
    SystemParams sp;
    const auto m = evaluate_metrics(Allocation({1, 0.3}, {1.5, 2}), EigenChannels({4, 2}), sp, 3);
    CHECK(m.ee == doctest::Approx(m.rate / m.total_power).epsilon(1e-12));
  }
  SUBCASE("more harvest means less net power") {
    SystemParams sp;
    const EigenChannels lam({4, 2});
    const double p_lo = evaluate_metrics(Allocation({1, 0}, {1, 1}), lam, sp, 2).total_power;
    const double p_hi = evaluate_metrics(Allocation({1, 0}, {1, 1}), EigenChannels({4, 3}), sp, 2).total_power;
    CHECK(p_hi < p_lo);
  }
  SUBCASE("non-positive power is an error") {
    SystemParams sp;
    sp.p_sta = 0.0;
    sp.p_ant_bs = 0.0;
    sp.p_ant = 0.0;
    CHECK_THROWS_AS(evaluate_metrics(Allocation({0}, {10}), EigenChannels({100}), sp, 1),
                    NonPositivePowerError);
  }
  SUBCASE("n_active must be positive") {
    SystemParams sp;
    CHECK_THROWS_AS(evaluate_metrics(Allocation({1}, {1}), EigenChannels({1}), sp, 0),
                    InvalidArgument);
  }
}

TEST_CASE("check_feasible") {
  SystemParams sp;
  SUBCASE("no floors, zero allocation") {
    const auto r = check_feasible(Allocation({1, 1}, {0, 0}), EigenChannels({2, 1}), sp, {0, 0, 1});
    CHECK(r.feasible);
    CHECK(r.violated().empty());
  }
  SUBCASE("unreachable rate") {
    const auto r = check_feasible(Allocation({1, 1}, {0.5, 0.5}), EigenChannels({10, 10}), sp,
                                  {1e6, 0, 1});
    CHECK_FALSE(r.feasible);
    CHECK(r.rate_slack < 0.0);
    CHECK(r.violated() == "rate");
  }
  SUBCASE("budget met with equality") {
    const auto r = check_feasible(Allocation({1, 1}, {0.25, 0.75}), EigenChannels({2, 1}), sp,
                                  {0, 0, 1});
    CHECK(r.feasible);
    CHECK(r.power_slack == doctest::Approx(0.0));
  }
  SUBCASE("slack within the tolerance passes") {
    const auto r = check_feasible(Allocation({1}, {1.0 + 5e-10}), EigenChannels({1}), sp, {0, 0, 1});
    CHECK(r.feasible);
  }
}

TEST_CASE("round_assignment") {
  CHECK(round_assignment(Allocation({0.99, 0.01}, {1, 2})).assign == std::vector<double>{1, 0});
  CHECK(round_assignment(Allocation({0.5}, {1})).assign == std::vector<double>{1});
  const Allocation bin({1, 0, 1}, {1, 2, 3});
  const auto r = round_assignment(bin);
  CHECK(r.assign == bin.assign);
  CHECK(r.power == bin.power);
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int k = 0; k < 100; ++k) {
    const Allocation x({u(rng), u(rng), u(rng)}, {1, 1, 1});
    const auto once = round_assignment(x);
    CHECK(round_assignment(once).assign == once.assign);
    for (int i = 0; i < 3; ++i) CHECK(std::abs(once.assign[i] - x.assign[i]) <= 0.5);
  }
}

TEST_CASE("Allocation validation") {
  CHECK_THROWS_AS(Allocation({1, 0}, {1}), InvalidArgument);
  CHECK_THROWS_AS(Allocation({1.2}, {1}), InvalidArgument);
  CHECK_THROWS_AS(Allocation({1}, {-1}), InvalidArgument);
  CHECK_THROWS_AS(Allocation({1}, {std::numeric_limits<double>::infinity()}), InvalidArgument);
  CHECK(Allocation({1, 0}, {1, 1}).is_binary());
  CHECK_FALSE(Allocation({1, 0.5}, {1, 1}).is_binary());
}

TEST_CASE("parameter validation") {
  SystemParams sp;
  sp.zeta = 0.9;
  CHECK_THROWS_AS(sp.validate(), InvalidArgument);
  sp = SystemParams{};
  sp.eta = 0.0;
  CHECK_THROWS_AS(sp.validate(), InvalidArgument);
  sp = SystemParams{};
  sp.theta = 0.0;
  CHECK_THROWS_AS(sp.validate(), InvalidArgument);
  CHECK_THROWS_AS((QosConstraints{-1, 0, 1}.validate()), InvalidArgument);
  CHECK_THROWS_AS((QosConstraints{0, 0, 0}.validate()), InvalidArgument);
}

TEST_CASE("water_filling and its inverse") {
  const std::vector<double> g{4, 2, 0.5};
  const auto p = water_filling(g, 3.0);
  CHECK(p[0] + p[1] + p[2] == doctest::Approx(3.0));
  // Active channels share one water level.
  CHECK(p[0] + 1 / g[0] == doctest::Approx(p[1] + 1 / g[1]));
  double rate = 0.0;
  for (int i = 0; i < 3; ++i) rate += std::log2(1 + p[i] * g[i]);
  const auto inv = min_power_for_rate(g, rate);
  REQUIRE(inv);
  double total = 0.0;
  for (double v : *inv) total += v;
  CHECK(total == doctest::Approx(3.0).epsilon(1e-9));
  CHECK_FALSE(min_power_for_rate(std::vector<double>{0.0, 0.0}, 1.0));
}

TEST_CASE("cheapest binary allocation") {
  SystemParams sp;
  const EigenChannels lam({6, 3, 1});
  SUBCASE("feasible instance meets every floor with the least power") {
    const QosConstraints q{2, 0.3, 10};
    const auto x = cheapest_binary_allocation(lam, sp, q);
    REQUIRE(x);
    CHECK(x->is_binary());
    CHECK(check_feasible(*x, lam, sp, q).feasible);
    int eh = 0;
    for (double a : x->assign) eh += a == 0.0;
    CHECK(eh == 1);
    // No binary assignment reaches the floors with less power.
    for (int mask = 0; mask < 8; ++mask) {
      std::vector<double> a{double(mask & 1), double((mask >> 1) & 1), double((mask >> 2) & 1)};
      const auto m = min_power_for_assignment(a, lam, sp, q);
      if (m) CHECK(m->transmit_power >= x->transmit_power() - 1e-9);
    }
  }
  SUBCASE("energy floor above the budget is infeasible") {
    const QosConstraints q{0, 0.1 * 10 * 6 + 0.1, 10};
    CHECK_FALSE(cheapest_binary_allocation(lam, sp, q));
  }
  SUBCASE("no floors needs no power") {
    const auto x = cheapest_binary_allocation(lam, sp, {0, 0, 1});
    REQUIRE(x);
    CHECK(x->transmit_power() == 0.0);
  }
}

TEST_CASE("power model screen") {
  SystemParams sp;
  CHECK(power_model_margin(EigenChannels({10}), sp) > 0.0);
  CHECK_NOTHROW(screen_power_model(EigenChannels({10}), sp));
  CHECK_THROWS_AS(screen_power_model(EigenChannels({30, 1}), sp), NonPositivePowerError);
}
