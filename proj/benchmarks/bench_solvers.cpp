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


#include <benchmark/benchmark.h>

#include "swipt/antenna_selection.hpp"
#include "swipt/channel.hpp"
#include "swipt/dm_cvx.hpp"
#include "swipt/jeapa.hpp"
#include "swipt/moo_lc.hpp"
#include "swipt/oracle.hpp"
#include "swipt/seeding.hpp"

namespace {

using namespace swipt;

struct Fixture {
  SystemParams params;
  QosConstraints qos;
  ChannelMatrix h;
  EigenChannels lam;
};

Fixture make_fixture(int n) {
  SystemParams sp;
  sp.n_tx = n;
  sp.n_rx = n;
  const QosConstraints q = n >= 8 ? QosConstraints{2.0, 0.5, 20.0} : QosConstraints{1.0, 0.1, 5.0};
  for (std::uint64_t a = 0;; ++a) {
    ChannelMatrix h = generate_rayleigh(n, n, derive_seed(42, a));
    EigenChannels lam = eigen_channels(h);
    if (power_model_margin(lam, sp) > 0.0 && cheapest_binary_allocation(lam, sp, q)) {
      return {sp, q, std::move(h), std::move(lam)};
    }
  }
}

void BM_Dinkelbach(benchmark::State& state) {
  const Fixture f = make_fixture(static_cast<int>(state.range(0)));
  const SolverConfig cfg;
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_dinkelbach(f.lam, f.params, f.qos, f.params.n_rx, cfg));
  }
}
BENCHMARK(BM_Dinkelbach)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_Jeapa(benchmark::State& state) {
  const Fixture f = make_fixture(static_cast<int>(state.range(0)));
  const SolverConfig cfg;
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_jeapa(f.lam, f.params, f.qos, f.params.n_rx, cfg));
  }
}
BENCHMARK(BM_Jeapa)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_MooLc(benchmark::State& state) {
  const Fixture f = make_fixture(static_cast<int>(state.range(0)));
  const SolverConfig cfg;
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_moo_lc(f.lam, f.params, f.qos, f.params.n_rx, cfg));
  }
}
BENCHMARK(BM_MooLc)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_OracleFixedSet(benchmark::State& state) {
  const Fixture f = make_fixture(3);
  OracleConfig ocfg;
  ocfg.power_grid_steps = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle_fixed_set(f.lam, f.params, f.qos, 3, ocfg));
  }
}
BENCHMARK(BM_OracleFixedSet)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_ExhaustiveSelection(benchmark::State& state) {
  const Fixture f = make_fixture(4);
  const SelectionOptions opts;
  for (auto _ : state) {
    benchmark::DoNotOptimize(select_exhaustive(f.h, f.params, f.qos, opts));
  }
}
BENCHMARK(BM_ExhaustiveSelection)->Unit(benchmark::kMillisecond);

void BM_EigenChannels(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ChannelMatrix h = generate_rayleigh(n, n, 7);
  for (auto _ : state) benchmark::DoNotOptimize(eigen_channels(h));
}
BENCHMARK(BM_EigenChannels)->Arg(4)->Arg(8)->Arg(16);

}  // namespace
BENCHMARK_MAIN();
