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


// swipt_sim: Monte Carlo front-end for the SWIPT energy-efficiency solvers.
//
//   swipt_sim run --config cfg.json --out records.csv
//   swipt_sim compare --config cfg.json --out deltas.csv
//   swipt_sim trace --config cfg.json --trial 3 --algo dm_cvx --out trace.csv
//   swipt_sim oracle-check --config small.json
//
// SWIPT_WORKERS sets the worker count when --workers is absent.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "swipt/antenna_selection.hpp"
#include "swipt/error.hpp"
#include "swipt/harness.hpp"

namespace {

struct Common {
  std::string config;
  std::optional<std::uint64_t> seed;
  int workers = 0;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--config", c.config, "JSON run configuration")->required();
  cmd->add_option("--seed", c.seed, "Override master_seed");
  cmd->add_option("--workers", c.workers, "Worker threads (0: SWIPT_WORKERS or all cores)");
}

swipt::RunConfig load(const Common& c) {
  swipt::RunConfig cfg = swipt::load_run_config(c.config);
  if (c.seed) cfg.master_seed = *c.seed;
  return cfg;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw swipt::Error("cannot open " + path + " for writing");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Energy-efficiency simulator for spatial-switching MIMO SWIPT links"};
  app.require_subcommand(1);

  Common run_opts;
  std::string run_out;
  bool timing = false;
  auto* run = app.add_subcommand("run", "Run every trial and write one record per solve");
  add_common(run, run_opts);
  run->add_option("--out", run_out, "Output CSV")->required();
  run->add_flag("--timing", timing, "Add a runtime_ms column (breaks byte-identity)");

  Common cmp_opts;
  std::string cmp_out;
  auto* cmp = app.add_subcommand("compare", "Paired per-trial EE deltas between schemes");
  add_common(cmp, cmp_opts);
  cmp->add_option("--out", cmp_out, "Output CSV")->required();

  Common tr_opts;
  std::string tr_out;
  int trial = 0;
  std::string algo;
  auto* tr = app.add_subcommand("trace", "Convergence trace of one trial");
  add_common(tr, tr_opts);
  tr->add_option("--trial", trial, "Trial index")->required()->check(CLI::NonNegativeNumber);
  tr->add_option("--algo", algo, "dm_cvx, jeapa or moo_lc")->required();
  tr->add_option("--out", tr_out, "Output CSV")->required();

  Common oc_opts;
  auto* oc = app.add_subcommand("oracle-check", "Certify the solvers against the brute-force oracle");
  add_common(oc, oc_opts);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      const auto cfg = load(run_opts);
      swipt::RunOptions opts{run_opts.workers, timing};
      const auto records = swipt::run(cfg, opts);
      auto out = open_out(run_out);
      swipt::write_records_csv(records, out, timing);
    } else if (*cmp) {
      const auto cfg = load(cmp_opts);
      const auto rows = swipt::compare(cfg, {cmp_opts.workers, false});
      auto out = open_out(cmp_out);
      swipt::write_comparison_csv(rows, out);
    } else if (*tr) {
      const auto cfg = load(tr_opts);
      if (trial >= cfg.trials) throw swipt::InvalidArgument("--trial is past the configured trials");
      const auto result = swipt::trace(cfg, trial, swipt::parse_inner_solver(algo));
      auto out = open_out(tr_out);
      result.trace.write_csv(out);
    } else if (*oc) {
      const auto cfg = load(oc_opts);
      const auto report = swipt::oracle_check(cfg, {oc_opts.workers, false});
      for (const auto& line : report.lines) std::cout << line << '\n';
      std::cout << report.checks << " checks, " << report.violations << " violations\n";
      return report.violations == 0 ? 0 : 1;
    }
  } catch (const swipt::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
