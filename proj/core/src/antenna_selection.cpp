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

#include "swipt/antenna_selection.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <ostream>

#include "solver_common.hpp"
#include "swipt/csv.hpp"
#include "swipt/dm_cvx.hpp"
#include "swipt/error.hpp"
#include "swipt/jeapa.hpp"
#include "swipt/moo_lc.hpp"
#include "swipt/oracle.hpp"

namespace swipt {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

std::vector<AntennaSet> all_subsets(int n_rx) {
  std::vector<AntennaSet> out;
  for (int n = 1; n <= n_rx; ++n) {
    std::vector<int> idx(static_cast<size_t>(n));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      out.emplace_back(idx);
      int k = n - 1;
      while (k >= 0 && idx[static_cast<size_t>(k)] == n_rx - n + k) --k;
      if (k < 0) break;
      ++idx[static_cast<size_t>(k)];
      for (int j = k + 1; j < n; ++j) {
        idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
      }
    }
  }
  return out;
}

SolveResult failed_result(std::string_view algorithm) {
  SolveResult r;
  r.algorithm = std::string(algorithm);
  r.rounded.metrics.ee = kNegInf;
  return r;
}

std::function<SolveResult(const AntennaSet&)> subset_evaluator(const ChannelMatrix& h,
                                                                const SystemParams& params,
                                                                const QosConstraints& qos,
                                                                const SelectionOptions& opts) {
  return [&h, params, qos, opts](const AntennaSet& chi) {
    try {
      const EigenChannels lam = eigen_channels(select_rows(h, chi));
      return run_inner_solver(opts.solver, lam, params, qos, chi.size(), opts.cfg,
                              OracleConfig{});
    } catch (const InfeasibleError&) {
    } catch (const NonPositivePowerError&) {
    } catch (const IterationLimitError&) {
    }
    return failed_result(to_string(opts.solver));
  };
}

}  // namespace

std::string_view to_string(InnerSolver s) {
  switch (s) {
    case InnerSolver::kDmCvx: return "dm_cvx";
    case InnerSolver::kJeapa: return "jeapa";
    case InnerSolver::kMooLc: return "moo_lc";
    case InnerSolver::kOracle: return "oracle";
  }
  return "unknown";
}

InnerSolver parse_inner_solver(std::string_view name) {
  if (name == "dm_cvx") return InnerSolver::kDmCvx;
  if (name == "jeapa") return InnerSolver::kJeapa;
  if (name == "moo_lc") return InnerSolver::kMooLc;
  if (name == "oracle") return InnerSolver::kOracle;
  throw InvalidArgument("unknown solver '" + std::string(name) + "'");
}

SolveResult run_inner_solver(InnerSolver solver, const EigenChannels& lam,
                             const SystemParams& params, const QosConstraints& qos,
                             int n_active, const SolverConfig& cfg, const OracleConfig& ocfg) {
  switch (solver) {
    case InnerSolver::kDmCvx: return solve_dinkelbach(lam, params, qos, n_active, cfg);
    case InnerSolver::kJeapa: return solve_jeapa(lam, params, qos, n_active, cfg);
    case InnerSolver::kMooLc: return solve_moo_lc(lam, params, qos, n_active, cfg);
    case InnerSolver::kOracle: return oracle_fixed_set(lam, params, qos, n_active, ocfg);
  }
  throw InvalidArgument("unknown solver");
}

SelectionOutcome reduce_subsets(const std::vector<AntennaSet>& subsets, int n_rx,
                                const std::function<SolveResult(const AntennaSet&)>& evaluate,
                                std::string strategy, std::string inner_solver) {
  if (subsets.empty()) throw InvalidArgument("no antenna subsets to evaluate");
  SelectionOutcome out;
  out.strategy = std::move(strategy);
  out.inner_solver = std::move(inner_solver);
  out.per_n_table.resize(static_cast<size_t>(n_rx));
  for (int n = 1; n <= n_rx; ++n) {
    auto& row = out.per_n_table[static_cast<size_t>(n - 1)];
    row.n = n;
    row.ee = kNegInf;
  }
  std::vector<bool> seen(static_cast<size_t>(n_rx), false);
  double best_ee = kNegInf;
  bool have_best = false;
  for (const AntennaSet& chi : subsets) {
    SolveResult r = evaluate(chi);
    ++out.evaluations;
    const bool ok = r.feasible;
    const double ee = ok ? r.rounded.metrics.ee : kNegInf;
    auto& row = out.per_n_table.at(static_cast<size_t>(chi.size() - 1));
    if (!seen[static_cast<size_t>(chi.size() - 1)] || ee > row.ee) {
      seen[static_cast<size_t>(chi.size() - 1)] = true;
      row.antennas = chi;
      row.ee = ee;
      row.feasible = ok;
      row.rate = ok ? r.rounded.metrics.rate : 0.0;
      row.energy = ok ? r.rounded.metrics.energy : 0.0;
      row.power = ok ? r.rounded.metrics.total_power : 0.0;
    }
    const bool better = ok && (!out.feasible || ee > best_ee ||
                               (ee == best_ee && chi.size() < out.best_set.size()));
    if (!have_best || better) {
      have_best = true;
      out.feasible = out.feasible || ok;
      best_ee = ee;
      out.best_set = chi;
      out.best_result = std::move(r);
    }
  }
  std::erase_if(out.per_n_table,
                [&](const SelectionRow& row) { return !seen[static_cast<size_t>(row.n - 1)]; });
  return out;
}

SelectionOutcome select_exhaustive(const ChannelMatrix& h, const SystemParams& params,
                                   const QosConstraints& qos, const SelectionOptions& opts) {
  if (h.n_rx() > opts.max_exhaustive_antennas) {
    throw InvalidArgument("exhaustive selection refused: " + std::to_string(h.n_rx()) +
                          " receive antennas exceed the cap of " +
                          std::to_string(opts.max_exhaustive_antennas));
  }
  return reduce_subsets(all_subsets(h.n_rx()), h.n_rx(),
                        subset_evaluator(h, params, qos, opts), "exhaustive",
                        std::string(to_string(opts.solver)));
}

SelectionOutcome select_frobenius(const ChannelMatrix& h, const SystemParams& params,
                                  const QosConstraints& qos, const SelectionOptions& opts) {
  const auto norms = frobenius_row_norms(h);
  std::vector<int> order(norms.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return norms[static_cast<size_t>(a)] > norms[static_cast<size_t>(b)];
  });
  std::vector<AntennaSet> prefixes;
  for (size_t n = 1; n <= order.size(); ++n) {
    std::vector<int> idx(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(n));
    std::sort(idx.begin(), idx.end());
    prefixes.emplace_back(std::move(idx));
  }
  return reduce_subsets(prefixes, h.n_rx(), subset_evaluator(h, params, qos, opts),
                        "frobenius", std::string(to_string(opts.solver)));
}

SelectionScores selection_scores(const ChannelMatrix& h_chi, double varpi,
                                 double transmit_power, double eta) {
  const ComplexMatrix gram = h_chi.entries() * h_chi.entries().adjoint();
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(gram, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw DecompositionError("Gram eigendecomposition failed");
  const Eigen::VectorXd mu = es.eigenvalues();
  const double top = std::max(mu.maxCoeff(), 0.0);

  SelectionScores s;
  s.scalarization_weight = varpi;
  s.frob_scores = frobenius_row_norms(h_chi);
  s.trace_score = gram.trace().real();
  s.det_score = 1.0;
  const double per_antenna = transmit_power / static_cast<double>(h_chi.n_tx());
  double logdet = 0.0;
  for (Eigen::Index i = 0; i < mu.size(); ++i) {
    const double m = mu[i] <= 1e-12 * std::max(top, 1.0) ? 0.0 : mu[i];
    s.det_score *= m;
    logdet += std::log2(1.0 + per_antenna * m);
  }
  s.weighted_score = logdet + varpi * eta * per_antenna * s.trace_score;
  return s;
}

void write_selection_csv(const SelectionOutcome& outcome, std::ostream& os) {
  os << "N,antenna_set,ee,rate,energy,power,feasible\n";
  for (const auto& row : outcome.per_n_table) {
    os << row.n << ',' << row.antennas.to_string() << ',' << format_number(row.ee) << ','
       << format_number(row.rate) << ',' << format_number(row.energy) << ','
       << format_number(row.power) << ',' << (row.feasible ? 1 : 0) << '\n';
  }
}

}  // namespace swipt
