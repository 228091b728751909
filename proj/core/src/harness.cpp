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

#include "swipt/harness.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <limits>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <thread>

#include "swipt/csv.hpp"
#include "swipt/error.hpp"
#include "swipt/jeapa.hpp"
#include "swipt/seeding.hpp"

namespace swipt {

using nlohmann::json;

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// ---------------------------------------------------------------------------
// Config parsing

void reject_unknown(const json& obj, const std::string& where,
                    std::initializer_list<std::string_view> allowed) {
  if (!obj.is_object()) throw ConfigError(where, "expected an object");
  for (const auto& [key, _] : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw ConfigError(where.empty() ? key : where + "." + key, "unknown field");
    }
  }
}

std::string path_of(const std::string& where, const std::string& key) {
  return where.empty() ? key : where + "." + key;
}

double get_number(const json& obj, const std::string& where, const std::string& key,
                  double fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_number()) throw ConfigError(path_of(where, key), "expected a number");
  return v.get<double>();
}

int get_int(const json& obj, const std::string& where, const std::string& key, int fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_number_integer()) throw ConfigError(path_of(where, key), "expected an integer");
  return v.get<int>();
}

template <class Fn>
void with_field(const std::string& field, Fn&& fn) {
  try {
    fn();
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError(field, e.what());
  }
}

SystemParams parse_params(const json& j) {
  reject_unknown(j, "params", {"n_tx", "n_rx", "zeta", "drain_efficiency", "eta", "p_sta",
                               "p_ant_bs", "p_ant", "theta"});
  SystemParams p;
  p.n_tx = get_int(j, "params", "n_tx", p.n_tx);
  p.n_rx = get_int(j, "params", "n_rx", p.n_rx);
  if (j.contains("zeta") && j.contains("drain_efficiency")) {
    throw ConfigError("params.zeta", "give either zeta or drain_efficiency, not both");
  }
  if (j.contains("drain_efficiency")) {
    const double eff = get_number(j, "params", "drain_efficiency", 0.0);
    if (!(eff > 0.0 && eff <= 1.0)) {
      throw ConfigError("params.drain_efficiency", "must lie in (0, 1]");
    }
    p.zeta = 1.0 / eff;
  }
  p.zeta = get_number(j, "params", "zeta", p.zeta);
  p.eta = get_number(j, "params", "eta", p.eta);
  p.p_sta = get_number(j, "params", "p_sta", p.p_sta);
  p.p_ant_bs = get_number(j, "params", "p_ant_bs", p.p_ant_bs);
  p.p_ant = get_number(j, "params", "p_ant", p.p_ant);
  p.theta = get_number(j, "params", "theta", p.theta);
  with_field("params", [&] { p.validate(); });
  return p;
}

QosConstraints parse_qos(const json& j) {
  reject_unknown(j, "qos", {"r_min", "e_min", "p_max"});
  QosConstraints q;
  q.r_min = get_number(j, "qos", "r_min", q.r_min);
  q.e_min = get_number(j, "qos", "e_min", q.e_min);
  q.p_max = get_number(j, "qos", "p_max", q.p_max);
  with_field("qos", [&] { q.validate(); });
  return q;
}

SolverConfig parse_solver(const json& j) {
  reject_unknown(j, "solver_cfg", {"delta", "max_outer", "max_inner", "step0", "kkt_tol"});
  SolverConfig c;
  c.delta = get_number(j, "solver_cfg", "delta", c.delta);
  c.max_outer = get_int(j, "solver_cfg", "max_outer", c.max_outer);
  c.max_inner = get_int(j, "solver_cfg", "max_inner", c.max_inner);
  c.step0 = get_number(j, "solver_cfg", "step0", c.step0);
  c.kkt_tol = get_number(j, "solver_cfg", "kkt_tol", c.kkt_tol);
  with_field("solver_cfg", [&] { c.validate(); });
  return c;
}

OracleConfig parse_oracle(const json& j) {
  reject_unknown(j, "oracle", {"power_grid_steps", "max_channels", "max_antennas"});
  OracleConfig o;
  o.power_grid_steps = get_int(j, "oracle", "power_grid_steps", o.power_grid_steps);
  o.max_channels = get_int(j, "oracle", "max_channels", o.max_channels);
  o.max_antennas = get_int(j, "oracle", "max_antennas", o.max_antennas);
  with_field("oracle", [&] { o.validate(); });
  return o;
}

std::vector<std::string> string_list(const json& j, const std::string& field) {
  if (j.is_string()) return {j.get<std::string>()};
  if (!j.is_array() || j.empty()) {
    throw ConfigError(field, "expected a string or a non-empty list of strings");
  }
  std::vector<std::string> out;
  for (const auto& v : j) {
    if (!v.is_string()) throw ConfigError(field, "expected strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

size_t line_of(std::string_view text, size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

// ---------------------------------------------------------------------------
// Trial evaluation

struct Point {
  SystemParams params;
  QosConstraints qos;
  std::optional<int> n_size;
  std::optional<double> value;
};

std::vector<Point> sweep_points(const RunConfig& c) {
  if (!c.sweep) return {{c.params, c.qos, std::nullopt, std::nullopt}};
  std::vector<Point> out;
  for (double v : c.sweep->values) {
    Point p{c.params, c.qos, std::nullopt, v};
    const std::string& var = c.sweep->variable;
    if (var == "p_max") p.qos.p_max = v;
    else if (var == "r_min") p.qos.r_min = v;
    else if (var == "e_min") p.qos.e_min = v;
    else if (var == "p_sta") p.params.p_sta = v;
    else p.n_size = static_cast<int>(v);
    out.push_back(p);
  }
  return out;
}

std::vector<AntennaSet> subsets_of_size(int n_rx, int n) {
  std::vector<AntennaSet> out;
  std::vector<int> idx(static_cast<size_t>(n));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    out.emplace_back(idx);
    int k = n - 1;
    while (k >= 0 && idx[static_cast<size_t>(k)] == n_rx - n + k) --k;
    if (k < 0) break;
    ++idx[static_cast<size_t>(k)];
    for (int j = k + 1; j < n; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
  }
  return out;
}

AntennaSet frobenius_prefix(const ChannelMatrix& h, int n) {
  const auto norms = frobenius_row_norms(h);
  std::vector<int> order(norms.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return norms[static_cast<size_t>(a)] > norms[static_cast<size_t>(b)];
  });
  std::vector<int> idx(order.begin(), order.begin() + n);
  std::sort(idx.begin(), idx.end());
  return AntennaSet(std::move(idx));
}

std::string describe(const std::exception& e) {
  if (auto* inf = dynamic_cast<const InfeasibleError*>(&e)) {
    std::string s = "infeasible:" + inf->constraint();
    if (!inf->phase().empty()) s += "@" + inf->phase();
    return s;
  }
  if (dynamic_cast<const IterationLimitError*>(&e)) return "iteration_limit";
  if (dynamic_cast<const NonPositivePowerError*>(&e)) return "nonpositive_power";
  return "error";
}

struct Evaluation {
  std::optional<SolveResult> result;
  AntennaSet set;
  std::string status = "ok";
};

Evaluation evaluate_on_set(const ChannelMatrix& h, const AntennaSet& chi, InnerSolver algo,
                           const Point& pt, const RunConfig& c) {
  Evaluation ev;
  ev.set = chi;
  try {
    const EigenChannels lam = eigen_channels(select_rows(h, chi));
    ev.result = run_inner_solver(algo, lam, pt.params, pt.qos, chi.size(), c.solver_cfg, c.oracle);
    if (!ev.result->feasible) ev.status = "infeasible:rounding";
  } catch (const Error& e) {
    ev.status = describe(e);
  }
  return ev;
}

Evaluation evaluate(const ChannelMatrix& h, InnerSolver algo, Selection sel, const Point& pt,
                    const RunConfig& c) {
  if (sel == Selection::kFixedFull && !pt.n_size) {
    return evaluate_on_set(h, AntennaSet::all(h.n_rx()), algo, pt, c);
  }
  if (sel != Selection::kExhaustive && pt.n_size) {
    return evaluate_on_set(h, frobenius_prefix(h, *pt.n_size), algo, pt, c);
  }
  SelectionOptions opts;
  opts.solver = algo;
  opts.cfg = c.solver_cfg;
  SelectionOutcome out;
  if (pt.n_size) {
    out = reduce_subsets(
        subsets_of_size(h.n_rx(), *pt.n_size), h.n_rx(),
        [&](const AntennaSet& chi) {
          Evaluation e = evaluate_on_set(h, chi, algo, pt, c);
          if (e.result) return *e.result;
          SolveResult r;
          r.rounded.metrics.ee = -std::numeric_limits<double>::infinity();
          return r;
        },
        "exhaustive", std::string(to_string(algo)));
  } else if (sel == Selection::kExhaustive) {
    out = select_exhaustive(h, pt.params, pt.qos, opts);
  } else {
    out = select_frobenius(h, pt.params, pt.qos, opts);
  }
  Evaluation ev;
  ev.set = out.best_set;
  if (out.feasible) {
    ev.result = std::move(out.best_result);
  } else {
    ev.status = "infeasible:all_subsets";
  }
  return ev;
}

TrialRecord make_record(int trial, InnerSolver algo, Selection sel, const Point& pt,
                        const Evaluation& ev, int draws) {
  TrialRecord r;
  r.trial = trial;
  r.algorithm = std::string(to_string(algo));
  r.selection = std::string(to_string(sel));
  r.sweep_value = pt.value;
  r.n_active = ev.set.size();
  r.antenna_set = ev.set.to_string();
  r.channel_draws = draws;
  r.status = ev.status;
  if (!ev.result) {
    r.ee_rounded = r.rate = r.energy = r.power = kNaN;
    return r;
  }
  const SolveResult& s = *ev.result;
  if (s.relaxed) r.ee_relaxed = s.relaxed->metrics.ee;
  r.ee_rounded = s.rounded.metrics.ee;
  r.rate = s.rounded.metrics.rate;
  r.energy = s.rounded.metrics.energy;
  r.power = s.rounded.metrics.total_power;
  r.feasible = s.feasible;
  r.outer_iters = s.outer_iterations;
  r.inner_iters = s.inner_iterations;
  return r;
}

std::vector<TrialRecord> run_trial(const RunConfig& c, int trial, bool timing) {
  std::vector<TrialRecord> out;
  const TrialChannel tc = trial_channel(c, trial);
  for (const Point& pt : sweep_points(c)) {
    for (InnerSolver algo : c.algorithms) {
      for (Selection sel : c.selection) {
        const auto t0 = std::chrono::steady_clock::now();
        Evaluation ev = evaluate(tc.h, algo, sel, pt, c);
        TrialRecord rec = make_record(trial, algo, sel, pt, ev, tc.draws);
        if (timing) {
          rec.runtime_ms = std::chrono::duration<double, std::milli>(
                               std::chrono::steady_clock::now() - t0)
                               .count();
        }
        out.push_back(std::move(rec));
      }
    }
  }
  return out;
}

// Runs fn(trial) for every trial on `workers` threads; results land in trial
// order.
template <class T>
std::vector<T> for_each_trial(int trials, int workers, const std::function<T(int)>& fn) {
  std::vector<T> results(static_cast<size_t>(trials));
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto work = [&] {
    for (int t = next++; t < trials; t = next++) {
      try {
        results[static_cast<size_t>(t)] = fn(t);
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const int n = std::max(1, std::min(workers, trials));
  std::vector<std::thread> pool;
  for (int i = 1; i < n; ++i) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return results;
}

std::string csv_optional(const std::optional<double>& v) {
  return v ? format_number(*v) : std::string();
}

}  // namespace

std::string_view to_string(Selection s) {
  switch (s) {
    case Selection::kFixedFull: return "fixed_full";
    case Selection::kExhaustive: return "exhaustive";
    case Selection::kFrobenius: return "frobenius";
  }
  return "unknown";
}

Selection parse_selection(std::string_view name) {
  if (name == "fixed_full") return Selection::kFixedFull;
  if (name == "exhaustive") return Selection::kExhaustive;
  if (name == "frobenius") return Selection::kFrobenius;
  throw InvalidArgument("unknown selection '" + std::string(name) + "'");
}

void RunConfig::validate() const {
  with_field("params", [&] { params.validate(); });
  with_field("qos", [&] { qos.validate(); });
  with_field("solver_cfg", [&] { solver_cfg.validate(); });
  with_field("oracle", [&] { oracle.validate(); });
  if (trials < 1) throw ConfigError("trials", "must be >= 1");
  if (algorithms.empty()) throw ConfigError("algorithms", "must not be empty");
  if (selection.empty()) throw ConfigError("selection", "must not be empty");
  if (max_channel_draws < 1) throw ConfigError("max_channel_draws", "must be >= 1");
  if (sweep) {
    static const std::vector<std::string> vars = {"p_max", "r_min", "e_min", "p_sta",
                                                  "n_active"};
    if (std::find(vars.begin(), vars.end(), sweep->variable) == vars.end()) {
      throw ConfigError("sweep.variable", "unknown sweep variable '" + sweep->variable + "'");
    }
    if (sweep->values.empty()) throw ConfigError("sweep.values", "must not be empty");
    for (size_t i = 1; i < sweep->values.size(); ++i) {
      if (!(sweep->values[i] > sweep->values[i - 1])) {
        throw ConfigError("sweep.values", "must be strictly increasing");
      }
    }
    for (double v : sweep->values) {
      Point p{params, qos, std::nullopt, v};
      const auto& var = sweep->variable;
      if (var == "n_active") {
        if (v != std::floor(v) || v < 1 || v > params.n_rx) {
          throw ConfigError("sweep.values", "n_active values must be integers in [1, n_rx]");
        }
        continue;
      }
      if (var == "p_max") p.qos.p_max = v;
      if (var == "r_min") p.qos.r_min = v;
      if (var == "e_min") p.qos.e_min = v;
      if (var == "p_sta") p.params.p_sta = v;
      with_field("sweep.values", [&] {
        p.qos.validate();
        p.params.validate();
      });
    }
  }
}

RunConfig parse_run_config(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ConfigError("", "JSON syntax error at line " + std::to_string(line_of(text, e.byte)) +
                              ": " + e.what());
  }
  reject_unknown(j, "", {"params", "qos", "trials", "master_seed", "algorithms", "selection",
                         "sweep", "solver_cfg", "oracle_check", "oracle", "max_channel_draws"});
  RunConfig c;
  if (j.contains("params")) c.params = parse_params(j.at("params"));
  if (j.contains("qos")) c.qos = parse_qos(j.at("qos"));
  c.trials = get_int(j, "", "trials", c.trials);
  if (j.contains("master_seed")) {
    const json& s = j.at("master_seed");
    if (!s.is_number_unsigned()) {
      throw ConfigError("master_seed", "expected a non-negative integer");
    }
    c.master_seed = s.get<std::uint64_t>();
  }
  if (j.contains("algorithms")) {
    c.algorithms.clear();
    for (const auto& name : string_list(j.at("algorithms"), "algorithms")) {
      with_field("algorithms", [&] { c.algorithms.push_back(parse_inner_solver(name)); });
    }
  }
  if (j.contains("selection")) {
    c.selection.clear();
    for (const auto& name : string_list(j.at("selection"), "selection")) {
      with_field("selection", [&] { c.selection.push_back(parse_selection(name)); });
    }
  }
  if (j.contains("sweep") && !j.at("sweep").is_null()) {
    const json& s = j.at("sweep");
    reject_unknown(s, "sweep", {"variable", "values"});
    if (!s.contains("variable") || !s.at("variable").is_string()) {
      throw ConfigError("sweep.variable", "expected a string");
    }
    if (!s.contains("values") || !s.at("values").is_array()) {
      throw ConfigError("sweep.values", "expected a list of numbers");
    }
    SweepAxis axis;
    axis.variable = s.at("variable").get<std::string>();
    for (const auto& v : s.at("values")) {
      if (!v.is_number()) throw ConfigError("sweep.values", "expected numbers");
      axis.values.push_back(v.get<double>());
    }
    c.sweep = std::move(axis);
  }
  if (j.contains("solver_cfg")) c.solver_cfg = parse_solver(j.at("solver_cfg"));
  if (j.contains("oracle_check")) {
    if (!j.at("oracle_check").is_boolean()) throw ConfigError("oracle_check", "expected a boolean");
    c.oracle_check = j.at("oracle_check").get<bool>();
  }
  if (j.contains("oracle")) c.oracle = parse_oracle(j.at("oracle"));
  c.max_channel_draws = get_int(j, "", "max_channel_draws", c.max_channel_draws);
  c.validate();
  return c;
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("", "cannot open config file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_run_config(ss.str());
}

int resolve_workers(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("SWIPT_WORKERS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

TrialChannel trial_channel(const RunConfig& c, int trial) {
  if (trial < 0 || trial >= c.trials) throw InvalidArgument("trial index out of range");
  const std::uint64_t seed_t = derive_seed(c.master_seed, static_cast<std::uint64_t>(trial));
  for (int attempt = 0; attempt < c.max_channel_draws; ++attempt) {
    const std::uint64_t seed =
        attempt == 0 ? seed_t : derive_seed(seed_t, static_cast<std::uint64_t>(attempt));
    ChannelMatrix h = generate_rayleigh(c.params.n_rx, c.params.n_tx, seed);
    if (power_model_margin(eigen_channels(h), c.params) > 0.0) return {std::move(h), attempt + 1};
  }
  throw NonPositivePowerError("no channel draw of trial " + std::to_string(trial) +
                              " keeps zeta - eta * lambda_max positive within " +
                              std::to_string(c.max_channel_draws) + " draws");
}

std::vector<TrialRecord> run(const RunConfig& config, const RunOptions& opts) {
  config.validate();
  const auto per_trial = for_each_trial<std::vector<TrialRecord>>(
      config.trials, resolve_workers(opts.workers),
      [&](int t) { return run_trial(config, t, opts.timing); });
  std::vector<TrialRecord> out;
  for (const auto& v : per_trial) out.insert(out.end(), v.begin(), v.end());
  return out;
}

void write_records_csv(const std::vector<TrialRecord>& records, std::ostream& os, bool timing) {
  os << "trial,algorithm,selection,sweep_value,n_active,antenna_set,ee_relaxed,ee_rounded,"
        "rate,energy,power,feasible,outer_iters,inner_iters,channel_draws,status";
  if (timing) os << ",runtime_ms";
  os << '\n';
  for (const auto& r : records) {
    os << r.trial << ',' << r.algorithm << ',' << r.selection << ',' << csv_optional(r.sweep_value)
       << ',' << r.n_active << ',' << r.antenna_set << ',' << csv_optional(r.ee_relaxed) << ','
       << format_number(r.ee_rounded) << ',' << format_number(r.rate) << ','
       << format_number(r.energy) << ',' << format_number(r.power) << ',' << (r.feasible ? 1 : 0)
       << ',' << r.outer_iters << ',' << r.inner_iters << ',' << r.channel_draws << ','
       << r.status;
    if (timing) os << ',' << format_number(r.runtime_ms);
    os << '\n';
  }
}

namespace {

struct Scheme {
  std::string name;
  double ee = kNaN;
  std::optional<double> relaxed;
};

Scheme no_eh_baseline(const ChannelMatrix& h, const Point& pt, const RunConfig& c) {
  Scheme s{"no_eh", kNaN, std::nullopt};
  const AntennaSet chi = pt.n_size ? frobenius_prefix(h, *pt.n_size) : AntennaSet::all(h.n_rx());
  try {
    const EigenChannels lam = eigen_channels(select_rows(h, chi));
    QosConstraints q = pt.qos;
    q.e_min = 0.0;
    const std::vector<double> ones(static_cast<size_t>(lam.count()), 1.0);
    Allocation best;
    try {
      best = power_allocation(ones, lam, pt.params, q, chi.size(), c.solver_cfg).alloc;
    } catch (const IterationLimitError& e) {
      best = Allocation(ones, e.best_iterate());
    }
    if (check_feasible(best, lam, pt.params, q).feasible) {
      s.ee = evaluate_metrics(best, lam, pt.params, chi.size()).ee;
    }
  } catch (const Error&) {
  }
  return s;
}

Scheme min_power_baseline(const ChannelMatrix& h, const Point& pt) {
  Scheme s{"min_power", kNaN, std::nullopt};
  const AntennaSet chi = pt.n_size ? frobenius_prefix(h, *pt.n_size) : AntennaSet::all(h.n_rx());
  try {
    const EigenChannels lam = eigen_channels(select_rows(h, chi));
    if (auto a = cheapest_binary_allocation(lam, pt.params, pt.qos)) {
      s.ee = evaluate_metrics(*a, lam, pt.params, chi.size()).ee;
    }
  } catch (const Error&) {
  }
  return s;
}

std::vector<ComparisonRow> compare_trial(const RunConfig& c, int trial) {
  const TrialChannel tc = trial_channel(c, trial);
  std::vector<ComparisonRow> rows;
  for (const Point& pt : sweep_points(c)) {
    std::vector<Scheme> schemes;
    for (InnerSolver algo : c.algorithms) {
      for (Selection sel : c.selection) {
        const Evaluation ev = evaluate(tc.h, algo, sel, pt, c);
        Scheme s{std::string(to_string(algo)) + "/" + std::string(to_string(sel)), kNaN,
                 std::nullopt};
        if (ev.result && ev.result->feasible) s.ee = ev.result->rounded.metrics.ee;
        if (ev.result && ev.result->relaxed) s.relaxed = ev.result->relaxed->metrics.ee;
        schemes.push_back(std::move(s));
      }
    }
    schemes.push_back(no_eh_baseline(tc.h, pt, c));
    schemes.push_back(min_power_baseline(tc.h, pt));
    for (size_t a = 0; a < schemes.size(); ++a) {
      for (size_t b = a + 1; b < schemes.size(); ++b) {
        rows.push_back({trial, pt.value, schemes[a].name, schemes[b].name, schemes[a].ee,
                        schemes[b].ee, schemes[a].relaxed, schemes[b].relaxed});
      }
    }
  }
  return rows;
}

}  // namespace

std::vector<ComparisonRow> compare(const RunConfig& config, const RunOptions& opts) {
  config.validate();
  if (config.algorithms.size() < 2 && config.selection.size() < 2) {
    throw ConfigError("algorithms", "compare needs at least two algorithms or two selections");
  }
  const auto per_trial = for_each_trial<std::vector<ComparisonRow>>(
      config.trials, resolve_workers(opts.workers),
      [&](int t) { return compare_trial(config, t); });
  std::vector<ComparisonRow> out;
  for (const auto& v : per_trial) out.insert(out.end(), v.begin(), v.end());
  return out;
}

void write_comparison_csv(const std::vector<ComparisonRow>& rows, std::ostream& os) {
  os << "trial,sweep_value,scheme_a,scheme_b,ee_a,ee_b,delta,rel_gap,relaxed_a,relaxed_b,"
        "relaxed_rel_gap\n";
  auto rel = [](double a, double b) {
    const double m = std::max(std::abs(a), std::abs(b));
    return m > 0.0 ? std::abs(a - b) / m : 0.0;
  };
  for (const auto& r : rows) {
    const std::string rgap =
        r.relaxed_a && r.relaxed_b ? format_number(rel(*r.relaxed_a, *r.relaxed_b)) : "";
    os << r.trial << ',' << csv_optional(r.sweep_value) << ',' << r.scheme_a << ','
       << r.scheme_b << ',' << format_number(r.ee_a) << ',' << format_number(r.ee_b) << ','
       << format_number(r.ee_a - r.ee_b) << ',' << format_number(rel(r.ee_a, r.ee_b)) << ','
       << csv_optional(r.relaxed_a) << ',' << csv_optional(r.relaxed_b) << ','
       << rgap << '\n';
  }
}

SolveResult trace(const RunConfig& config, int trial, InnerSolver algorithm) {
  config.validate();
  const TrialChannel tc = trial_channel(config, trial);
  const Point pt = sweep_points(config).front();
  Evaluation ev = evaluate(tc.h, algorithm, config.selection.front(), pt, config);
  if (!ev.result) {
    throw InfeasibleError(ev.status, "trial " + std::to_string(trial) + " has no solution (" +
                                         ev.status + ")");
  }
  return std::move(*ev.result);
}

OracleCheckReport oracle_check(const RunConfig& config, const RunOptions& opts) {
  config.validate();
  if (config.params.n_rx > config.oracle.max_antennas ||
      std::min(config.params.n_rx, config.params.n_tx) > config.oracle.max_channels) {
    throw ConfigError("params", "oracle-check needs n_rx <= oracle.max_antennas and "
                                "min(n_rx, n_tx) <= oracle.max_channels");
  }
  const auto per_trial = for_each_trial<OracleCheckReport>(
      config.trials, resolve_workers(opts.workers), [&](int t) {
        OracleCheckReport rep;
        const TrialChannel tc = trial_channel(config, t);
        const AntennaSet chi = AntennaSet::all(tc.h.n_rx());
        const EigenChannels lam = eigen_channels(tc.h);
        for (const Point& pt : sweep_points(config)) {
          const SolveResult oracle =
              oracle_fixed_set(lam, pt.params, pt.qos, chi.size(), config.oracle);
          const std::string where =
              "trial " + std::to_string(t) +
              (pt.value ? " sweep " + format_number(*pt.value) : std::string());
          if (!oracle.feasible) {
            rep.lines.push_back(where + ": oracle found no feasible grid point");
            continue;
          }
          const double ref = oracle.rounded.metrics.ee;
          for (InnerSolver algo : config.algorithms) {
            if (algo == InnerSolver::kOracle) continue;
            const Evaluation ev = evaluate_on_set(tc.h, chi, algo, pt, config);
            const std::string tag = where + " " + std::string(to_string(algo));
            if (!ev.result) {
              rep.lines.push_back(tag + ": solver failed (" + ev.status + ")");
              ++rep.checks;
              ++rep.violations;
              continue;
            }
            const SolveResult& r = *ev.result;
            if (r.relaxed) {
              const double relaxed = r.relaxed->metrics.ee;
              ++rep.checks;
              const bool upper = relaxed >= ref - 1e-3;
              if (!upper) ++rep.violations;
              ++rep.checks;
              const bool order = !r.feasible || r.rounded.metrics.ee <= relaxed + 1e-6;
              if (!order) ++rep.violations;
              rep.lines.push_back(tag + ": relaxed " + format_number(relaxed) + " oracle " +
                                  format_number(ref) + " rounded " +
                                  format_number(r.rounded.metrics.ee) +
                                  (upper ? "" : " [relaxed below oracle]") +
                                  (order ? "" : " [rounded above relaxed]"));
            } else {
              rep.lines.push_back(tag + ": rounded " + format_number(r.rounded.metrics.ee) +
                                  " oracle " + format_number(ref) + " gap " +
                                  format_number(ref - r.rounded.metrics.ee));
            }
          }
        }
        return rep;
      });
  OracleCheckReport out;
  for (const auto& r : per_trial) {
    out.checks += r.checks;
    out.violations += r.violations;
    out.lines.insert(out.lines.end(), r.lines.begin(), r.lines.end());
  }
  return out;
}

}  // namespace swipt
