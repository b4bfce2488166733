// SPDX-License-Identifier: Apache-2.0
//
// mrnsim: power-bandwidth tradeoff simulator for dense multi-antenna relay networks
// Copyright (C) 2026 The mrnsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "mrn/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "mrn/asymptotics.hpp"
#include "mrn/link.hpp"
#include "mrn/metrics.hpp"
#include "mrn/stats.hpp"

namespace mrn {

using nlohmann::json;

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr std::size_t kMaxPlotPoints = 400;

json pathloss_to_json(const PathLossModel& p) {
  if (p.kind == PathLossModel::Kind::Constant) return {{"kind", "constant"}, {"e_db", p.e_db}, {"f_db", p.f_db}};
  return {{"kind", "uniform"}, {"e_min", p.e_min}, {"e_max", p.e_max}, {"f_min", p.f_min}, {"f_max", p.f_max}};
}

PathLossModel pathloss_from_json(const json& j) {
  const std::string kind = j.value("kind", "constant");
  if (kind == "constant") return PathLossModel::constant(j.value("e_db", 0.0), j.value("f_db", 0.0));
  if (kind == "uniform")
    return PathLossModel::uniform(j.at("e_min").get<double>(), j.at("e_max").get<double>(),
                                  j.at("f_min").get<double>(), j.at("f_max").get<double>());
  throw std::invalid_argument("unknown path-loss kind '" + kind + "'");
}

void reject_unknown_keys(const json& j, std::initializer_list<std::string_view> known, std::string_view where) {
  if (!j.is_object()) throw std::invalid_argument(std::string(where) + ": expected a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (std::find(known.begin(), known.end(), key) == known.end())
      throw std::invalid_argument(std::string(where) + ": unknown key '" + key + "'");
  }
}

std::string compact(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", x);
  return buf;
}

std::string fixed(double x, int digits = 2) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

json table_meta(const ExperimentResult& r, std::string_view table, const NetworkConfig* cfg) {
  json m;
  m["experiment"] = r.id;
  m["table"] = table;
  m["seed"] = r.options.at("base").at("seed");
  if (cfg) m["network"] = config_to_json(*cfg);
  m["options"] = r.options;
  return m;
}

std::vector<std::pair<double, double>> thin(const std::vector<std::pair<double, double>>& pts) {
  if (pts.size() <= kMaxPlotPoints) return pts;
  std::vector<std::pair<double, double>> out;
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < kMaxPlotPoints; ++i) out.push_back(pts[i * (n - 1) / (kMaxPlotPoints - 1)]);
  return out;
}

struct Curve {
  std::vector<double> snr_db;
  std::vector<TradeoffPoint> points;

  std::vector<CurvePoint> samples() const {
    std::vector<CurvePoint> out;
    for (const auto& p : points) out.push_back({p.snr, p.spectral_efficiency});
    return out;
  }
};

enum class SweepKind { Plain, Bursty };

Curve sweep(NetworkConfig cfg, const std::vector<double>& grid, SweepKind kind) {
  Curve c;
  for (double x : grid) {
    cfg.snr_db = x;
    c.snr_db.push_back(x);
    c.points.push_back(kind == SweepKind::Bursty ? bursty_spectral_efficiency(cfg) : spectral_efficiency(cfg));
  }
  return c;
}

ResultTable curve_table(const ExperimentResult& r, std::string name, const NetworkConfig& cfg, const Curve& c) {
  ResultTable t;
  t.name = std::move(name);
  t.meta = table_meta(r, t.name, &cfg);
  t.columns = {"snr_db", "C", "ebn0_db", "stderr", "redraws"};
  for (std::size_t i = 0; i < c.points.size(); ++i) {
    const TradeoffPoint& p = c.points[i];
    t.add_numeric_row({c.snr_db[i], p.spectral_efficiency, linear_to_db(p.eb_n0), p.mc_stderr,
                       static_cast<double>(p.redraws)});
  }
  return t;
}

PlotSeries tradeoff_series(std::string label, const Curve& c) {
  PlotSeries s{std::move(label), {}};
  for (const auto& p : c.points) s.points.emplace_back(linear_to_db(p.eb_n0), p.spectral_efficiency);
  return s;
}

std::optional<TradeoffFigures> try_figures(const Curve& c, ExperimentResult& r, std::string_view label) {
  try {
    return extract_figures(c.samples());
  } catch (const std::invalid_argument& e) {
    r.warnings.push_back(std::string(label) + ": figures unavailable (" + e.what() + ")");
    return std::nullopt;
  }
}

ResultTable figures_table(const ExperimentResult& r) {
  ResultTable t;
  t.name = "figures";
  t.meta = table_meta(r, t.name, nullptr);
  t.columns = {"curve", "ebn0_min_db", "c_at_ebn0_min", "s0", "ebn0_imp_db", "s_inf", "s_inf_raw", "saturated"};
  return t;
}

void add_figures_row(ResultTable& t, std::string label, const TradeoffFigures& f) {
  t.add_row({std::move(label), format_number(linear_to_db(f.ebn0_min)), format_number(f.c_at_ebn0_min),
             format_number(f.s0), format_number(linear_to_db(f.ebn0_imp)), format_number(f.s_inf),
             format_number(f.s_inf_raw), f.saturated ? "1" : "0"});
}

void claim(ExperimentResult& r, bool holds, const std::string& text) {
  r.summary.push_back(text + (holds ? " [holds]" : " [does not hold]"));
  if (!holds) r.ok = false;
}

ExperimentResult start(std::string id, const ExperimentOptions& opts) {
  opts.base.validate();
  ExperimentResult r;
  r.id = std::move(id);
  r.options = options_to_json(opts);
  return r;
}

}  // namespace

json config_to_json(const NetworkConfig& cfg) {
  json j;
  j["K"] = cfg.K;
  j["L"] = cfg.L;
  j["M"] = cfg.M;
  j["N"] = cfg.N;
  j["snr_db"] = cfg.snr_db;
  j["beta"] = cfg.beta ? json(*cfg.beta) : json(nullptr);
  j["alpha"] = cfg.alpha;
  j["scheme"] = std::string(to_string(cfg.scheme));
  j["pathloss"] = pathloss_to_json(cfg.pathloss);
  j["trials"] = cfg.trials;
  j["seed"] = cfg.seed;
  return j;
}

NetworkConfig config_from_json(const json& j) {
  reject_unknown_keys(j, {"K", "L", "M", "N", "snr_db", "beta", "alpha", "scheme", "pathloss", "trials", "seed"},
                      "config");
  NetworkConfig cfg;
  cfg.K = j.value("K", cfg.K);
  cfg.L = j.value("L", cfg.L);
  cfg.M = j.value("M", cfg.M);
  cfg.N = j.value("N", cfg.N);
  cfg.snr_db = j.value("snr_db", cfg.snr_db);
  if (j.contains("beta") && !j["beta"].is_null()) cfg.beta = j["beta"].get<double>();
  cfg.alpha = j.value("alpha", cfg.alpha);
  if (j.contains("scheme")) cfg.scheme = parse_scheme(j["scheme"].get<std::string>());
  if (j.contains("pathloss")) cfg.pathloss = pathloss_from_json(j["pathloss"]);
  cfg.trials = j.value("trials", cfg.trials);
  cfg.seed = j.value("seed", cfg.seed);
  return cfg;
}

ExperimentOptions default_options(std::string_view experiment, bool normalized) {
  ExperimentOptions o;
  o.normalized = normalized;
  if (experiment == "sir-cdf") {
    o.base.snr_db = 20.0;
    o.base.scheme = Scheme::ZF;
    o.K_list = normalized ? std::vector<int>{1, 64} : std::vector<int>{1, 2, 4, 8, 16};
  } else if (experiment == "tradeoff") {
    o.schemes = {Scheme::CUTSET, Scheme::MF, Scheme::ZF, Scheme::LMMSE, Scheme::DIRECT};
  } else if (experiment == "bursty") {
    o.base.scheme = Scheme::ZF;
    o.alphas = {0.02, 0.1, 0.5, 1.0};
    o.fixed_c = 0.2;
  } else if (experiment == "antennas") {
    o.base.scheme = Scheme::LMMSE;
    o.antenna_pairs = {{1, 2}, {1, 4}, {2, 4}};
    o.fixed_c = 2.0;
  } else {
    throw std::invalid_argument("unknown experiment '" + std::string(experiment) + "'");
  }
  return o;
}

json options_to_json(const ExperimentOptions& o) {
  json j;
  j["base"] = config_to_json(o.base);
  j["K_list"] = o.K_list;
  json schemes = json::array();
  for (Scheme s : o.schemes) schemes.push_back(std::string(to_string(s)));
  j["schemes"] = schemes;
  j["alphas"] = o.alphas;
  json pairs = json::array();
  for (const auto& [m, n] : o.antenna_pairs) pairs.push_back({m, n});
  j["antenna_pairs"] = pairs;
  j["snr_min_db"] = o.snr_min_db;
  j["snr_max_db"] = o.snr_max_db;
  j["snr_step_db"] = o.snr_step_db;
  j["normalized"] = o.normalized;
  j["fixed_c"] = o.fixed_c;
  return j;
}

ExperimentOptions options_from_json(const json& j) {
  reject_unknown_keys(j, {"base", "K_list", "schemes", "alphas", "antenna_pairs", "snr_min_db", "snr_max_db",
                          "snr_step_db", "normalized", "fixed_c"},
                      "options");
  ExperimentOptions o;
  if (j.contains("base")) o.base = config_from_json(j["base"]);
  if (j.contains("K_list")) o.K_list = j["K_list"].get<std::vector<int>>();
  if (j.contains("schemes"))
    for (const auto& s : j["schemes"]) o.schemes.push_back(parse_scheme(s.get<std::string>()));
  if (j.contains("alphas")) o.alphas = j["alphas"].get<std::vector<double>>();
  if (j.contains("antenna_pairs"))
    for (const auto& p : j["antenna_pairs"]) o.antenna_pairs.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
  o.snr_min_db = j.value("snr_min_db", o.snr_min_db);
  o.snr_max_db = j.value("snr_max_db", o.snr_max_db);
  o.snr_step_db = j.value("snr_step_db", o.snr_step_db);
  o.normalized = j.value("normalized", o.normalized);
  o.fixed_c = j.value("fixed_c", o.fixed_c);
  return o;
}

std::vector<double> snr_grid_db(double min_db, double max_db, double step_db) {
  if (!(step_db > 0.0) || !(max_db >= min_db) || !std::isfinite(min_db) || !std::isfinite(max_db))
    throw std::invalid_argument("SNR grid needs finite min <= max and step > 0");
  const auto n = static_cast<long>(std::floor((max_db - min_db) / step_db + 1e-9)) + 1;
  std::vector<double> grid;
  for (long i = 0; i < n; ++i) grid.push_back(min_db + static_cast<double>(i) * step_db);
  return grid;
}

const ResultTable& ExperimentResult::table(std::string_view name) const {
  for (const auto& t : tables)
    if (t.name == name) return t;
  throw std::out_of_range("no table '" + std::string(name) + "' in experiment " + id);
}

ExperimentResult run_sir_cdf(const ExperimentOptions& opts) {
  if (opts.K_list.empty()) throw std::invalid_argument("sir-cdf: empty K list");
  ExperimentResult r = start("sir-cdf", opts);
  if (!is_relay_scheme(opts.base.scheme)) throw std::invalid_argument("sir-cdf: scheme must be MF, ZF or LMMSE");

  ResultTable summary;
  summary.name = "summary";
  summary.meta = table_meta(r, summary.name, nullptr);
  summary.columns = {"curve", "K", "median_sir_db", "iqr_db"};

  PlotSpec plot{"cdf", opts.normalized ? "CDF of median-normalized per-stream SIR" : "CDF of per-stream SIR",
                opts.normalized ? "SIR / median (dB)" : "SIR (dB)", "cumulative probability", {}};

  struct Stat {
    int K;
    double median, iqr;
  };
  std::vector<Stat> stats_k;

  auto emit = [&](const NetworkConfig& cfg, const std::string& label, const std::string& name) {
    const std::vector<double> sirs = collect_sirs(cfg);
    std::vector<double> db(sirs.size());
    std::transform(sirs.begin(), sirs.end(), db.begin(), linear_to_db);
    const double med = stats::median(db);
    const double iqr = stats::quantile(db, 0.75) - stats::quantile(db, 0.25);
    if (opts.normalized)
      for (double& x : db) x -= med;
    ResultTable t;
    t.name = name;
    t.meta = table_meta(r, name, &cfg);
    t.meta["normalized"] = opts.normalized;
    t.columns = {"sir_db", "cdf"};
    const auto cdf = stats::empirical_cdf(db);
    for (const auto& [x, p] : cdf) t.add_numeric_row({x, p});
    r.tables.push_back(std::move(t));
    plot.series.push_back({label, thin(cdf)});
    summary.add_row({label, std::to_string(cfg.K), format_number(med), format_number(iqr)});
    return Stat{cfg.K, med, iqr};
  };

  for (int K : opts.K_list) {
    NetworkConfig cfg = opts.base;
    cfg.K = K;
    stats_k.push_back(emit(cfg, std::string(to_string(cfg.scheme)) + " K=" + std::to_string(K),
                           "cdf_K" + std::to_string(K)));
  }

  if (!opts.normalized) {
    NetworkConfig cfg = opts.base;
    cfg.scheme = Scheme::DIRECT;
    cfg.K = 0;
    const Stat direct = emit(cfg, "direct", "cdf_direct");
    double min_relay = std::numeric_limits<double>::infinity();
    for (const Stat& s : stats_k) min_relay = std::min(min_relay, s.median);
    claim(r, min_relay - direct.median > 10.0,
          "direct median SIR is " + fixed(min_relay - direct.median) + " dB below the lowest relay median (>10 dB)");
  }

  if (stats_k.size() >= 2) {
    std::vector<double> x, y;
    for (const Stat& s : stats_k) {
      x.push_back(std::log2(static_cast<double>(s.K)));
      y.push_back(s.median);
    }
    const double slope = stats::fit_line(x, y).slope;
    if (!opts.normalized)
      claim(r, std::abs(slope - 3.01) <= 0.5,
            "median SIR grows by " + fixed(slope) + " dB per doubling of K (3.01 +/- 0.5)");
    auto by_k = stats_k;
    std::sort(by_k.begin(), by_k.end(), [](const Stat& a, const Stat& b) { return a.K < b.K; });
    claim(r, by_k.back().iqr < by_k.front().iqr,
          "IQR tightens from " + fixed(by_k.front().iqr) + " dB at K=" + std::to_string(by_k.front().K) + " to " +
              fixed(by_k.back().iqr) + " dB at K=" + std::to_string(by_k.back().K));
  }
  r.tables.push_back(std::move(summary));
  r.plots.push_back(std::move(plot));
  return r;
}

ExperimentResult run_tradeoff(const ExperimentOptions& opts) {
  if (opts.schemes.empty()) throw std::invalid_argument("tradeoff: empty scheme list");
  ExperimentResult r = start("tradeoff", opts);
  const auto grid = snr_grid_db(opts.snr_min_db, opts.snr_max_db, opts.snr_step_db);

  PlotSpec plot{"tradeoff", "Power-bandwidth tradeoff", "Eb/N0 (dB)", "C (b/s/Hz)", {}};
  ResultTable figs = figures_table(r);
  std::vector<std::pair<Scheme, Curve>> curves;
  for (Scheme s : opts.schemes) {
    NetworkConfig cfg = opts.base;
    cfg.scheme = s;
    cfg.validate();
    Curve c = sweep(cfg, grid, SweepKind::Plain);
    const std::string name(to_string(s));
    r.tables.push_back(curve_table(r, name, cfg, c));
    plot.series.push_back(tradeoff_series(name, c));
    if (auto f = try_figures(c, r, name)) {
      add_figures_row(figs, name, *f);
      if (s == Scheme::MF) claim(r, f->saturated, "MF high-SNR slope saturates (fitted " + fixed(f->s_inf_raw, 3) + ")");
      if (s == Scheme::ZF || s == Scheme::LMMSE || s == Scheme::CUTSET) {
        const double target = 0.5 * opts.base.L * opts.base.M;
        r.summary.push_back(name + " fitted high-SNR slope " + fixed(f->s_inf_raw, 3) + " b/s/Hz per 3 dB (LM/2 = " +
                            fixed(target, 1) + ")");
      }
    }
    curves.emplace_back(s, std::move(c));
  }
  r.tables.push_back(std::move(figs));

  const auto cut = std::find_if(curves.begin(), curves.end(), [](const auto& p) { return p.first == Scheme::CUTSET; });
  if (cut != curves.end()) {
    ResultTable dom;
    dom.name = "dominance";
    dom.meta = table_meta(r, dom.name, nullptr);
    dom.columns = {"scheme", "snr_db", "margin", "tolerance", "holds"};
    bool all = true;
    for (const auto& [s, c] : curves) {
      if (s == Scheme::CUTSET) continue;
      for (std::size_t i = 0; i < grid.size(); ++i) {
        const TradeoffPoint& a = cut->second.points[i];
        const TradeoffPoint& b = c.points[i];
        const double margin = a.spectral_efficiency - b.spectral_efficiency;
        const double tol = 3.0 * std::hypot(a.mc_stderr, b.mc_stderr);
        const bool holds = margin > -tol;
        all = all && holds;
        dom.add_row({std::string(to_string(s)), format_number(grid[i]), format_number(margin), format_number(tol),
                     holds ? "1" : "0"});
      }
    }
    claim(r, all, "cut-set curve dominates every scheme at every grid point within 3 stderr");
    r.tables.push_back(std::move(dom));
  }
  r.plots.push_back(std::move(plot));
  return r;
}

ExperimentResult run_bursty(const ExperimentOptions& opts) {
  if (opts.alphas.empty()) throw std::invalid_argument("bursty: empty alpha list");
  for (double a : opts.alphas)
    if (!(a > 0.0 && a <= 1.0)) throw std::invalid_argument("bursty: alpha must lie in (0, 1], got " + compact(a));
  if (!is_relay_scheme(opts.base.scheme)) throw std::invalid_argument("bursty: scheme must be MF, ZF or LMMSE");
  ExperimentResult r = start("bursty", opts);
  const auto grid = snr_grid_db(opts.snr_min_db, opts.snr_max_db, opts.snr_step_db);

  PlotSpec plot{"bursty", "Bursty signaling", "Eb/N0 (dB)", "C (b/s/Hz)", {}};
  ResultTable at_c;
  at_c.name = "ebn0_at_c";
  at_c.meta = table_meta(r, at_c.name, nullptr);
  at_c.meta["C"] = opts.fixed_c;
  at_c.columns = {"alpha", "ebn0_db"};
  ResultTable warn;
  warn.name = "warnings";
  warn.meta = table_meta(r, warn.name, nullptr);
  warn.columns = {"alpha", "snr_db"};

  std::vector<std::pair<double, double>> ebn0_by_alpha;
  for (double a : opts.alphas) {
    NetworkConfig cfg = opts.base;
    cfg.alpha = a;
    Curve c = sweep(cfg, grid, SweepKind::Bursty);
    const std::string label = "alpha=" + compact(a);
    r.tables.push_back(curve_table(r, "alpha_" + compact(a), cfg, c));
    plot.series.push_back(tradeoff_series(label, c));

    std::size_t flagged = 0;
    for (std::size_t i = 0; i < c.points.size(); ++i)
      if (c.points[i].warning) {
        ++flagged;
        warn.add_numeric_row({a, grid[i]});
      }
    if (flagged)
      r.warnings.push_back(label + ": duty cycle exceeds the relays' high-SNR range at " + std::to_string(flagged) +
                           " grid point(s)");

    const auto e = ebn0_at_capacity(c.samples(), opts.fixed_c);
    const double e_db = e ? linear_to_db(*e) : kNaN;
    at_c.add_numeric_row({a, e_db});
    ebn0_by_alpha.emplace_back(a, e_db);

    if (a == 0.5) {
      const int shape = gamma_shape(cfg.scheme, SnrRegime::High, cfg.L, cfg.M, cfg.N);
      if (cfg.scheme == Scheme::MF || shape < 2) {
        r.summary.push_back("alpha=0.5 analytic overlay skipped: theta2 is infinite for Gamma shape " +
                            std::to_string(shape) + " (needs N >= LM + 1 with ZF or L-MMSE)");
      } else {
        const ThetaConstants th = theta_constants(shape, cfg.pathloss);
        std::vector<double> cs;
        for (const auto& p : c.points) cs.push_back(p.spectral_efficiency);
        const auto analytic = highsnr_tradeoff_curve(cs, cfg.K, cfg.L, cfg.M, th.theta2, th.theta3, a);
        ResultTable ov;
        ov.name = "overlay_alpha_0.5";
        ov.meta = table_meta(r, ov.name, &cfg);
        ov.columns = {"C", "ebn0_db_mc", "ebn0_db_analytic", "rel_err"};
        PlotSeries s{"alpha=0.5 analytic", {}};
        for (std::size_t i = 0; i < cs.size(); ++i) {
          const double mc = c.points[i].eb_n0;
          ov.add_numeric_row({cs[i], linear_to_db(mc), linear_to_db(analytic[i]), analytic[i] / mc - 1.0});
          s.points.emplace_back(linear_to_db(analytic[i]), cs[i]);
        }
        const double rel_top = std::abs(analytic.back() / c.points.back().eb_n0 - 1.0);
        r.summary.push_back("alpha=0.5 analytic high-SNR curve differs from Monte Carlo by " + fixed(100 * rel_top, 1) +
                            "% at the top of the sweep");
        r.tables.push_back(std::move(ov));
        plot.series.push_back(std::move(s));
      }
    }
  }

  auto ordered = ebn0_by_alpha;
  std::sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
  bool decreasing = true;
  std::ostringstream os;
  for (std::size_t i = 0; i < ordered.size(); ++i) {
    if (i) os << ", ";
    os << "alpha=" << compact(ordered[i].first) << ": " << fixed(ordered[i].second) << " dB";
    if (i && !(ordered[i].second < ordered[i - 1].second)) decreasing = false;
  }
  claim(r, decreasing,
        "Eb/N0 at C=" + compact(opts.fixed_c) + " decreases strictly with burstiness (" + os.str() + ")");
  r.tables.push_back(std::move(at_c));
  r.tables.push_back(std::move(warn));
  r.plots.push_back(std::move(plot));
  return r;
}

ExperimentResult run_antennas(const ExperimentOptions& opts) {
  if (opts.antenna_pairs.empty()) throw std::invalid_argument("antennas: empty (M, N) list");
  for (const auto& [m, n] : opts.antenna_pairs) {
    NetworkConfig cfg = opts.base;
    cfg.M = m;
    cfg.N = n;
    cfg.validate();
  }
  ExperimentResult r = start("antennas", opts);
  const auto grid = snr_grid_db(opts.snr_min_db, opts.snr_max_db, opts.snr_step_db);

  PlotSpec plot{"antennas", "Antenna configurations", "Eb/N0 (dB)", "C (b/s/Hz)", {}};
  ResultTable figs = figures_table(r);
  ResultTable summary;
  summary.name = "summary";
  summary.meta = table_meta(r, summary.name, nullptr);
  summary.meta["C"] = opts.fixed_c;
  summary.columns = {"M", "N", "ebn0_db_at_c", "s_inf_raw"};

  struct Row {
    int M, N;
    double ebn0_db, s_inf;
  };
  std::vector<Row> rows;
  for (const auto& [m, n] : opts.antenna_pairs) {
    NetworkConfig cfg = opts.base;
    cfg.M = m;
    cfg.N = n;
    Curve c = sweep(cfg, grid, SweepKind::Plain);
    const std::string name = "M" + std::to_string(m) + "_N" + std::to_string(n);
    r.tables.push_back(curve_table(r, name, cfg, c));
    plot.series.push_back(tradeoff_series("M=" + std::to_string(m) + ", N=" + std::to_string(n), c));
    double s_inf = kNaN;
    if (auto f = try_figures(c, r, name)) {
      add_figures_row(figs, name, *f);
      s_inf = f->s_inf_raw;
    }
    const auto e = ebn0_at_capacity(c.samples(), opts.fixed_c);
    rows.push_back({m, n, e ? linear_to_db(*e) : kNaN, s_inf});
    summary.add_numeric_row({static_cast<double>(m), static_cast<double>(n), rows.back().ebn0_db, s_inf});
  }

  for (const Row& a : rows)
    for (const Row& b : rows) {
      if (a.M == b.M && b.N > a.N)
        claim(r, b.ebn0_db < a.ebn0_db,
              "M=" + std::to_string(a.M) + ": N=" + std::to_string(b.N) + " needs " + fixed(a.ebn0_db - b.ebn0_db) +
                  " dB less Eb/N0 than N=" + std::to_string(a.N) + " at C=" + compact(opts.fixed_c));
      if (a.N == b.N && b.M > a.M)
        r.summary.push_back("N=" + std::to_string(a.N) + ": high-SNR slope ratio M=" + std::to_string(b.M) +
                            " vs M=" + std::to_string(a.M) + " is " + fixed(b.s_inf / a.s_inf) + " (expected " +
                            fixed(static_cast<double>(b.M) / a.M) + ")");
    }
  r.tables.push_back(std::move(figs));
  r.tables.push_back(std::move(summary));
  r.plots.push_back(std::move(plot));
  return r;
}

ExperimentResult run_experiment(std::string_view id, const ExperimentOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  ExperimentResult r;
  if (id == "sir-cdf")
    r = run_sir_cdf(opts);
  else if (id == "tradeoff")
    r = run_tradeoff(opts);
  else if (id == "bursty")
    r = run_bursty(opts);
  else if (id == "antennas")
    r = run_antennas(opts);
  else
    throw std::invalid_argument("unknown experiment '" + std::string(id) + "'");
  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

OutputFormat parse_output_format(std::string_view s) {
  if (s == "csv") return OutputFormat::Csv;
  if (s == "svg") return OutputFormat::Svg;
  if (s == "both") return OutputFormat::Both;
  throw std::invalid_argument("format must be csv, svg or both");
}

std::vector<std::filesystem::path> write_result(const ExperimentResult& result, const std::filesystem::path& dir,
                                                OutputFormat format) {
  std::filesystem::create_directories(dir);
  std::vector<std::filesystem::path> written;
  auto write = [&](const std::string& stem, const std::string& ext, const std::string& body) {
    const auto path = dir / (result.id + "_" + stem + ext);
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot write " + path.string());
    os << body;
    if (!os) throw std::runtime_error("write failed for " + path.string());
    written.push_back(path);
  };
  if (format != OutputFormat::Svg)
    for (const auto& t : result.tables) write(t.name, ".csv", to_csv(t));
  if (format != OutputFormat::Csv)
    for (const auto& p : result.plots) write(p.name, ".svg", render_svg(p));
  return written;
}

}  // namespace mrn
