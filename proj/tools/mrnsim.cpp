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

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mrn/channel.hpp"
#include "mrn/experiments.hpp"
#include "mrn/parallel.hpp"
#include "mrn/report.hpp"
#include "mrn/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerifyFailed = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raw flag values; unset flags leave the experiment defaults alone.
struct Flags {
  std::vector<int> K;
  std::optional<int> L, M, N;
  std::optional<double> snr_db, beta, snr_min, snr_max, snr_step, fixed_c, e_db, f_db;
  std::vector<std::string> schemes;
  std::vector<double> alphas;
  std::vector<std::string> pairs;
  std::vector<double> uniform_pathloss;
  std::optional<std::int64_t> trials;
  std::optional<std::uint64_t> seed;
  std::string config_file;
  std::string out;
  std::string format = "csv";
  bool normalized = false;
  unsigned threads = 0;
};

void add_network_flags(CLI::App* app, Flags& f) {
  app->add_option("--K", f.K, "relay count; a comma-separated list for sir-cdf")->delimiter(',');
  app->add_option("--L", f.L, "source-destination pairs");
  app->add_option("--M", f.M, "antennas per source/destination");
  app->add_option("--N", f.N, "antennas per relay");
  app->add_option("--snr-db", f.snr_db, "network SNR in dB (sir-cdf)");
  app->add_option("--beta", f.beta, "relay-to-source power ratio (default: automatic)");
  app->add_option("--trials", f.trials, "Monte Carlo trials per point (default 10000)");
  app->add_option("--seed", f.seed, "master seed");
  app->add_option("--e-db", f.e_db, "constant first-hop path-loss factor in dB");
  app->add_option("--f-db", f.f_db, "constant second-hop path-loss factor in dB");
  app->add_option("--uniform-pathloss", f.uniform_pathloss, "E_min,E_max,F_min,F_max (linear)")
      ->delimiter(',')
      ->expected(4);
  app->add_option("--threads", f.threads, "worker threads (0 = all cores)");
}

void add_output_flags(CLI::App* app, Flags& f) {
  app->add_option("--config", f.config_file, "JSON options file (as embedded in result headers)");
  app->add_option("--out", f.out, "output directory (default $MRNSIM_OUT or ./results)");
  app->add_option("--format", f.format, "csv, svg or both")->check(CLI::IsMember({"csv", "svg", "both"}));
}

void add_sweep_flags(CLI::App* app, Flags& f) {
  app->add_option("--snr-min", f.snr_min, "first SNR of the sweep in dB (default -20)");
  app->add_option("--snr-max", f.snr_max, "last SNR of the sweep in dB (default 40)");
  app->add_option("--snr-step", f.snr_step, "sweep step in dB (default 2)");
}

int single(const std::vector<int>& v, const char* flag) {
  if (v.size() != 1) throw UsageError(std::string(flag) + " takes a single value for this command");
  return v.front();
}

mrn::ExperimentOptions build_options(const std::string& cmd, const Flags& f) {
  mrn::ExperimentOptions o = mrn::default_options(cmd, f.normalized);
  if (!f.config_file.empty()) {
    std::ifstream is(f.config_file);
    if (!is) throw UsageError("cannot read config file " + f.config_file);
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(is);
    } catch (const nlohmann::json::exception& e) {
      throw UsageError(std::string("config file: ") + e.what());
    }
    o = mrn::options_from_json(j.contains("options") ? j["options"] : j);
  }
  mrn::NetworkConfig& b = o.base;
  if (!f.K.empty()) {
    if (cmd == "sir-cdf")
      o.K_list = f.K;
    else
      b.K = single(f.K, "--K");
  }
  if (f.L) b.L = *f.L;
  if (f.M) b.M = *f.M;
  if (f.N) b.N = *f.N;
  if (f.snr_db) b.snr_db = *f.snr_db;
  if (f.beta) b.beta = *f.beta;
  if (f.trials) b.trials = *f.trials;
  if (f.seed) b.seed = *f.seed;
  if (f.e_db || f.f_db) b.pathloss = mrn::PathLossModel::constant(f.e_db.value_or(0.0), f.f_db.value_or(0.0));
  if (!f.uniform_pathloss.empty()) {
    const auto& u = f.uniform_pathloss;
    b.pathloss = mrn::PathLossModel::uniform(u[0], u[1], u[2], u[3]);
  }
  if (!f.schemes.empty()) {
    if (cmd == "tradeoff") {
      o.schemes.clear();
      for (const auto& s : f.schemes) o.schemes.push_back(mrn::parse_scheme(s));
    } else {
      if (f.schemes.size() != 1) throw UsageError("--scheme takes a single value for this command");
      b.scheme = mrn::parse_scheme(f.schemes.front());
    }
  }
  if (!f.alphas.empty()) {
    if (cmd == "bursty")
      o.alphas = f.alphas;
    else if (f.alphas.size() == 1)
      b.alpha = f.alphas.front();
    else
      throw UsageError("--alpha takes a single value for this command");
  }
  if (!f.pairs.empty()) {
    o.antenna_pairs.clear();
    for (const auto& p : f.pairs) {
      int m = 0, n = 0;
      char x = 0, extra = 0;
      if (std::sscanf(p.c_str(), "%d%c%d%c", &m, &x, &n, &extra) != 3 || (x != 'x' && x != 'X'))
        throw UsageError("--pairs expects MxN items, got '" + p + "'");
      o.antenna_pairs.emplace_back(m, n);
    }
  }
  if (f.snr_min) o.snr_min_db = *f.snr_min;
  if (f.snr_max) o.snr_max_db = *f.snr_max;
  if (f.snr_step) o.snr_step_db = *f.snr_step;
  if (f.fixed_c) o.fixed_c = *f.fixed_c;
  if (f.normalized) o.normalized = true;
  return o;
}

std::string output_dir(const Flags& f) {
  if (!f.out.empty()) return f.out;
  if (const char* env = std::getenv("MRNSIM_OUT"); env && *env) return env;
  return "results";
}

int run_experiment_command(const std::string& cmd, const Flags& f) {
  const mrn::ExperimentOptions opts = build_options(cmd, f);
  const mrn::ExperimentResult r = mrn::run_experiment(cmd, opts);
  const auto files = mrn::write_result(r, output_dir(f), mrn::parse_output_format(f.format));
  std::printf("%s: %zu file(s) in %.1f s\n", r.id.c_str(), files.size(), r.wall_seconds);
  for (const auto& p : files) std::printf("  %s\n", p.string().c_str());
  for (const auto& s : r.summary) std::printf("  %s\n", s.c_str());
  for (const auto& w : r.warnings) std::printf("  warning: %s\n", w.c_str());
  return kExitOk;
}

int run_verify_command(const Flags& f, const std::vector<std::string>& checks, double scale) {
  mrn::VerifyOptions o;
  o.scale = scale;
  o.only = checks;
  if (f.seed) o.seed = *f.seed;
  const auto results = mrn::run_verify(o);
  int failed = 0;
  mrn::ResultTable t;
  t.name = "report";
  t.meta = {{"experiment", "verify"}, {"seed", o.seed}, {"scale", o.scale}};
  t.columns = {"check", "pass"};
  for (const auto& r : results) {
    std::printf("%s %-17s %s (%.1f s)\n", r.pass ? "PASS" : "FAIL", r.id.c_str(), r.detail.c_str(), r.seconds);
    t.add_row({r.id, r.pass ? "1" : "0"});
    t.meta["measured"][r.id] = r.measured;
    if (!r.pass) ++failed;
  }
  std::printf("%zu check(s), %d failed\n", results.size(), failed);
  if (!f.out.empty()) {
    mrn::ExperimentResult er;
    er.id = "verify";
    er.tables.push_back(std::move(t));
    mrn::write_result(er, f.out, mrn::OutputFormat::Csv);
  }
  return failed ? kExitVerifyFailed : kExitOk;
}

int run_dump_command(const Flags& f, std::uint64_t trial, bool text) {
  mrn::ExperimentOptions o = build_options("tradeoff", f);
  o.base.validate();
  mrn::RandomStream stream(o.base.seed, trial);
  const mrn::ChannelRealization real = mrn::draw_realization(o.base, stream);
  const auto fmt = text ? mrn::DumpFormat::Text : mrn::DumpFormat::Binary;
  if (f.out.empty() || f.out == "-") {
    mrn::write_realization(std::cout, real, fmt);
  } else {
    std::ofstream os(f.out, std::ios::binary);
    if (!os) throw std::runtime_error("cannot write " + f.out);
    mrn::write_realization(os, real, fmt);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mrnsim: power-bandwidth tradeoff simulator for dense multi-antenna relay networks"};
  app.require_subcommand(1);
  Flags f;

  auto* cdf = app.add_subcommand("sir-cdf", "per-stream SIR CDFs versus K (default trials 10000)");
  add_network_flags(cdf, f);
  add_output_flags(cdf, f);
  cdf->add_option("--scheme", f.schemes, "relay scheme (default ZF)");
  cdf->add_flag("--normalized", f.normalized, "divide each curve by its median (default K list 1,64)");

  auto* trade = app.add_subcommand("tradeoff", "C versus Eb/N0 for each scheme (default trials 10000)");
  add_network_flags(trade, f);
  add_output_flags(trade, f);
  add_sweep_flags(trade, f);
  trade->add_option("--scheme,--schemes", f.schemes, "schemes (default CUTSET,MF,ZF,LMMSE,DIRECT)")->delimiter(',');
  trade->add_option("--alpha", f.alphas, "duty cycle");

  auto* bursty = app.add_subcommand("bursty", "bursty signaling curves (default trials 10000)");
  add_network_flags(bursty, f);
  add_output_flags(bursty, f);
  add_sweep_flags(bursty, f);
  bursty->add_option("--scheme", f.schemes, "relay scheme (default ZF)");
  bursty->add_option("--alpha,--alphas", f.alphas, "duty cycles (default 0.02,0.1,0.5,1)")->delimiter(',');
  bursty->add_option("--fixed-c", f.fixed_c, "spectral efficiency for the Eb/N0 comparison (default 0.2)");

  auto* ant = app.add_subcommand("antennas", "L-MMSE curves for several (M, N) (default trials 10000)");
  add_network_flags(ant, f);
  add_output_flags(ant, f);
  add_sweep_flags(ant, f);
  ant->add_option("--scheme", f.schemes, "relay scheme (default LMMSE)");
  ant->add_option("--pairs", f.pairs, "MxN pairs (default 1x2,1x4,2x4)")->delimiter(',');
  ant->add_option("--fixed-c", f.fixed_c, "spectral efficiency for the Eb/N0 comparison (default 2)");

  std::vector<std::string> checks;
  double scale = 1.0;
  auto* verify = app.add_subcommand("verify", "run the verification battery; exit code 2 on failure");
  verify->add_option("--check", checks, "checks to run (default all)")->delimiter(',');
  verify->add_option("--scale", scale, "trial-count multiplier (default 1)")->check(CLI::PositiveNumber);
  verify->add_option("--seed", f.seed, "master seed");
  verify->add_option("--threads", f.threads, "worker threads (0 = all cores)");
  verify->add_option("--out", f.out, "also write the report as CSV into this directory");

  std::uint64_t trial = 0;
  bool text = false;
  auto* dump = app.add_subcommand("dump-channel", "write one channel realization (binary or text)");
  add_network_flags(dump, f);
  dump->add_option("--trial", trial, "trial index");
  dump->add_flag("--text", text, "text instead of binary");
  dump->add_option("--out", f.out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    mrn::set_worker_count(f.threads);
    if (verify->parsed()) {
      for (const auto& c : checks)
        if (std::find(mrn::check_ids().begin(), mrn::check_ids().end(), c) == mrn::check_ids().end())
          throw UsageError("unknown check '" + c + "'");
      return run_verify_command(f, checks, scale);
    }
    if (dump->parsed()) return run_dump_command(f, trial, text);
    for (auto* sub : {cdf, trade, bursty, ant})
      if (sub->parsed()) return run_experiment_command(sub->get_name(), f);
  } catch (const UsageError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
  return kExitUsage;
}
