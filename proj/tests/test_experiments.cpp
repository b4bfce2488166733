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

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "mrn/experiments.hpp"

using namespace mrn;
namespace fs = std::filesystem;

namespace {

ExperimentOptions quick(const char* id, std::int64_t trials = 100) {
  ExperimentOptions o = default_options(id);
  o.base.trials = trials;
  o.snr_min_db = -10.0;
  o.snr_max_db = 40.0;
  o.snr_step_db = 10.0;
  return o;
}

std::string slurp(const fs::path& p) {
  std::ifstream is(p, std::ios::binary);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

std::size_t count_prefix(const ExperimentResult& r, std::string_view prefix) {
  std::size_t n = 0;
  for (const auto& t : r.tables) n += t.name.rfind(prefix, 0) == 0;
  return n;
}

fs::path scratch(const char* name) {
  const fs::path p = fs::temp_directory_path() / "mrnsim_tests" / name;
  fs::remove_all(p);
  return p;
}

}  // namespace

TEST_CASE("options and configs round-trip through JSON") {
  ExperimentOptions o = default_options("antennas");
  o.base.beta = 0.3;
  o.base.pathloss = PathLossModel::uniform(0.5, 2.0, 0.25, 1.0);
  o.base.seed = 123456789012345ULL;
  const auto j = options_to_json(o);
  CHECK(options_to_json(options_from_json(j)) == j);
  CHECK(options_to_json(options_from_json(nlohmann::json::parse(j.dump()))) == j);
  CHECK_THROWS_AS(config_from_json({{"K", 3}, {"bogus", 1}}), std::invalid_argument);
  CHECK(config_from_json({{"K", 3}}).K == 3);
}

TEST_CASE("SNR grid") {
  const auto g = snr_grid_db(-20.0, 40.0, 2.0);
  CHECK(g.size() == 31);
  CHECK(g.front() == -20.0);
  CHECK(g.back() == 40.0);
  CHECK_THROWS(snr_grid_db(0.0, 10.0, 0.0));
}

TEST_CASE("sir-cdf defaults give five relay curves and the direct baseline") {
  ExperimentOptions o = default_options("sir-cdf");
  o.base.trials = 200;
  const auto r = run_sir_cdf(o);
  CHECK(count_prefix(r, "cdf_") == 6);
  CHECK(r.plots.at(0).series.size() == 6);
  CHECK(!r.table("cdf_K4").rows.empty());
  CHECK(r.table("summary").rows.size() == 6);
}

TEST_CASE("normalized sir-cdf tightens with K") {
  ExperimentOptions o = default_options("sir-cdf", true);
  o.base.trials = 500;
  const auto r = run_sir_cdf(o);
  CHECK(count_prefix(r, "cdf_") == 2);
  const auto& s = r.table("summary");
  CHECK(s.number(1, "iqr_db") < s.number(0, "iqr_db"));
  CHECK(r.ok);
}

TEST_CASE("identical seeds give identical bytes, and headers re-run the experiment") {
  ExperimentOptions o = default_options("sir-cdf");
  o.base.trials = 10;
  o.base.seed = 7;
  const auto a = write_result(run_experiment("sir-cdf", o), scratch("a"), OutputFormat::Both);
  const auto b = write_result(run_experiment("sir-cdf", o), scratch("b"), OutputFormat::Both);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(slurp(a[i]) == slurp(b[i]));

  const ResultTable t = parse_csv(slurp(a.front()));
  const ExperimentOptions again = options_from_json(t.meta.at("options"));
  const auto rerun = run_experiment(t.meta.at("experiment").get<std::string>(), again);
  CHECK(to_csv(rerun.table(t.meta.at("table").get<std::string>())) == slurp(a.front()));
}

TEST_CASE("every written CSV round-trips") {
  const auto files = write_result(run_tradeoff(quick("tradeoff")), scratch("rt"), OutputFormat::Csv);
  CHECK(files.size() == 7);
  for (const auto& f : files) {
    const std::string text = slurp(f);
    CHECK(to_csv(parse_csv(text)) == text);
  }
}

TEST_CASE("tradeoff tables, figures and dominance") {
  const auto r = run_tradeoff(quick("tradeoff", 300));
  for (const char* s : {"CUTSET", "MF", "ZF", "LMMSE", "DIRECT"}) {
    const auto& t = r.table(s);
    CHECK(t.columns == std::vector<std::string>{"snr_db", "C", "ebn0_db", "stderr", "redraws"});
    CHECK(t.rows.size() == 6);
  }
  const auto& f = r.table("figures");
  for (std::size_t i = 0; i < f.rows.size(); ++i)
    if (f.rows[i][0] == "MF") CHECK(f.rows[i][7] == "1");
  const auto& d = r.table("dominance");
  CHECK(d.rows.size() == 4 * 6);
  for (const auto& row : d.rows) CHECK(row[4] == "1");

  ExperimentOptions empty = quick("tradeoff");
  empty.schemes.clear();
  CHECK_THROWS_AS(run_tradeoff(empty), std::invalid_argument);
}

TEST_CASE("bursty with alpha = 1 reproduces the plain ZF curve") {
  ExperimentOptions b = quick("bursty");
  b.alphas = {1.0, 0.3};
  ExperimentOptions t = quick("tradeoff");
  t.schemes = {Scheme::ZF};
  const auto br = run_bursty(b);
  CHECK(br.table("alpha_1").rows == run_tradeoff(t).table("ZF").rows);
  CHECK(count_prefix(br, "alpha_") == 2);

  b.alphas = {0.5, 1.5};
  CHECK_THROWS_AS(run_bursty(b), std::invalid_argument);
  b.alphas = {0.0};
  CHECK_THROWS_AS(run_bursty(b), std::invalid_argument);
}

TEST_CASE("bursty overlay appears when theta2 is finite") {
  ExperimentOptions b = quick("bursty", 200);
  b.alphas = {0.5};
  b.base.N = 4;
  const auto r = run_bursty(b);
  CHECK(r.table("overlay_alpha_0.5").rows.size() == 6);
  b.base.N = 2;
  const auto r2 = run_bursty(b);
  CHECK_THROWS(r2.table("overlay_alpha_0.5"));
}

TEST_CASE("antenna pairs") {
  ExperimentOptions a = quick("antennas");
  a.antenna_pairs = {{1, 2}};
  const auto r = run_antennas(a);
  CHECK(count_prefix(r, "M") == 1);
  a.antenna_pairs = {{2, 3}};
  CHECK_THROWS_AS(run_antennas(a), std::invalid_argument);
}

TEST_CASE("unknown experiment and format") {
  CHECK_THROWS_AS(run_experiment("nope", {}), std::invalid_argument);
  CHECK_THROWS_AS(default_options("nope"), std::invalid_argument);
  CHECK_THROWS_AS(parse_output_format("png"), std::invalid_argument);
}
