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

#ifndef MRN_EXPERIMENTS_HPP
#define MRN_EXPERIMENTS_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "mrn/config.hpp"
#include "mrn/report.hpp"

namespace mrn {

nlohmann::json config_to_json(const NetworkConfig& cfg);
/// Missing keys keep their NetworkConfig defaults; throws on unknown keys.
NetworkConfig config_from_json(const nlohmann::json& j);

/// Everything a named experiment needs. `base` supplies K, L, M, N, the SNR,
/// beta, path loss, trial count and seed; the lists select the curves.
struct ExperimentOptions {
  NetworkConfig base;
  std::vector<int> K_list;
  std::vector<Scheme> schemes;
  std::vector<double> alphas;
  std::vector<std::pair<int, int>> antenna_pairs;  // (M, N)
  double snr_min_db = -20.0;
  double snr_max_db = 40.0;
  double snr_step_db = 2.0;
  bool normalized = false;
  double fixed_c = 0.2;  // bursty: C at which Eb/N0 is compared; antennas: see defaults
};

/// Full-scale defaults for "sir-cdf", "tradeoff", "bursty" and "antennas".
ExperimentOptions default_options(std::string_view experiment, bool normalized = false);

nlohmann::json options_to_json(const ExperimentOptions& opts);
ExperimentOptions options_from_json(const nlohmann::json& j);

/// SNR grid in dB, min + i*step for i = 0, 1, ... while <= max.
std::vector<double> snr_grid_db(double min_db, double max_db, double step_db);

struct ExperimentResult {
  std::string id;
  nlohmann::json options;
  std::vector<ResultTable> tables;
  std::vector<PlotSpec> plots;
  std::vector<std::string> summary;
  std::vector<std::string> warnings;
  bool ok = true;  // false when a summary claim did not hold
  double wall_seconds = 0.0;

  const ResultTable& table(std::string_view name) const;
};

ExperimentResult run_sir_cdf(const ExperimentOptions& opts);
ExperimentResult run_tradeoff(const ExperimentOptions& opts);
ExperimentResult run_bursty(const ExperimentOptions& opts);
ExperimentResult run_antennas(const ExperimentOptions& opts);
/// Dispatches on the experiment id; throws std::invalid_argument for unknown ids.
ExperimentResult run_experiment(std::string_view id, const ExperimentOptions& opts);

enum class OutputFormat { Csv, Svg, Both };
OutputFormat parse_output_format(std::string_view s);

/// Writes <dir>/<id>_<table>.csv and/or <dir>/<id>_<plot>.svg; returns the paths.
std::vector<std::filesystem::path> write_result(const ExperimentResult& result, const std::filesystem::path& dir,
                                                OutputFormat format);

}  // namespace mrn

#endif  // MRN_EXPERIMENTS_HPP
