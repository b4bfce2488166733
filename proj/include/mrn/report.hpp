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

#ifndef MRN_REPORT_HPP
#define MRN_REPORT_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

namespace mrn {

/// Shortest-round-trip-safe decimal form (%.17g); "inf"/"-inf" for infinities.
std::string format_number(double x);
double parse_number(std::string_view cell);

/// A result table serialized as UTF-8 CSV with a leading "# <json>" line.
///
/// Cells are kept as text so that parse -> serialize is byte-exact.
struct ResultTable {
  std::string name;  // file stem; not serialized
  nlohmann::json meta = nlohmann::json::object();
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void add_row(std::vector<std::string> cells);
  void add_numeric_row(const std::vector<double>& values);
  double number(std::size_t row, std::string_view column) const;
  std::size_t column_index(std::string_view column) const;
};

std::string to_csv(const ResultTable& table);
/// Throws std::runtime_error on malformed input.
ResultTable parse_csv(std::string_view text);

struct PlotSeries {
  std::string label;
  std::vector<std::pair<double, double>> points;
};

struct PlotSpec {
  std::string name;  // file stem
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<PlotSeries> series;
};

/// Self-contained SVG line plot (no external dependencies).
std::string render_svg(const PlotSpec& plot);

}  // namespace mrn

#endif  // MRN_REPORT_HPP
