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

#ifndef MRN_STATS_HPP
#define MRN_STATS_HPP

#include <functional>
#include <span>
#include <vector>

namespace mrn::stats {

/// Pairwise summation; the result depends only on the order of `values`.
double pairwise_sum(std::span<const double> values);

struct MeanEstimate {
  double mean = 0.0;
  double std_error = 0.0;  // standard error of the mean
};

MeanEstimate mean_with_stderr(std::span<const double> values);

/// Linear-interpolated quantile of an unsorted sample, q in [0, 1].
double quantile(std::vector<double> values, double q);
double median(std::vector<double> values);

/// Empirical CDF as (sorted value, i/n) pairs.
std::vector<std::pair<double, double>> empirical_cdf(std::vector<double> values);

double normal_cdf(double x, double mean, double stddev);
/// Regularized lower incomplete gamma P(n, x) for integer n >= 1.
double gamma_cdf(double x, int shape_n);

struct KsResult {
  double statistic = 0.0;  // sup |F_n - F|
  double critical = 0.0;   // asymptotic critical value at the requested level
  bool pass = false;
};

/// One-sample Kolmogorov-Smirnov test. Supported levels: 0.10, 0.05, 0.01, 0.001.
KsResult ks_test(std::vector<double> sample, const std::function<double(double)>& cdf,
                 double significance = 0.01);

/// Ordinary least squares y = slope*x + intercept.
struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
};
LineFit fit_line(std::span<const double> x, std::span<const double> y);

}  // namespace mrn::stats

#endif  // MRN_STATS_HPP
