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

#include "mrn/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <Eigen/Dense>

#include "mrn/stats.hpp"

namespace mrn {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_curve(std::span<const CurvePoint> curve) {
  if (curve.size() < 4) throw std::invalid_argument("extract_figures: need at least 4 points");
  for (std::size_t i = 0; i < curve.size(); ++i) {
    if (!(curve[i].snr > 0.0) || !std::isfinite(curve[i].c))
      throw std::invalid_argument("extract_figures: SNR must be > 0 and C finite");
    if (i > 0 && !(curve[i].snr > curve[i - 1].snr))
      throw std::invalid_argument("extract_figures: curve must be sorted by increasing SNR");
  }
  if (curve.back().snr / curve.front().snr < 100.0)
    throw std::invalid_argument("extract_figures: curve must span at least two SNR decades");
}

// Minimum of SNR/C over the grid, refined by a parabola in (ln SNR, ln Eb/N0).
void fill_ebn0_min(std::span<const CurvePoint> curve, TradeoffFigures& out) {
  std::size_t best = curve.size();
  double best_val = kInf;
  for (std::size_t i = 0; i < curve.size(); ++i) {
    if (curve[i].c <= 0.0) continue;
    const double e = curve[i].snr / curve[i].c;
    if (e < best_val) {
      best_val = e;
      best = i;
    }
  }
  if (best == curve.size()) {
    out.ebn0_min = kInf;
    out.c_at_ebn0_min = 0.0;
    return;
  }
  out.ebn0_min = best_val;
  out.c_at_ebn0_min = curve[best].c;
  if (best == 0 || best + 1 == curve.size() || curve[best - 1].c <= 0.0) return;

  double x[3], y[3];
  for (int d = 0; d < 3; ++d) {
    const CurvePoint& p = curve[best - 1 + d];
    x[d] = std::log(p.snr);
    y[d] = std::log(p.snr / p.c);
  }
  // Lagrange parabola through the three points.
  const double d01 = (y[1] - y[0]) / (x[1] - x[0]);
  const double d12 = (y[2] - y[1]) / (x[2] - x[1]);
  const double a = (d12 - d01) / (x[2] - x[0]);
  if (!(a > 0.0)) return;
  const double b = d01 - a * (x[0] + x[1]);
  const double xv = -b / (2.0 * a);
  if (xv < x[0] || xv > x[2]) return;
  const double yv = y[0] + (xv - x[0]) * (d01 + a * (xv - x[1]));
  if (std::exp(yv) < out.ebn0_min) {
    out.ebn0_min = std::exp(yv);
    out.c_at_ebn0_min = std::exp(xv) / out.ebn0_min;
  }
}

double wideband_slope(double c1, double c2) {
  if (!(c1 > 0.0)) return 0.0;
  if (!(c2 < 0.0)) return kInf;
  return 2.0 * c1 * c1 / (-c2);
}

// C(s)/s in nats fitted by a + b s + c s^2 on the lowest points: C' = a, C'' = 2b.
double fitted_s0(std::span<const CurvePoint> curve) {
  const std::size_t n = std::min<std::size_t>(curve.size(), 6);
  const int degree = n >= 4 ? 2 : 1;
  Eigen::MatrixXd X(n, degree + 1);
  Eigen::VectorXd y(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double s = curve[i].snr;
    for (int d = 0; d <= degree; ++d) X(i, d) = std::pow(s, d);
    y(i) = curve[i].c * std::numbers::ln2 / s;
  }
  const Eigen::VectorXd coef = X.colPivHouseholderQr().solve(y);
  return wideband_slope(coef(0), 2.0 * coef(1));
}

void fill_high_snr(std::span<const CurvePoint> curve, TradeoffFigures& out) {
  const double cutoff = curve.back().snr / 10.0 * (1.0 - 1e-12);
  std::vector<double> x, y;
  for (const CurvePoint& p : curve) {
    if (p.snr >= cutoff) {
      x.push_back(std::log2(p.snr));
      y.push_back(p.c);
    }
  }
  if (x.size() < 2) throw std::invalid_argument("extract_figures: need >= 2 points in the top SNR decade");
  const stats::LineFit fit = stats::fit_line(x, y);
  out.s_inf_raw = fit.slope;
  if (fit.slope < kSaturationSlope) {
    out.saturated = true;
    out.s_inf = 0.0;
    out.ebn0_imp = kInf;
  } else {
    out.s_inf = fit.slope;
    out.ebn0_imp = std::exp2(-fit.intercept / fit.slope);
  }
}

}  // namespace

TradeoffFigures extract_figures(std::span<const CurvePoint> curve) {
  check_curve(curve);
  TradeoffFigures out;
  fill_ebn0_min(curve, out);
  out.s0 = fitted_s0(curve);
  fill_high_snr(curve, out);
  return out;
}

TradeoffFigures extract_figures(const std::function<double(double)>& c_of_snr, double snr_lo, double snr_hi) {
  if (!(snr_lo > 0.0) || !(snr_hi >= 100.0 * snr_lo))
    throw std::invalid_argument("extract_figures: need 0 < snr_lo and snr_hi >= 100 snr_lo");
  std::vector<CurvePoint> grid;
  for (double s = snr_lo; s <= snr_hi * (1.0 + 1e-12); s *= 1.1) grid.push_back({s, c_of_snr(s)});
  if (grid.back().snr < snr_hi * (1.0 - 1e-9)) grid.push_back({snr_hi, c_of_snr(snr_hi)});

  TradeoffFigures out;
  check_curve(grid);
  fill_ebn0_min(grid, out);
  fill_high_snr(grid, out);

  auto nats = [&](double s) { return c_of_snr(s) * std::numbers::ln2; };
  const double s0 = snr_lo;
  double h = 0.1 * s0;
  double prev = kInf;
  for (int iter = 0; iter < 30; ++iter) {
    const double cp = nats(s0 + h), c0 = nats(s0), cm = nats(s0 - h);
    const double est = wideband_slope((cp - cm) / (2.0 * h), (cp - 2.0 * c0 + cm) / (h * h));
    if (std::isfinite(prev) && std::abs(est - prev) <= 0.005 * std::abs(prev)) {
      out.s0 = est;
      return out;
    }
    prev = est;
    out.s0 = est;
    h *= 0.5;
  }
  return out;
}

std::optional<double> snr_at_capacity(std::span<const CurvePoint> curve, double c) {
  for (std::size_t i = 0; i + 1 < curve.size(); ++i) {
    const CurvePoint& a = curve[i];
    const CurvePoint& b = curve[i + 1];
    if ((a.c <= c && c <= b.c) && b.c > a.c) {
      const double t = (c - a.c) / (b.c - a.c);
      const double db = 10.0 * std::log10(a.snr) + t * 10.0 * std::log10(b.snr / a.snr);
      return std::pow(10.0, db / 10.0);
    }
  }
  return std::nullopt;
}

std::optional<double> ebn0_at_capacity(std::span<const CurvePoint> curve, double c) {
  const auto snr = snr_at_capacity(curve, c);
  if (!snr) return std::nullopt;
  return *snr / c;
}

}  // namespace mrn
