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

#include "mrn/asymptotics.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace mrn {

namespace {

// E[sqrt(X)] for X ~ Gamma(n, 1).
double gamma_mean_sqrt(int n) { return std::exp(std::lgamma(n + 0.5) - std::lgamma(static_cast<double>(n))); }

void require_positive_c(std::span<const double> c) {
  for (double v : c)
    if (!(v > 0.0)) throw std::invalid_argument("tradeoff curve: spectral efficiency must be > 0");
}

}  // namespace

ThetaConstants theta_constants(int shape, const PathLossModel& pathloss) {
  if (shape < 1) throw std::invalid_argument("theta_constants: shape must be >= 1");
  pathloss.validate();
  ThetaConstants th;
  th.shape = shape;
  const double ms = gamma_mean_sqrt(shape);
  th.theta1 = pathloss.mean_sqrt_e() * pathloss.mean_sqrt_f() * ms * ms;
  th.theta3 = pathloss.mean_sqrt_f() * ms;
  th.theta2_finite = shape >= 2;
  th.theta2 = th.theta2_finite ? pathloss.mean_f() * pathloss.mean_inv_e() * shape / (shape - 1.0)
                               : std::numeric_limits<double>::infinity();
  return th;
}

int gamma_shape(Scheme scheme, SnrRegime regime, int L, int M, int N) {
  switch (scheme) {
    case Scheme::MF:
      return N;
    case Scheme::ZF:
      return N - L * M + 1;
    case Scheme::LMMSE:
      return regime == SnrRegime::Low ? N : N - L * M + 1;
    default:
      throw std::invalid_argument("gamma_shape: not a relay scheme");
  }
}

BetaHint auto_beta_hint(const NetworkConfig& cfg) {
  BetaHint hint;
  hint.regime = cfg.snr() / cfg.alpha < 1.0 ? SnrRegime::Low : SnrRegime::High;
  if (hint.regime == SnrRegime::High && is_relay_scheme(cfg.scheme)) {
    const int shape = gamma_shape(cfg.scheme, hint.regime, cfg.L, cfg.M, cfg.N);
    if (shape >= 2) hint.theta2 = theta_constants(shape, cfg.pathloss).theta2;
  }
  return hint;
}

std::vector<double> lowsnr_tradeoff_curve(std::span<const double> c, int K, int L, int M, double theta1) {
  require_positive_c(c);
  if (K < 1) throw std::invalid_argument("lowsnr_tradeoff_curve: K must be >= 1");
  const double lm = static_cast<double>(L) * M;
  std::vector<double> out;
  out.reserve(c.size());
  for (double x : c) {
    const double num = lm * lm * lm * std::expm1(2.0 * x / lm * std::numbers::ln2);
    out.push_back(std::sqrt(num / (theta1 * theta1 * K)) / x);
  }
  return out;
}

std::vector<double> highsnr_tradeoff_curve(std::span<const double> c, int K, int L, int M, double theta2,
                                           double theta3, double alpha) {
  require_positive_c(c);
  if (!std::isfinite(theta2)) throw std::invalid_argument("highsnr_tradeoff_curve: theta2 is infinite");
  if (!(alpha > 0.0 && alpha <= 1.0)) throw std::invalid_argument("highsnr_tradeoff_curve: alpha outside (0, 1]");
  const double lm = static_cast<double>(L) * M;
  const double gap = std::sqrt(theta2) + std::sqrt(lm);
  const double scale = gap * gap / (K * theta3 * theta3);
  std::vector<double> out;
  out.reserve(c.size());
  for (double x : c) {
    const double e = 2.0 * x / (alpha * lm);
    out.push_back(std::exp2(e) / e * scale);
  }
  return out;
}

std::vector<double> cutset_tradeoff_curve(std::span<const double> c, int K, int L, int M, int N, double mean_e) {
  require_positive_c(c);
  const double lm = static_cast<double>(L) * M;
  std::vector<double> out;
  out.reserve(c.size());
  for (double x : c) out.push_back(std::expm1(2.0 * x / lm * std::numbers::ln2) / (2.0 * x) * lm / (K * N * mean_e));
  return out;
}

CutsetFigures cutset_figures(int K, int L, int M, int N, double mean_e) {
  const double lm = static_cast<double>(L) * M;
  const double kne = static_cast<double>(K) * N * mean_e;
  return {std::numbers::ln2 / kne, lm, lm / (2.0 * kne), lm / 2.0};
}

double lowsnr_stationary_root(double tol) {
  // g(x) = x - 2(1 - e^{-x}) is negative on (0, x*) and positive beyond.
  double lo = 0.5, hi = 3.0;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (mid - 2.0 * (1.0 - std::exp(-mid)) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

LowSnrOptimum lowsnr_optimum_closed_form() {
  const double x = lowsnr_stationary_root();
  const double ln2 = std::numbers::ln2;
  return {x / (2.0 * ln2), std::expm1(x) * 4.0 * ln2 * ln2 / (x * x)};
}

LowSnrOptimum lowsnr_optimum_numeric(int K, int L, int M, double theta1) {
  const double lm = static_cast<double>(L) * M;
  auto f = [&](double c) {
    const double v[1] = {c};
    return lowsnr_tradeoff_curve(v, K, L, M, theta1)[0];
  };
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = 0.05 * lm, b = 5.0 * lm;
  double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > 1e-11 * lm) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - phi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + phi * (b - a);
      f2 = f(x2);
    }
  }
  const double c_star = 0.5 * (a + b);
  const double fmin = f(c_star);
  return {c_star / lm, fmin * fmin * theta1 * theta1 * K / lm};
}

double predicted_sir(SnrRegime regime, Scheme scheme, int K, int L, int M, double snr, const ThetaConstants& th) {
  if (!is_relay_scheme(scheme)) throw std::invalid_argument("predicted_sir: not a relay scheme");
  const double lm = static_cast<double>(L) * M;
  if (regime == SnrRegime::Low) return snr * snr * K * th.theta1 * th.theta1 / (lm * lm * lm);
  if (scheme == Scheme::MF)
    throw std::invalid_argument("predicted_sir: MF is interference-limited at high SNR (no deterministic limit)");
  if (!th.theta2_finite) throw std::invalid_argument("predicted_sir: theta2 is infinite for Gamma shape 1");
  const double gap = std::sqrt(th.theta2) + std::sqrt(lm);
  return 2.0 * K * snr / lm * th.theta3 * th.theta3 / (gap * gap);
}

}  // namespace mrn
