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

#ifndef MRN_METRICS_HPP
#define MRN_METRICS_HPP

#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace mrn {

/// Slope below which the top-decade fit is declared saturated (b/s/Hz per 3 dB).
inline constexpr double kSaturationSlope = 0.05;

/// The four power-bandwidth figures of merit of a C(SNR) curve.
///
/// Slopes are in b/s/Hz per 3.01 dB. `s_inf_raw` is the fitted top-decade
/// slope before the saturation rule; when `saturated`, s_inf is 0 and
/// ebn0_imp is +inf.
struct TradeoffFigures {
  double ebn0_min = 0.0;
  double c_at_ebn0_min = 0.0;
  double s0 = 0.0;
  double ebn0_imp = 0.0;
  double s_inf = 0.0;
  double s_inf_raw = 0.0;
  bool saturated = false;
};

struct CurvePoint {
  double snr = 0.0;  // linear
  double c = 0.0;    // b/s/Hz
};

/// Extracts the figures from sampled points (sorted by SNR, at least 4 points,
/// spanning at least two decades). Throws std::invalid_argument otherwise.
///  - (Eb/N0)_min: smallest SNR/C on the grid, refined by a quadratic in log SNR
///    when the minimum is interior.
///  - S0 = 2 C'^2 / (-C'') from a polynomial fit of C (nats) to the lowest points.
///  - S_inf, (Eb/N0)_imp from a least-squares line C = a log2 SNR + b over the
///    top decade: S_inf = a, (Eb/N0)_imp = 2^{-b/a}.
TradeoffFigures extract_figures(std::span<const CurvePoint> curve);

/// Same figures for a callable C(SNR) in bits, sampled on a geometric grid with
/// ratio 1.1 over [snr_lo, snr_hi]; S0 uses central differences with step
/// halving until the estimate changes by less than 0.5%.
TradeoffFigures extract_figures(const std::function<double(double)>& c_of_snr, double snr_lo, double snr_hi);

/// SNR at which the (monotone) curve reaches spectral efficiency `c`, by linear
/// interpolation of SNR in dB between bracketing points; nullopt if not bracketed.
std::optional<double> snr_at_capacity(std::span<const CurvePoint> curve, double c);

/// Eb/N0 (linear) at spectral efficiency c, i.e. snr_at_capacity / c.
std::optional<double> ebn0_at_capacity(std::span<const CurvePoint> curve, double c);

}  // namespace mrn

#endif  // MRN_METRICS_HPP
