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

#ifndef MRN_ASYMPTOTICS_HPP
#define MRN_ASYMPTOTICS_HPP

#include <span>
#include <vector>

#include "mrn/config.hpp"

namespace mrn {

/// Fading/path-loss expectations governing the large-K tradeoff.
///
/// With X, Y independent unit-scale Gamma(shape) and (E, F) the path-loss factors:
///   theta1 = E[sqrt(E F X Y)]
///   theta2 = E[F X / (E Y)]      (infinite for shape 1)
///   theta3 = E[sqrt(F X)]
/// All three are exact closed forms for both path-loss models since the factors
/// are independent; `error` is kept for interface symmetry and is zero.
struct ThetaConstants {
  double theta1 = 0.0;
  double theta2 = 0.0;
  double theta3 = 0.0;
  int shape = 0;
  bool theta2_finite = false;
  double error = 0.0;
};

ThetaConstants theta_constants(int shape, const PathLossModel& pathloss);

/// Gamma shape of X, Y for a scheme: N for MF and L-MMSE at low SNR,
/// N - LM + 1 for ZF (and for L-MMSE at high SNR).
int gamma_shape(Scheme scheme, SnrRegime regime, int L, int M, int N);

/// Hint for the automatic beta policy of cfg (regime from the in-burst SNR).
BetaHint auto_beta_hint(const NetworkConfig& cfg);

/// Low-SNR limit curve shared by MF, ZF and L-MMSE:
/// Eb/N0 = sqrt(L^3 M^3 (2^{2C/LM} - 1) / (theta1^2 K)) / C.
std::vector<double> lowsnr_tradeoff_curve(std::span<const double> c, int K, int L, int M, double theta1);

/// High-SNR limit for ZF / L-MMSE with duty cycle alpha (alpha = 1 is the
/// continuous case): Eb/N0 = 2^{2C/(alpha LM)} / (2C/(alpha LM)) (sqrt(theta2)+sqrt(LM))^2 / (K theta3^2).
std::vector<double> highsnr_tradeoff_curve(std::span<const double> c, int K, int L, int M, double theta2,
                                           double theta3, double alpha = 1.0);

struct CutsetFigures {
  double ebn0_min = 0.0;  // ln 2 / (K N E[E])
  double s0 = 0.0;        // LM
  double ebn0_imp = 0.0;  // LM / (2 K N E[E])
  double s_inf = 0.0;     // LM / 2
};

/// Large-K cut-set lower bound on Eb/N0: (2^{2C/LM} - 1)/(2C) * LM / (K N E[E]).
std::vector<double> cutset_tradeoff_curve(std::span<const double> c, int K, int L, int M, int N, double mean_e);
CutsetFigures cutset_figures(int K, int L, int M, int N, double mean_e);

/// Root of x = 2 (1 - e^{-x}) on (0, inf) by bisection; x = 2 ln2 C*/LM.
double lowsnr_stationary_root(double tol = 1e-12);

struct LowSnrOptimum {
  double c_star_per_stream = 0.0;  // C*/(LM)
  double constant = 0.0;           // (Eb/N0)_min^2 theta1^2 K / (LM), about 2.97
};

/// C* and the minimum-energy constant from the bisection root.
LowSnrOptimum lowsnr_optimum_closed_form();
/// The same quantities by direct golden-section minimization of the curve.
LowSnrOptimum lowsnr_optimum_numeric(int K, int L, int M, double theta1);

/// Deterministic large-K SIR. Low: SNR^2 K theta1^2 / (L^3 M^3) (any scheme).
/// High: 2 K SNR theta3^2 / (LM (sqrt(theta2) + sqrt(LM))^2) (ZF and L-MMSE only).
double predicted_sir(SnrRegime regime, Scheme scheme, int K, int L, int M, double snr, const ThetaConstants& th);

}  // namespace mrn

#endif  // MRN_ASYMPTOTICS_HPP
