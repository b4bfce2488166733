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

#ifndef MRN_LINK_HPP
#define MRN_LINK_HPP

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mrn/beamformers.hpp"
#include "mrn/channel.hpp"
#include "mrn/config.hpp"

namespace mrn {

/// End-to-end coefficients seen by destination stream (l, m) for one realization.
struct StreamLinkCoefficients {
  std::complex<double> signal;
  /// Coefficients of the other LM-1 streams, in stream-index order with (l, m) skipped.
  std::vector<std::complex<double>> interference;
  /// Row k multiplies the relay noise n_k.
  std::vector<Eigen::RowVectorXcd> relay_noise;
  double dest_noise_var = kNoisePower;
};

StreamLinkCoefficients extract_coefficients(const ChannelRealization& real, const BeamformerSet& bf, int l, int m);

/// |signal|^2 (p_s/M) / (sum |interference|^2 (p_s/M) + sum_k |relay_noise_k|^2 N0B + N0B)
double compute_sir(const StreamLinkCoefficients& coeffs, const PowerAllocation& alloc, int M);

/// SIR of all LM streams at once (same algebra as extract_coefficients + compute_sir).
std::vector<double> relay_stream_sirs(const ChannelRealization& real, const BeamformerSet& bf,
                                      const PowerAllocation& alloc);

/// Effective LM x LM channel sum_k G_k A_k H_k; entry (j, i) couples stream i into output j.
CMatrix effective_channel(const ChannelRealization& real, const BeamformerSet& bf);

/// Independent sample-level propagation r_k -> t_k -> y_l using the unstacked
/// blocks. `s` and `z` hold the LM stream symbols / destination noise (index
/// l*M + m); `relay_noise[k]` is n_k. Returns y stacked the same way.
CVector propagate(const ChannelRealization& real, const BeamformerSet& bf, const CVector& s,
                  const std::vector<CVector>& relay_noise, const CVector& z);

/// Per-stream SIR for the relay-free baseline with total network power `snr`
/// split equally over all streams; all other streams count as interference.
std::vector<double> direct_sir(const DirectChannelRealization& direct, double snr);

/// One point on a power-bandwidth curve.
struct TradeoffPoint {
  double snr = 0.0;                  // linear
  double spectral_efficiency = 0.0;  // b/s/Hz
  double eb_n0 = 0.0;                // linear, snr / C
  double mc_stderr = 0.0;            // b/s/Hz
  std::int64_t redraws = 0;          // degenerate draws replaced
  std::optional<std::string> warning;

  static TradeoffPoint make(double snr, double c, double stderr_c);
};

/// Draws a realization for trial `trial` and builds its beamformers,
/// redrawing from the same stream on degenerate Gram matrices.
struct TrialSample {
  ChannelRealization real;
  BeamformerSet bf;
  int redraws = 0;
};
TrialSample draw_trial(const NetworkConfig& cfg, std::uint64_t trial, const PowerAllocation& alloc);

/// Allocation actually used for cfg: explicit beta, else the auto policy.
PowerAllocation allocation_for(const NetworkConfig& cfg);

/// Per-stream SIRs of trial `trial`, for relay schemes (in-burst powers when
/// cfg.alpha < 1) and DIRECT. Stream order l*M + m.
std::vector<double> trial_sirs(const NetworkConfig& cfg, std::uint64_t trial, int* redraws = nullptr);

/// All per-stream SIR samples of cfg.trials trials, trial-major.
std::vector<double> collect_sirs(const NetworkConfig& cfg);

/// Ergodic spectral efficiency of cfg.scheme at cfg.snr_db. Relay schemes
/// use (alpha/2) sum E[log2(1 + SIR)] with in-burst powers p/alpha; DIRECT has
/// no half-duplex factor; CUTSET delegates to cutset_bound_empirical.
TradeoffPoint spectral_efficiency(const NetworkConfig& cfg);

/// spectral_efficiency plus the duty-cycle sanity check: a warning is
/// attached when alpha exceeds the 1st percentile of
/// min_{k,l,m} E_{k,l} Y_{k,l,m} p_s / M over trials.
TradeoffPoint bursty_spectral_efficiency(const NetworkConfig& cfg);

/// Monte Carlo mean of (1/2) log2 det(I + (p_s/M) Phi), p_s = 2 SNR / L.
TradeoffPoint cutset_bound_empirical(const NetworkConfig& cfg);

/// Phi = sum_k H_k^H H_k (stacked first hops), i.e. the block matrix of Delta_{i,j}.
CMatrix cutset_gram(const ChannelRealization& real);

}  // namespace mrn

#endif  // MRN_LINK_HPP
