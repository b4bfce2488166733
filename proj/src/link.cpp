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

#include "mrn/link.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "mrn/asymptotics.hpp"
#include "mrn/parallel.hpp"
#include "mrn/stats.hpp"

namespace mrn {

namespace {

constexpr int kMaxRedraws = 1000;

double sir_from_row(const Eigen::Ref<const Eigen::RowVectorXcd>& row, int j, double relay_noise, double p_s, int M) {
  const double per_stream = p_s / M;
  double interference = 0.0;
  for (int i = 0; i < row.size(); ++i)
    if (i != j) interference += std::norm(row(i));
  return std::norm(row(j)) * per_stream / (interference * per_stream + relay_noise + kNoisePower);
}

std::vector<double> sirs_for_allocation(const NetworkConfig& cfg, std::uint64_t trial, const PowerAllocation& alloc,
                                        int* redraws) {
  if (cfg.scheme == Scheme::DIRECT) {
    RandomStream stream(cfg.seed, trial);
    return direct_sir(draw_direct(cfg, stream), cfg.snr());
  }
  TrialSample sample = draw_trial(cfg, trial, alloc);
  if (redraws) *redraws = sample.redraws;
  return relay_stream_sirs(sample.real, sample.bf, alloc);
}

// Smallest E_{k,l} Y_{k,l,m} over relays and streams, with E Y = 1 / [(H_k^H H_k)^-1]_jj.
double min_first_hop_gain(const ChannelRealization& real) {
  double best = std::numeric_limits<double>::infinity();
  for (int k = 0; k < real.K(); ++k) {
    const CMatrix H = stack_first_hop(real, k);
    const CMatrix gram = H.adjoint() * H;
    const Eigen::LLT<CMatrix> llt(gram);
    if (llt.info() != Eigen::Success) return 0.0;
    const CMatrix inv = llt.solve(CMatrix::Identity(gram.rows(), gram.cols()));
    for (int j = 0; j < gram.rows(); ++j) best = std::min(best, 1.0 / inv(j, j).real());
  }
  return best;
}

struct RelayRun {
  std::vector<double> per_trial;
  std::vector<double> min_gain;
  std::int64_t redraws = 0;
};

RelayRun run_relay(const NetworkConfig& cfg, bool duty_check) {
  const PowerAllocation burst = allocation_for(cfg).in_burst(cfg.alpha);
  const auto n = cfg.trials;
  RelayRun run;
  run.per_trial.resize(static_cast<std::size_t>(n));
  if (duty_check) run.min_gain.resize(static_cast<std::size_t>(n));
  std::vector<int> redraws(static_cast<std::size_t>(n), 0);
  parallel_for(n, [&](std::int64_t t) {
    const auto i = static_cast<std::size_t>(t);
    TrialSample sample = draw_trial(cfg, static_cast<std::uint64_t>(t), burst);
    redraws[i] = sample.redraws;
    const std::vector<double> sirs = relay_stream_sirs(sample.real, sample.bf, burst);
    double acc = 0.0;
    for (double s : sirs) acc += std::log2(1.0 + s);
    run.per_trial[i] = cfg.alpha * 0.5 * acc;
    if (duty_check) run.min_gain[i] = min_first_hop_gain(sample.real);
  });
  run.redraws = std::accumulate(redraws.begin(), redraws.end(), std::int64_t{0});
  return run;
}

}  // namespace

StreamLinkCoefficients extract_coefficients(const ChannelRealization& real, const BeamformerSet& bf, int l, int m) {
  const int L = real.L(), M = real.M();
  if (l < 0 || l >= L || m < 0 || m >= M) throw std::out_of_range("extract_coefficients: stream index");
  const int j = l * M + m;
  Eigen::RowVectorXcd row = Eigen::RowVectorXcd::Zero(L * M);
  StreamLinkCoefficients out;
  out.relay_noise.reserve(real.K());
  for (int k = 0; k < real.K(); ++k) {
    // sqrt(F_{k,l}) g_{k,l,m} A_k, i.e. row j of the stacked second hop times A_k.
    Eigen::RowVectorXcd noise_row = std::sqrt(real.F(k, l)) * real.G(k, l).row(m) * bf.A[k];
    for (int p = 0; p < L; ++p)
      row.segment(p * M, M) += std::sqrt(real.E(k, p)) * (noise_row * real.H(k, p));
    out.relay_noise.push_back(std::move(noise_row));
  }
  out.signal = row(j);
  out.interference.reserve(L * M - 1);
  for (int i = 0; i < L * M; ++i)
    if (i != j) out.interference.push_back(row(i));
  out.dest_noise_var = kNoisePower;
  return out;
}

double compute_sir(const StreamLinkCoefficients& coeffs, const PowerAllocation& alloc, int M) {
  const double per_stream = alloc.p_s / M;
  double interference = 0.0;
  for (const auto& c : coeffs.interference) interference += std::norm(c);
  double relay_noise = 0.0;
  for (const auto& r : coeffs.relay_noise) relay_noise += r.squaredNorm();
  return std::norm(coeffs.signal) * per_stream /
         (interference * per_stream + relay_noise * kNoisePower + coeffs.dest_noise_var);
}

CMatrix effective_channel(const ChannelRealization& real, const BeamformerSet& bf) {
  const int s = real.L() * real.M();
  CMatrix T = CMatrix::Zero(s, s);
  for (int k = 0; k < real.K(); ++k) T += stack_second_hop(real, k) * bf.A[k] * stack_first_hop(real, k);
  return T;
}

std::vector<double> relay_stream_sirs(const ChannelRealization& real, const BeamformerSet& bf,
                                      const PowerAllocation& alloc) {
  const int s = real.L() * real.M();
  CMatrix T = CMatrix::Zero(s, s);
  Eigen::VectorXd noise = Eigen::VectorXd::Zero(s);
  for (int k = 0; k < real.K(); ++k) {
    const CMatrix B = stack_second_hop(real, k) * bf.A[k];
    T.noalias() += B * stack_first_hop(real, k);
    noise += B.rowwise().squaredNorm();
  }
  std::vector<double> out(static_cast<std::size_t>(s));
  for (int j = 0; j < s; ++j) out[j] = sir_from_row(T.row(j), j, noise(j) * kNoisePower, alloc.p_s, real.M());
  return out;
}

CVector propagate(const ChannelRealization& real, const BeamformerSet& bf, const CVector& s,
                  const std::vector<CVector>& relay_noise, const CVector& z) {
  const int K = real.K(), L = real.L(), M = real.M();
  if (s.size() != L * M || z.size() != L * M || static_cast<int>(relay_noise.size()) != K)
    throw std::invalid_argument("propagate: dimension mismatch");
  CVector y = z;
  for (int k = 0; k < K; ++k) {
    CVector r = relay_noise[k];
    for (int l = 0; l < L; ++l) r += std::sqrt(real.E(k, l)) * real.H(k, l) * s.segment(l * M, M);
    const CVector t = bf.A[k] * r;
    for (int l = 0; l < L; ++l) y.segment(l * M, M) += std::sqrt(real.F(k, l)) * real.G(k, l) * t;
  }
  return y;
}

std::vector<double> direct_sir(const DirectChannelRealization& direct, double snr) {
  const auto s = static_cast<int>(direct.xi.rows());
  if (s < 1 || direct.xi.cols() != s) throw std::invalid_argument("direct_sir: xi must be square");
  const double p = snr / s;
  std::vector<double> out(static_cast<std::size_t>(s));
  for (int j = 0; j < s; ++j) {
    double interference = 0.0;
    for (int i = 0; i < s; ++i)
      if (i != j) interference += std::norm(direct.xi(i, j));
    out[j] = std::norm(direct.xi(j, j)) * p / (kNoisePower + interference * p);
  }
  return out;
}

TradeoffPoint TradeoffPoint::make(double snr, double c, double stderr_c) {
  TradeoffPoint p;
  p.snr = snr;
  p.spectral_efficiency = c;
  p.eb_n0 = c > 0.0 ? snr / c : std::numeric_limits<double>::infinity();
  p.mc_stderr = stderr_c;
  return p;
}

TrialSample draw_trial(const NetworkConfig& cfg, std::uint64_t trial, const PowerAllocation& alloc) {
  RandomStream stream(cfg.seed, trial);
  TrialSample sample;
  for (;;) {
    sample.real = draw_realization(cfg, stream);
    try {
      sample.bf = build_beamformers(cfg.scheme, sample.real, alloc);
      return sample;
    } catch (const DegenerateDrawError&) {
      if (++sample.redraws > kMaxRedraws) throw;
    }
  }
}

PowerAllocation allocation_for(const NetworkConfig& cfg) { return resolve_power_allocation(cfg, auto_beta_hint(cfg)); }

std::vector<double> trial_sirs(const NetworkConfig& cfg, std::uint64_t trial, int* redraws) {
  const PowerAllocation alloc =
      cfg.scheme == Scheme::DIRECT ? allocation_for(cfg) : allocation_for(cfg).in_burst(cfg.alpha);
  return sirs_for_allocation(cfg, trial, alloc, redraws);
}

std::vector<double> collect_sirs(const NetworkConfig& cfg) {
  cfg.validate();
  if (!is_relay_scheme(cfg.scheme) && cfg.scheme != Scheme::DIRECT)
    throw std::invalid_argument("collect_sirs: scheme has no per-stream SIR");
  const PowerAllocation alloc =
      cfg.scheme == Scheme::DIRECT ? allocation_for(cfg) : allocation_for(cfg).in_burst(cfg.alpha);
  const int s = cfg.streams();
  std::vector<double> out(static_cast<std::size_t>(cfg.trials) * s);
  parallel_for(cfg.trials, [&](std::int64_t t) {
    const auto sirs = sirs_for_allocation(cfg, static_cast<std::uint64_t>(t), alloc, nullptr);
    std::copy(sirs.begin(), sirs.end(), out.begin() + t * s);
  });
  return out;
}

TradeoffPoint spectral_efficiency(const NetworkConfig& cfg) {
  cfg.validate();
  if (cfg.scheme == Scheme::CUTSET) return cutset_bound_empirical(cfg);
  if (cfg.scheme == Scheme::DIRECT) {
    std::vector<double> per_trial(static_cast<std::size_t>(cfg.trials));
    const double snr = cfg.snr();
    parallel_for(cfg.trials, [&](std::int64_t t) {
      RandomStream stream(cfg.seed, static_cast<std::uint64_t>(t));
      double acc = 0.0;
      for (double s : direct_sir(draw_direct(cfg, stream), snr)) acc += std::log2(1.0 + s);
      per_trial[static_cast<std::size_t>(t)] = acc;
    });
    const auto est = stats::mean_with_stderr(per_trial);
    return TradeoffPoint::make(snr, est.mean, est.std_error);
  }
  const RelayRun run = run_relay(cfg, false);
  const auto est = stats::mean_with_stderr(run.per_trial);
  TradeoffPoint p = TradeoffPoint::make(cfg.snr(), est.mean, est.std_error);
  p.redraws = run.redraws;
  return p;
}

TradeoffPoint bursty_spectral_efficiency(const NetworkConfig& cfg) {
  if (!(cfg.alpha > 0.0 && cfg.alpha <= 1.0)) throw std::invalid_argument("duty cycle alpha must lie in (0, 1]");
  cfg.validate();
  if (!is_relay_scheme(cfg.scheme)) throw std::invalid_argument("bursty signaling needs a relay scheme");
  const bool duty_check = cfg.N >= cfg.streams();
  const RelayRun run = run_relay(cfg, duty_check);
  const auto est = stats::mean_with_stderr(run.per_trial);
  TradeoffPoint p = TradeoffPoint::make(cfg.snr(), est.mean, est.std_error);
  p.redraws = run.redraws;
  if (duty_check) {
    const double p_s = allocation_for(cfg).p_s;
    const double q01 = stats::quantile(run.min_gain, 0.01) * p_s / cfg.M;
    if (cfg.alpha > q01) {
      std::ostringstream os;
      os << "duty cycle alpha=" << cfg.alpha << " exceeds the 1st percentile (" << q01
         << ") of min E*Y*p_s/M; relays are not operating in the high-SNR regime";
      p.warning = os.str();
    }
  }
  return p;
}

CMatrix cutset_gram(const ChannelRealization& real) {
  const int s = real.L() * real.M();
  CMatrix phi = CMatrix::Zero(s, s);
  for (int k = 0; k < real.K(); ++k) {
    const CMatrix H = stack_first_hop(real, k);
    phi.noalias() += H.adjoint() * H;
  }
  return phi;
}

TradeoffPoint cutset_bound_empirical(const NetworkConfig& cfg) {
  NetworkConfig cs = cfg;
  cs.scheme = Scheme::CUTSET;
  cs.validate();
  const PowerAllocation alloc = resolve_power_allocation(cs);
  const int s = cs.streams();
  std::vector<double> per_trial(static_cast<std::size_t>(cs.trials));
  parallel_for(cs.trials, [&](std::int64_t t) {
    RandomStream stream(cs.seed, static_cast<std::uint64_t>(t));
    const ChannelRealization real = draw_realization(cs, stream);
    const CMatrix phi = cutset_gram(real);
    const Eigen::SelfAdjointEigenSolver<CMatrix> eig(phi, Eigen::EigenvaluesOnly);
    if (eig.eigenvalues().minCoeff() < -1e-10) throw std::logic_error("cut-set Gram matrix is not PSD");
    CMatrix m = CMatrix::Identity(s, s) + (alloc.p_s / cs.M) * phi;
    const Eigen::LLT<CMatrix> llt(m);
    double logdet = 0.0;
    for (int i = 0; i < s; ++i) logdet += std::log2(llt.matrixLLT()(i, i).real());
    per_trial[static_cast<std::size_t>(t)] = logdet;  // 0.5 * log2 det = sum log2 diag(chol)
  });
  const auto est = stats::mean_with_stderr(per_trial);
  return TradeoffPoint::make(cs.snr(), est.mean, est.std_error);
}

}  // namespace mrn
