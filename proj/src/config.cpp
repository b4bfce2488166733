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

#include "mrn/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

namespace mrn {

std::string_view to_string(Scheme s) {
  switch (s) {
    case Scheme::MF: return "MF";
    case Scheme::ZF: return "ZF";
    case Scheme::LMMSE: return "LMMSE";
    case Scheme::DIRECT: return "DIRECT";
    case Scheme::CUTSET: return "CUTSET";
  }
  return "?";
}

Scheme parse_scheme(std::string_view name) {
  std::string up(name);
  std::transform(up.begin(), up.end(), up.begin(), [](unsigned char c) { return std::toupper(c); });
  up.erase(std::remove(up.begin(), up.end(), '-'), up.end());
  if (up == "MF") return Scheme::MF;
  if (up == "ZF") return Scheme::ZF;
  if (up == "LMMSE" || up == "MMSE") return Scheme::LMMSE;
  if (up == "DIRECT") return Scheme::DIRECT;
  if (up == "CUTSET") return Scheme::CUTSET;
  throw std::invalid_argument("unknown scheme '" + std::string(name) + "'");
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
double linear_to_db(double lin) { return 10.0 * std::log10(lin); }

PathLossModel PathLossModel::constant(double e_db, double f_db) {
  PathLossModel m;
  m.kind = Kind::Constant;
  m.e_db = e_db;
  m.f_db = f_db;
  m.e_min = m.e_max = db_to_linear(e_db);
  m.f_min = m.f_max = db_to_linear(f_db);
  return m;
}

PathLossModel PathLossModel::uniform(double e_min, double e_max, double f_min, double f_max) {
  PathLossModel m;
  m.kind = Kind::Uniform;
  m.e_min = e_min;
  m.e_max = e_max;
  m.f_min = f_min;
  m.f_max = f_max;
  m.e_db = linear_to_db(0.5 * (e_min + e_max));
  m.f_db = linear_to_db(0.5 * (f_min + f_max));
  m.validate();
  return m;
}

namespace {

// Moments of U[a,b]; a == b degenerates to the point mass.
double uniform_mean_pow(double a, double b, double p) {
  if (a == b) return std::pow(a, p);
  if (p == -1.0) return std::log(b / a) / (b - a);
  return (std::pow(b, p + 1.0) - std::pow(a, p + 1.0)) / ((p + 1.0) * (b - a));
}

}  // namespace

double PathLossModel::mean_e() const {
  return kind == Kind::Constant ? db_to_linear(e_db) : uniform_mean_pow(e_min, e_max, 1.0);
}
double PathLossModel::mean_f() const {
  return kind == Kind::Constant ? db_to_linear(f_db) : uniform_mean_pow(f_min, f_max, 1.0);
}
double PathLossModel::mean_sqrt_e() const {
  return kind == Kind::Constant ? std::sqrt(db_to_linear(e_db)) : uniform_mean_pow(e_min, e_max, 0.5);
}
double PathLossModel::mean_sqrt_f() const {
  return kind == Kind::Constant ? std::sqrt(db_to_linear(f_db)) : uniform_mean_pow(f_min, f_max, 0.5);
}
double PathLossModel::mean_inv_e() const {
  return kind == Kind::Constant ? 1.0 / db_to_linear(e_db) : uniform_mean_pow(e_min, e_max, -1.0);
}
double PathLossModel::upper_e() const { return kind == Kind::Constant ? db_to_linear(e_db) : e_max; }
double PathLossModel::upper_f() const { return kind == Kind::Constant ? db_to_linear(f_db) : f_max; }

void PathLossModel::validate() const {
  if (kind == Kind::Constant) {
    if (!std::isfinite(e_db) || !std::isfinite(f_db))
      throw std::invalid_argument("path loss must be finite");
    return;
  }
  if (!(e_min > 0.0 && e_min <= e_max && std::isfinite(e_max)) ||
      !(f_min > 0.0 && f_min <= f_max && std::isfinite(f_max)))
    throw std::invalid_argument("uniform path loss needs 0 < min <= max < inf");
}

void NetworkConfig::validate() const {
  if (L < 1 || M < 1 || N < 1) throw std::invalid_argument("L, M, N must be >= 1");
  if (K < 0) throw std::invalid_argument("K must be >= 0");
  if (K == 0 && scheme != Scheme::DIRECT)
    throw std::invalid_argument("K = 0 is only valid for the direct baseline");
  if ((scheme == Scheme::ZF || scheme == Scheme::LMMSE) && N < L * M)
    throw std::invalid_argument("ZF and L-MMSE need N >= L*M (N=" + std::to_string(N) +
                                ", LM=" + std::to_string(L * M) + ")");
  if (!(alpha > 0.0 && alpha <= 1.0)) throw std::invalid_argument("alpha must lie in (0, 1]");
  if (beta && !(*beta > 0.0 && std::isfinite(*beta))) throw std::invalid_argument("beta must be > 0");
  if (!std::isfinite(snr_db)) throw std::invalid_argument("snr_db must be finite");
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  pathloss.validate();
}

double low_snr_optimal_beta(int K, int L) { return static_cast<double>(L) / K; }

double high_snr_optimal_beta(int K, int L, int M, double theta2) {
  const double l = L, m = M, k = K;
  return std::sqrt(l * l * l * m / (k * k * theta2));
}

PowerAllocation resolve_power_allocation(const NetworkConfig& cfg, const BetaHint& hint) {
  const double snr = cfg.snr();
  const double L = cfg.L;
  switch (cfg.scheme) {
    case Scheme::CUTSET:
      return {2.0 * snr / L, 0.0};
    case Scheme::DIRECT:
      return {snr / L, 0.0};
    default:
      break;
  }
  if (cfg.K < 1) throw std::invalid_argument("relay schemes need K >= 1");

  double beta = 0.0;
  if (cfg.beta) {
    beta = *cfg.beta;
  } else if (hint.regime == SnrRegime::High && hint.theta2 && std::isfinite(*hint.theta2)) {
    beta = high_snr_optimal_beta(cfg.K, cfg.L, cfg.M, *hint.theta2);
  } else {
    // Shape 1 has infinite theta2; use L/K.
    beta = low_snr_optimal_beta(cfg.K, cfg.L);
  }
  if (!(beta > 0.0)) throw std::invalid_argument("beta must be > 0");

  const double p_s = 2.0 * snr / (L + cfg.K * beta);
  return {p_s, beta * p_s};
}

}  // namespace mrn
