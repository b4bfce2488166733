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

#ifndef MRN_CONFIG_HPP
#define MRN_CONFIG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace mrn {

// All energy quantities are ratios to N0*B, i.e. the noise power is 1.
inline constexpr double kNoisePower = 1.0;

enum class Scheme { MF, ZF, LMMSE, DIRECT, CUTSET };

std::string_view to_string(Scheme s);
Scheme parse_scheme(std::string_view name);  // case-insensitive; throws std::invalid_argument

inline bool is_relay_scheme(Scheme s) { return s == Scheme::MF || s == Scheme::ZF || s == Scheme::LMMSE; }

double db_to_linear(double db);
double linear_to_db(double lin);

/// Path-loss factors E_{k,l}, F_{k,l} (ratios to N0*B).
///
/// The constant model uses a single value per hop for every (k,l). The uniform
/// model draws each factor i.i.d. from U[min, max] with 0 < min <= max.
struct PathLossModel {
  enum class Kind { Constant, Uniform };

  Kind kind = Kind::Constant;
  double e_db = 0.0;
  double f_db = 0.0;
  double e_min = 1.0, e_max = 1.0;
  double f_min = 1.0, f_max = 1.0;

  static PathLossModel constant(double e_db, double f_db);
  static PathLossModel uniform(double e_min, double e_max, double f_min, double f_max);

  // Moments used by the closed-form theta constants and the cut-set curve.
  double mean_e() const;
  double mean_f() const;
  double mean_sqrt_e() const;
  double mean_sqrt_f() const;
  double mean_inv_e() const;
  double upper_e() const;
  double upper_f() const;

  void validate() const;
};

struct NetworkConfig {
  int K = 10;
  int L = 2;
  int M = 1;
  int N = 2;
  double snr_db = 0.0;
  std::optional<double> beta;  // nullopt selects the scheme-specific optimum
  double alpha = 1.0;
  Scheme scheme = Scheme::ZF;
  PathLossModel pathloss;
  std::int64_t trials = 10000;
  std::uint64_t seed = 1;

  int streams() const { return L * M; }
  double snr() const { return db_to_linear(snr_db); }

  /// Throws std::invalid_argument describing the first violated constraint.
  void validate() const;
};

struct PowerAllocation {
  double p_s = 0.0;  // per source terminal
  double p_r = 0.0;  // per relay terminal

  PowerAllocation in_burst(double alpha) const { return {p_s / alpha, p_r / alpha}; }
};

enum class SnrRegime { Low, High };

/// Inputs needed to pick beta when the config leaves it on "auto".
struct BetaHint {
  SnrRegime regime = SnrRegime::Low;
  std::optional<double> theta2;  // required (finite) for the high-SNR optimum
};

double low_snr_optimal_beta(int K, int L);
double high_snr_optimal_beta(int K, int L, int M, double theta2);

/// Splits the network power so that L*p_s + K*p_r = 2*SNR for relay schemes.
/// CUTSET puts everything on the sources (p_r = 0); DIRECT is single-slot and
/// shares SNR equally across the L sources.
PowerAllocation resolve_power_allocation(const NetworkConfig& cfg, const BetaHint& hint = {});

}  // namespace mrn

#endif  // MRN_CONFIG_HPP
