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

#ifndef MRN_VERIFY_HPP
#define MRN_VERIFY_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace mrn {

/// Seed used by every check unless overridden.
inline constexpr std::uint64_t kVerifySeed = 20240611;

struct VerifyOptions {
  double scale = 1.0;  // multiplies Monte Carlo trial counts
  std::vector<std::string> only;  // empty runs every check
  std::uint64_t seed = kVerifySeed;
};

struct CheckResult {
  std::string id;
  std::string description;
  bool pass = false;
  nlohmann::json measured = nlohmann::json::object();
  std::string detail;  // measured vs expected, human readable
  double seconds = 0.0;
};

/// zf-cancel, sir-scaling, lowsnr-mf, cstar, highsnr-slopes, k-scaling,
/// bursty-order, gamma-ks, awgn-figures, cutset-dominance, power, reconstruction.
const std::vector<std::string>& check_ids();

/// Throws std::invalid_argument for an unknown id.
CheckResult run_check(std::string_view id, const VerifyOptions& opts = {});
std::vector<CheckResult> run_verify(const VerifyOptions& opts = {});

}  // namespace mrn

#endif  // MRN_VERIFY_HPP
