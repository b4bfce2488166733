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

#ifndef MRN_RANDOM_HPP
#define MRN_RANDOM_HPP

#include <array>
#include <complex>
#include <cstdint>

#include <Eigen/Dense>

namespace mrn {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;

/// Philox4x32-10 block function (Salmon et al., SC'11).
std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> counter,
                                           std::array<std::uint32_t, 2> key);

/// Counter-based random stream keyed by (master seed, stream index).
///
/// The 128-bit Philox counter holds the stream index in its upper half and a
/// block counter in its lower half, so streams never overlap and the draws of
/// trial i do not depend on which thread ran trials 0..i-1.
class RandomStream {
 public:
  RandomStream(std::uint64_t seed, std::uint64_t index);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t index() const { return index_; }

  std::uint32_t next_u32();
  /// Uniform on the open interval (0, 1) with 53-bit resolution.
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Standard real normal N(0, 1).
  double normal();
  /// Circularly symmetric CN(0, 1): real and imaginary parts each N(0, 1/2).
  std::complex<double> complex_normal();

 private:
  void refill();

  std::uint64_t seed_;
  std::uint64_t index_;
  std::uint64_t block_ = 0;
  std::array<std::uint32_t, 4> buffer_{};
  int used_ = 4;
  bool has_spare_normal_ = false;
  double spare_normal_ = 0.0;
};

/// rows x cols matrix of i.i.d. CN(0, 1) entries, filled column-major.
CMatrix sample_complex_gaussian(RandomStream& stream, int rows, int cols);

/// Unit-scale Gamma draw with integer shape (sum of shape_n unit exponentials).
double sample_gamma(RandomStream& stream, int shape_n);

}  // namespace mrn

#endif  // MRN_RANDOM_HPP
