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

#ifndef MRN_CHANNEL_HPP
#define MRN_CHANNEL_HPP

#include <iosfwd>
#include <vector>

#include "mrn/config.hpp"
#include "mrn/random.hpp"

namespace mrn {

/// One block-fading draw of the two-hop network.
///
/// Blocks are stored per (relay k, pair l): H(k,l) is N x M (source l to relay k),
/// G(k,l) is M x N (relay k to destination l). Path-loss factors are K x L.
class ChannelRealization {
 public:
  ChannelRealization() = default;
  ChannelRealization(int K, int L, int M, int N);

  int K() const { return K_; }
  int L() const { return L_; }
  int M() const { return M_; }
  int N() const { return N_; }

  const CMatrix& H(int k, int l) const { return H_[index(k, l)]; }
  const CMatrix& G(int k, int l) const { return G_[index(k, l)]; }
  CMatrix& H(int k, int l) { return H_[index(k, l)]; }
  CMatrix& G(int k, int l) { return G_[index(k, l)]; }
  double E(int k, int l) const { return E_(k, l); }
  double F(int k, int l) const { return F_(k, l); }
  double& E(int k, int l) { return E_(k, l); }
  double& F(int k, int l) { return F_(k, l); }

  bool operator==(const ChannelRealization& o) const;

 private:
  std::size_t index(int k, int l) const { return static_cast<std::size_t>(k) * L_ + l; }

  int K_ = 0, L_ = 0, M_ = 0, N_ = 0;
  std::vector<CMatrix> H_;
  std::vector<CMatrix> G_;
  RMatrix E_;
  RMatrix F_;
};

/// Source-to-destination gains for the relay-free baseline. xi(i, j) is the gain
/// from stream i to destination stream j, streams indexed l*M + m.
struct DirectChannelRealization {
  CMatrix xi;
};

/// Draw order: all H blocks (k-major), all G blocks, then E and F when the
/// path-loss model is random.
ChannelRealization draw_realization(const NetworkConfig& cfg, RandomStream& stream);
DirectChannelRealization draw_direct(const NetworkConfig& cfg, RandomStream& stream);

/// N x LM matrix whose column l*M + m is sqrt(E_{k,l}) times column m of H_{k,l}.
CMatrix stack_first_hop(const ChannelRealization& real, int k);
/// LM x N matrix whose row l*M + m is sqrt(F_{k,l}) times row m of G_{k,l}.
CMatrix stack_second_hop(const ChannelRealization& real, int k);

enum class DumpFormat { Binary, Text };

// Portable dump: dimensions, then every H block, every G block (row-major,
// interleaved re/im), then E and F row-major. Binary is little-endian float64.
void write_realization(std::ostream& os, const ChannelRealization& real, DumpFormat fmt);
ChannelRealization read_realization(std::istream& is, DumpFormat fmt);

}  // namespace mrn

#endif  // MRN_CHANNEL_HPP
