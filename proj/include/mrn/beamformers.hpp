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

#ifndef MRN_BEAMFORMERS_HPP
#define MRN_BEAMFORMERS_HPP

#include <stdexcept>
#include <vector>

#include "mrn/channel.hpp"
#include "mrn/config.hpp"
#include "mrn/random.hpp"

namespace mrn {

/// Gram matrices with condition number above this are treated as degenerate.
inline constexpr double kMaxGramCondition = 1e12;

/// Raised when a ZF/L-MMSE Gram matrix is numerically singular. Callers redraw.
class DegenerateDrawError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Per-relay linear processing for one realization.
///
/// Row j of U[k] is the input beamformer u_{k,j}; column j of V[k] is the output
/// beamformer v_{k,j}; c(k, j) normalizes u_{k,j} r_k to unit conditional energy;
/// A[k] is the composite transform with t_k = A[k] r_k.
struct BeamformerSet {
  std::vector<CMatrix> U;  // LM x N each
  std::vector<CMatrix> V;  // N x LM each
  RMatrix c;               // K x LM
  std::vector<CMatrix> A;  // N x N each
};

/// LM x N input beamformer: MF H^H, ZF (H^H H)^-1 H^H, L-MMSE ((M/p_s) I + H^H H)^-1 H^H.
CMatrix build_input_beamformer(Scheme scheme, const CMatrix& H_stacked, double p_s, int M);

/// N x LM output beamformer: MF G^H, ZF G^H (G G^H)^-1, L-MMSE G^H ((N/p_r) I + G G^H)^-1.
CMatrix build_output_beamformer(Scheme scheme, const CMatrix& G_stacked, double p_r, int N);

/// sqrt((p_s/M) |u H|^2 + |u|^2 N0B): RMS of u r_k given the first-hop channels.
double normalization_scalar(const Eigen::Ref<const Eigen::RowVectorXcd>& u, const CMatrix& H_stacked,
                            double p_s, int M);

/// A_k = sqrt(p_r)/(LM) * sum_j (v_j / |v_j|) (u_j / c_j).
CMatrix compose_relay_transform(const CMatrix& U, const CMatrix& V, const Eigen::Ref<const Eigen::VectorXd>& c,
                                double p_r, int L, int M);

/// E[|t_k|^2 | channels] = tr(A (p_s/M H H^H + N0B I) A^H).
double relay_transmit_power(const CMatrix& A, const CMatrix& H_stacked, double p_s, int M);

/// Builds U, V, c and A for every relay. Throws DegenerateDrawError.
BeamformerSet build_beamformers(Scheme scheme, const ChannelRealization& real, const PowerAllocation& alloc);

}  // namespace mrn

#endif  // MRN_BEAMFORMERS_HPP
