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

#include "mrn/beamformers.hpp"

#include <cmath>
#include <string>

namespace mrn {

namespace {

// Solves gram * X = rhs for a Hermitian positive definite gram after checking
// its spectral condition number.
CMatrix guarded_solve(const CMatrix& gram, const CMatrix& rhs, const char* what) {
  const Eigen::SelfAdjointEigenSolver<CMatrix> eig(gram, Eigen::EigenvaluesOnly);
  const double lo = eig.eigenvalues().minCoeff();
  const double hi = eig.eigenvalues().maxCoeff();
  if (!(lo > 0.0) || hi / lo > kMaxGramCondition)
    throw DegenerateDrawError(std::string(what) + ": Gram matrix condition number exceeds 1e12");
  const Eigen::LLT<CMatrix> llt(gram);
  if (llt.info() != Eigen::Success) throw DegenerateDrawError(std::string(what) + ": Cholesky failed");
  return llt.solve(rhs);
}

}  // namespace

CMatrix build_input_beamformer(Scheme scheme, const CMatrix& H, double p_s, int M) {
  const CMatrix Hh = H.adjoint();
  switch (scheme) {
    case Scheme::MF:
      return Hh;
    case Scheme::ZF:
      return guarded_solve(Hh * H, Hh, "ZF input beamformer");
    case Scheme::LMMSE: {
      if (!(p_s > 0.0)) throw std::invalid_argument("L-MMSE input beamformer needs p_s > 0");
      CMatrix gram = Hh * H;
      gram.diagonal().array() += M * kNoisePower / p_s;
      return guarded_solve(gram, Hh, "L-MMSE input beamformer");
    }
    default:
      throw std::invalid_argument("build_input_beamformer: not a relay scheme");
  }
}

CMatrix build_output_beamformer(Scheme scheme, const CMatrix& G, double p_r, int N) {
  switch (scheme) {
    case Scheme::MF:
      return G.adjoint();
    case Scheme::ZF:
      // G^H (G G^H)^-1 = ((G G^H)^-1 G)^H since G G^H is Hermitian.
      return guarded_solve(G * G.adjoint(), G, "ZF output beamformer").adjoint();
    case Scheme::LMMSE: {
      if (!(p_r > 0.0)) throw std::invalid_argument("L-MMSE output beamformer needs p_r > 0");
      CMatrix gram = G * G.adjoint();
      gram.diagonal().array() += N * kNoisePower / p_r;
      return guarded_solve(gram, G, "L-MMSE output beamformer").adjoint();
    }
    default:
      throw std::invalid_argument("build_output_beamformer: not a relay scheme");
  }
}

double normalization_scalar(const Eigen::Ref<const Eigen::RowVectorXcd>& u, const CMatrix& H, double p_s,
                            int M) {
  const double unorm2 = u.squaredNorm();
  if (!(unorm2 > 0.0)) throw std::invalid_argument("normalization_scalar: zero beamformer");
  return std::sqrt(p_s / M * (u * H).squaredNorm() + unorm2 * kNoisePower);
}

CMatrix compose_relay_transform(const CMatrix& U, const CMatrix& V, const Eigen::Ref<const Eigen::VectorXd>& c,
                                double p_r, int L, int M) {
  const int streams = L * M;
  if (U.rows() != streams || V.cols() != streams || c.size() != streams)
    throw std::invalid_argument("compose_relay_transform: dimension mismatch");
  Eigen::VectorXd weight(streams);
  for (int j = 0; j < streams; ++j) {
    const double vnorm = V.col(j).norm();
    if (!(vnorm > 0.0)) throw std::invalid_argument("compose_relay_transform: zero output beamformer");
    if (!(c(j) > 0.0)) throw std::invalid_argument("compose_relay_transform: non-positive normalization");
    weight(j) = 1.0 / (vnorm * c(j));
  }
  return (std::sqrt(p_r) / streams) * (V * weight.asDiagonal() * U);
}

double relay_transmit_power(const CMatrix& A, const CMatrix& H, double p_s, int M) {
  // tr(A S A^H) with S = (p_s/M) H H^H + I, expanded to avoid forming S.
  const CMatrix AH = A * H;
  return p_s / M * AH.squaredNorm() + kNoisePower * A.squaredNorm();
}

BeamformerSet build_beamformers(Scheme scheme, const ChannelRealization& real, const PowerAllocation& alloc) {
  const int K = real.K(), L = real.L(), M = real.M(), N = real.N();
  BeamformerSet bf;
  bf.U.reserve(K);
  bf.V.reserve(K);
  bf.A.reserve(K);
  bf.c.resize(K, L * M);
  for (int k = 0; k < K; ++k) {
    const CMatrix H = stack_first_hop(real, k);
    const CMatrix G = stack_second_hop(real, k);
    CMatrix U = build_input_beamformer(scheme, H, alloc.p_s, M);
    CMatrix V = build_output_beamformer(scheme, G, alloc.p_r, N);
    // Row norms of U H and U give every normalization scalar in one pass.
    const Eigen::VectorXd uh2 = (U * H).rowwise().squaredNorm();
    const Eigen::VectorXd u2 = U.rowwise().squaredNorm();
    for (int j = 0; j < L * M; ++j) {
      if (!(u2(j) > 0.0)) throw DegenerateDrawError("zero input beamformer row");
      bf.c(k, j) = std::sqrt(alloc.p_s / M * uh2(j) + u2(j) * kNoisePower);
    }
    bf.A.push_back(compose_relay_transform(U, V, bf.c.row(k).transpose(), alloc.p_r, L, M));
    bf.U.push_back(std::move(U));
    bf.V.push_back(std::move(V));
  }
  return bf;
}

}  // namespace mrn
