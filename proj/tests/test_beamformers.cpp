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

#include <cmath>

#include "doctest.h"
#include "mrn/beamformers.hpp"
#include "mrn/link.hpp"

using namespace mrn;

namespace {

CMatrix scalar(double x) { return CMatrix::Constant(1, 1, x); }

double rel(const CMatrix& a, const CMatrix& b) { return (a - b).norm() / b.norm(); }

}  // namespace

TEST_CASE("scalar beamformer oracles") {
  const CMatrix two = scalar(2.0);
  CHECK(build_input_beamformer(Scheme::MF, two, 1.0, 1)(0, 0).real() == doctest::Approx(2.0));
  CHECK(build_input_beamformer(Scheme::ZF, two, 1.0, 1)(0, 0).real() == doctest::Approx(0.5));
  CHECK(build_input_beamformer(Scheme::LMMSE, two, 1.0, 1)(0, 0).real() == doctest::Approx(0.4));
  CHECK(build_output_beamformer(Scheme::MF, two, 1.0, 1)(0, 0).real() == doctest::Approx(2.0));
  CHECK(build_output_beamformer(Scheme::ZF, two, 1.0, 1)(0, 0).real() == doctest::Approx(0.5));
  CHECK(build_output_beamformer(Scheme::LMMSE, two, 1.0, 1)(0, 0).real() == doctest::Approx(0.4));
}

TEST_CASE("normalization scalar examples") {
  CMatrix H = CMatrix::Zero(2, 2);
  H(0, 0) = 1.0;
  Eigen::RowVectorXcd u(2);
  u << 1.0, 1.0;  // u H = e1, |u|^2 = 2
  CHECK(normalization_scalar(u, H, 1.0, 1) == doctest::Approx(std::sqrt(3.0)));

  Eigen::RowVectorXcd mf(1);
  mf << 2.0;
  CHECK(normalization_scalar(mf, scalar(2.0), 1.0, 1) == doctest::Approx(std::sqrt(20.0)));
}

TEST_CASE("zero-forcing identities") {
  RandomStream s(1, 0);
  for (int t = 0; t < 50; ++t) {
    const CMatrix H = sample_complex_gaussian(s, 4, 3);
    const CMatrix G = sample_complex_gaussian(s, 3, 4);
    const CMatrix UH = build_input_beamformer(Scheme::ZF, H, 1.0, 1) * H;
    const CMatrix GV = G * build_output_beamformer(Scheme::ZF, G, 1.0, 4);
    CHECK((UH - CMatrix::Identity(3, 3)).norm() < 1e-10);
    CHECK((GV - CMatrix::Identity(3, 3)).norm() < 1e-10);
  }
}

TEST_CASE("L-MMSE limits") {
  RandomStream s(2, 0);
  const CMatrix H = sample_complex_gaussian(s, 3, 2);
  const CMatrix G = sample_complex_gaussian(s, 2, 3);

  CHECK(rel(build_input_beamformer(Scheme::LMMSE, H, 1e8, 1), build_input_beamformer(Scheme::ZF, H, 1e8, 1)) < 1e-6);
  CHECK(rel(build_input_beamformer(Scheme::LMMSE, H, 1e6, 1), build_input_beamformer(Scheme::ZF, H, 1e6, 1)) < 1e-3);
  CHECK(rel(build_output_beamformer(Scheme::LMMSE, G, 1e6, 3), build_output_beamformer(Scheme::ZF, G, 1e6, 3)) <
        1e-3);

  const double p_r = 1e-8;
  const CMatrix V = build_output_beamformer(Scheme::LMMSE, G, p_r, 3) * (3.0 / p_r);
  CHECK(rel(V, G.adjoint()) < 1e-6);

  // Normalized estimates: L-MMSE rows align with MF rows as p_s -> 0.
  const CMatrix Ul = build_input_beamformer(Scheme::LMMSE, H, 1e-9, 1);
  const CMatrix Um = build_input_beamformer(Scheme::MF, H, 1e-9, 1);
  for (int j = 0; j < 2; ++j) {
    const double corr = std::abs(Ul.row(j).dot(Um.row(j))) / (Ul.row(j).norm() * Um.row(j).norm());
    CHECK(corr > 1.0 - 1e-6);
  }
}

TEST_CASE("degenerate Gram matrices are rejected") {
  CMatrix H(2, 2);
  H << 1.0, 1.0, 2.0, 2.0;
  CHECK_THROWS_AS(build_input_beamformer(Scheme::ZF, H, 1.0, 1), DegenerateDrawError);
  CHECK_THROWS_AS(build_output_beamformer(Scheme::ZF, H.transpose(), 1.0, 2), DegenerateDrawError);
  CHECK_NOTHROW(build_input_beamformer(Scheme::MF, H, 1.0, 1));
}

TEST_CASE("relay transform matches its sum form") {
  NetworkConfig cfg;
  cfg.K = 3;
  cfg.L = 2;
  cfg.M = 2;
  cfg.N = 5;
  for (Scheme scheme : {Scheme::MF, Scheme::ZF, Scheme::LMMSE}) {
    cfg.scheme = scheme;
    const PowerAllocation alloc{0.7, 1.3};
    RandomStream s(3, 0);
    const auto real = draw_realization(cfg, s);
    const auto bf = build_beamformers(scheme, real, alloc);
    for (int k = 0; k < cfg.K; ++k) {
      CMatrix sum = CMatrix::Zero(cfg.N, cfg.N);
      const CMatrix H = stack_first_hop(real, k);
      for (int j = 0; j < 4; ++j) {
        const double c = normalization_scalar(bf.U[k].row(j), H, alloc.p_s, cfg.M);
        CHECK(c > 0.0);
        CHECK(c == doctest::Approx(bf.c(k, j)).epsilon(1e-12));
        sum += bf.V[k].col(j) / bf.V[k].col(j).norm() * bf.U[k].row(j) / c;
      }
      sum *= std::sqrt(alloc.p_r) / 4.0;
      CHECK(rel(bf.A[k], sum) < 1e-12);
    }
  }
}

TEST_CASE("relay power: single stream uses the full budget") {
  const CMatrix one = scalar(1.0);
  for (Scheme scheme : {Scheme::MF, Scheme::ZF, Scheme::LMMSE}) {
    const CMatrix U = build_input_beamformer(scheme, one, 1.0, 1);
    const CMatrix V = build_output_beamformer(scheme, one, 1.0, 1);
    Eigen::VectorXd c(1);
    c << normalization_scalar(U.row(0), one, 1.0, 1);
    const CMatrix A = compose_relay_transform(U, V, c, 1.0, 1, 1);
    CHECK(relay_transmit_power(A, one, 1.0, 1) == doctest::Approx(1.0).epsilon(1e-14));
  }
}

TEST_CASE("relay power: two orthonormal uncorrelated estimates use p_r / LM") {
  const CMatrix I = CMatrix::Identity(2, 2);
  const double p_s = 3.0, p_r = 5.0;
  const CMatrix U = build_input_beamformer(Scheme::MF, I, p_s, 1);
  const CMatrix V = build_output_beamformer(Scheme::MF, I, p_r, 2);
  Eigen::VectorXd c(2);
  for (int j = 0; j < 2; ++j) c(j) = normalization_scalar(U.row(j), I, p_s, 1);
  const CMatrix A = compose_relay_transform(U, V, c, p_r, 2, 1);
  CHECK(relay_transmit_power(A, I, p_s, 1) == doctest::Approx(p_r / 2.0).epsilon(1e-14));
}

TEST_CASE("relay power never exceeds p_r") {
  NetworkConfig cfg;
  RandomStream snr(4, 99);
  for (Scheme scheme : {Scheme::MF, Scheme::ZF, Scheme::LMMSE}) {
    cfg.scheme = scheme;
    for (int t = 0; t < 1000; ++t) {
      cfg.snr_db = snr.uniform(-20.0, 40.0);
      const PowerAllocation alloc = allocation_for(cfg);
      const auto sample = draw_trial(cfg, static_cast<std::uint64_t>(t), alloc);
      for (int k = 0; k < cfg.K; ++k) {
        const double p = relay_transmit_power(sample.bf.A[k], stack_first_hop(sample.real, k), alloc.p_s, cfg.M);
        CHECK(p <= alloc.p_r * (1.0 + 1e-10));
      }
    }
  }
}
