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
#include <sstream>

#include <Eigen/SVD>

#include "doctest.h"
#include "mrn/channel.hpp"

using namespace mrn;

namespace {

NetworkConfig dims(int K, int L, int M, int N) {
  NetworkConfig c;
  c.K = K;
  c.L = L;
  c.M = M;
  c.N = N;
  return c;
}

}  // namespace

TEST_CASE("realization shapes and constant path loss") {
  RandomStream s(1, 0);
  const auto r = draw_realization(dims(2, 2, 1, 2), s);
  for (int k = 0; k < 2; ++k)
    for (int l = 0; l < 2; ++l) {
      CHECK(r.H(k, l).rows() == 2);
      CHECK(r.H(k, l).cols() == 1);
      CHECK(r.G(k, l).rows() == 1);
      CHECK(r.G(k, l).cols() == 2);
      CHECK(r.E(k, l) == 1.0);
      CHECK(r.F(k, l) == 1.0);
    }
}

TEST_CASE("mean Frobenius energy of H") {
  const NetworkConfig c = dims(1, 1, 1, 2);
  double acc = 0.0;
  constexpr int n = 100000;
  for (int t = 0; t < n; ++t) {
    RandomStream s(2, static_cast<std::uint64_t>(t));
    acc += draw_realization(c, s).H(0, 0).squaredNorm();
  }
  CHECK(std::abs(acc / n - 2.0) < 0.02);
}

TEST_CASE("uniform path loss stays in range") {
  NetworkConfig c = dims(20, 3, 1, 2);
  c.pathloss = PathLossModel::uniform(0.5, 2.0, 0.25, 1.0);
  RandomStream s(3, 0);
  const auto r = draw_realization(c, s);
  for (int k = 0; k < 20; ++k)
    for (int l = 0; l < 3; ++l) {
      CHECK(r.E(k, l) >= 0.5);
      CHECK(r.E(k, l) <= 2.0);
      CHECK(r.F(k, l) >= 0.25);
      CHECK(r.F(k, l) <= 1.0);
    }
}

TEST_CASE("stacking matches a hand-built layout") {
  ChannelRealization r(1, 2, 1, 2);
  r.H(0, 0) << std::complex<double>(1, 1), 2;
  r.H(0, 1) << 3, std::complex<double>(0, 4);
  r.G(0, 0) << 5, 6;
  r.G(0, 1) << 7, std::complex<double>(8, -1);
  r.E(0, 0) = 4.0;
  r.E(0, 1) = 9.0;
  r.F(0, 0) = 1.0;
  r.F(0, 1) = 0.25;

  const CMatrix H = stack_first_hop(r, 0);
  REQUIRE(H.rows() == 2);
  REQUIRE(H.cols() == 2);
  CHECK(H(0, 0) == std::complex<double>(2, 2));
  CHECK(H(1, 0) == std::complex<double>(4, 0));
  CHECK(H(0, 1) == std::complex<double>(9, 0));
  CHECK(H(1, 1) == std::complex<double>(0, 12));

  const CMatrix G = stack_second_hop(r, 0);
  REQUIRE(G.rows() == 2);
  REQUIRE(G.cols() == 2);
  CHECK(G(0, 0) == std::complex<double>(5, 0));
  CHECK(G(0, 1) == std::complex<double>(6, 0));
  CHECK(G(1, 0) == std::complex<double>(3.5, 0));
  CHECK(G(1, 1) == std::complex<double>(4, -0.5));
}

TEST_CASE("stacking with unit path loss is plain concatenation; L=1 is a scaled block") {
  RandomStream s(4, 0);
  const auto r = draw_realization(dims(3, 2, 2, 4), s);
  const CMatrix H = stack_first_hop(r, 1);
  CHECK(H.leftCols(2) == r.H(1, 0));
  CHECK(H.rightCols(2) == r.H(1, 1));
  const CMatrix G = stack_second_hop(r, 1);
  CHECK(G.topRows(2) == r.G(1, 0));
  CHECK(G.bottomRows(2) == r.G(1, 1));

  ChannelRealization one(1, 1, 2, 3);
  RandomStream s2(4, 1);
  one.H(0, 0) = sample_complex_gaussian(s2, 3, 2);
  one.G(0, 0) = sample_complex_gaussian(s2, 2, 3);
  one.E(0, 0) = 2.0;
  one.F(0, 0) = 3.0;
  CHECK((stack_first_hop(one, 0) - std::sqrt(2.0) * one.H(0, 0)).norm() < 1e-15);
  CHECK((stack_second_hop(one, 0) - std::sqrt(3.0) * one.G(0, 0)).norm() < 1e-15);
}

TEST_CASE("stacks have full rank when N >= LM") {
  const NetworkConfig c = dims(1, 2, 1, 2);
  for (int t = 0; t < 1000; ++t) {
    RandomStream s(5, static_cast<std::uint64_t>(t));
    const auto r = draw_realization(c, s);
    const Eigen::JacobiSVD<CMatrix> h(stack_first_hop(r, 0));
    const Eigen::JacobiSVD<CMatrix> g(stack_second_hop(r, 0));
    CHECK(h.singularValues().minCoeff() > 1e-8);
    CHECK(g.singularValues().minCoeff() > 1e-8);
  }
}

TEST_CASE("entries of distinct blocks are uncorrelated") {
  const NetworkConfig c = dims(2, 2, 1, 2);
  std::complex<double> c01 = 0, c_kk = 0, c_hg = 0;
  constexpr int n = 10000;
  for (int t = 0; t < n; ++t) {
    RandomStream s(6, static_cast<std::uint64_t>(t));
    const auto r = draw_realization(c, s);
    c01 += r.H(0, 0)(0, 0) * std::conj(r.H(0, 1)(0, 0));
    c_kk += r.H(0, 0)(1, 0) * std::conj(r.H(1, 0)(1, 0));
    c_hg += r.H(1, 1)(0, 0) * std::conj(r.G(1, 1)(0, 0));
  }
  CHECK(std::abs(c01) / n < 0.05);
  CHECK(std::abs(c_kk) / n < 0.05);
  CHECK(std::abs(c_hg) / n < 0.05);
}

TEST_CASE("realization dump round trip") {
  NetworkConfig c = dims(3, 2, 2, 4);
  c.pathloss = PathLossModel::uniform(0.5, 2.0, 0.25, 1.0);
  RandomStream s(7, 0);
  const auto r = draw_realization(c, s);
  for (DumpFormat f : {DumpFormat::Binary, DumpFormat::Text}) {
    std::stringstream ss;
    write_realization(ss, r, f);
    CHECK(read_realization(ss, f) == r);
  }
  std::stringstream bad("not a dump");
  CHECK_THROWS(read_realization(bad, DumpFormat::Binary));
}

TEST_CASE("direct channel draw") {
  NetworkConfig c = dims(0, 2, 1, 2);
  c.scheme = Scheme::DIRECT;
  RandomStream s(8, 0);
  const auto d = draw_direct(c, s);
  CHECK(d.xi.rows() == 2);
  CHECK(d.xi.cols() == 2);
}
