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
#include <stdexcept>

#include "doctest.h"
#include "mrn/asymptotics.hpp"
#include "mrn/config.hpp"
#include "mrn/random.hpp"

using namespace mrn;

namespace {

NetworkConfig make(int K, int L, double snr_db, std::optional<double> beta, Scheme s = Scheme::ZF) {
  NetworkConfig c;
  c.K = K;
  c.L = L;
  c.snr_db = snr_db;
  c.beta = beta;
  c.scheme = s;
  return c;
}

}  // namespace

TEST_CASE("power split examples") {
  auto a = resolve_power_allocation(make(10, 2, 0.0, 0.2));
  CHECK(a.p_s == doctest::Approx(0.5));
  CHECK(a.p_r == doctest::Approx(0.1));

  a = resolve_power_allocation(make(1, 1, 0.0, 1.0));
  CHECK(a.p_s == doctest::Approx(1.0));
  CHECK(a.p_r == doctest::Approx(1.0));

  a = resolve_power_allocation(make(10, 2, 0.0, std::nullopt, Scheme::CUTSET));
  CHECK(a.p_s == doctest::Approx(1.0));
  CHECK(a.p_r == 0.0);

  a = resolve_power_allocation(make(0, 2, 20.0, std::nullopt, Scheme::DIRECT));
  CHECK(a.p_s == doctest::Approx(50.0));
}

TEST_CASE("power identity holds for random relay configurations") {
  RandomStream s(3, 0);
  for (int i = 0; i < 1000; ++i) {
    NetworkConfig c = make(1 + static_cast<int>(s.uniform() * 50), 1 + static_cast<int>(s.uniform() * 4),
                           s.uniform(-30.0, 50.0), s.uniform() < 0.5 ? std::optional<double>(s.uniform(0.01, 10.0))
                                                                      : std::nullopt);
    c.N = c.L * c.M + 1;
    const auto a = resolve_power_allocation(c, auto_beta_hint(c));
    const double lhs = c.L * a.p_s + c.K * a.p_r;
    CHECK(std::abs(lhs / (2.0 * c.snr()) - 1.0) < 1e-12);
  }
}

TEST_CASE("bursty allocation scales in-burst power") {
  const auto a = resolve_power_allocation(make(10, 2, 0.0, 0.2)).in_burst(0.25);
  CHECK(a.p_s == doctest::Approx(2.0));
  CHECK(a.p_r == doctest::Approx(0.4));
}

TEST_CASE("automatic beta") {
  NetworkConfig c = make(10, 2, -10.0, std::nullopt);
  BetaHint h = auto_beta_hint(c);
  CHECK(h.regime == SnrRegime::Low);
  auto a = resolve_power_allocation(c, h);
  CHECK(a.p_r / a.p_s == doctest::Approx(0.2));

  c.snr_db = 20.0;
  c.N = 4;  // ZF Gamma shape 3, theta2 = 3/2
  h = auto_beta_hint(c);
  REQUIRE(h.theta2);
  CHECK(*h.theta2 == doctest::Approx(1.5));
  a = resolve_power_allocation(c, h);
  CHECK(a.p_r / a.p_s == doctest::Approx(std::sqrt(8.0 / (100.0 * 1.5))));

  c.N = 2;  // shape 1: theta2 infinite, falls back to L/K
  h = auto_beta_hint(c);
  CHECK_FALSE(h.theta2);
  a = resolve_power_allocation(c, h);
  CHECK(a.p_r / a.p_s == doctest::Approx(0.2));

  c.beta = 3.0;
  a = resolve_power_allocation(c, h);
  CHECK(a.p_r / a.p_s == doctest::Approx(3.0));
}

TEST_CASE("configuration validation") {
  NetworkConfig c;
  CHECK_NOTHROW(c.validate());
  c.N = 1;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c.scheme = Scheme::MF;
  CHECK_NOTHROW(c.validate());
  c.K = 0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c.scheme = Scheme::DIRECT;
  CHECK_NOTHROW(c.validate());
  c.alpha = 0.0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c.alpha = 1.5;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c.alpha = 1.0;
  c.beta = -1.0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  CHECK_THROWS_AS(resolve_power_allocation(make(0, 2, 0.0, 1.0)), std::invalid_argument);
  CHECK_THROWS_AS(PathLossModel::uniform(0.0, 1.0, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(PathLossModel::uniform(2.0, 1.0, 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("scheme names and dB conversion") {
  CHECK(parse_scheme("lmmse") == Scheme::LMMSE);
  CHECK(parse_scheme("L-MMSE") == Scheme::LMMSE);
  CHECK(parse_scheme("Cutset") == Scheme::CUTSET);
  CHECK_THROWS_AS(parse_scheme("foo"), std::invalid_argument);
  for (Scheme s : {Scheme::MF, Scheme::ZF, Scheme::LMMSE, Scheme::DIRECT, Scheme::CUTSET})
    CHECK(parse_scheme(to_string(s)) == s);
  CHECK(db_to_linear(20.0) == doctest::Approx(100.0));
  CHECK(linear_to_db(0.5) == doctest::Approx(-3.0103).epsilon(1e-4));
}

TEST_CASE("path-loss moments") {
  const auto u = PathLossModel::uniform(1.0, 3.0, 0.5, 2.0);
  CHECK(u.mean_e() == doctest::Approx(2.0));
  CHECK(u.mean_inv_e() == doctest::Approx(std::log(3.0) / 2.0));
  CHECK(u.mean_sqrt_f() == doctest::Approx((2.0 / 3.0) * (std::pow(2.0, 1.5) - std::pow(0.5, 1.5)) / 1.5));
  const auto c = PathLossModel::constant(3.0, -3.0);
  CHECK(c.mean_e() == doctest::Approx(db_to_linear(3.0)));
  CHECK(c.mean_sqrt_f() == doctest::Approx(std::sqrt(db_to_linear(-3.0))));
}
