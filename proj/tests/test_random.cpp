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
#include <numeric>
#include <vector>
#include <stdexcept>

#include "doctest.h"
#include "mrn/link.hpp"
#include "mrn/parallel.hpp"
#include "mrn/random.hpp"
#include "mrn/stats.hpp"

using namespace mrn;

TEST_CASE("philox4x32-10 known answers") {
  using A4 = std::array<std::uint32_t, 4>;
  CHECK(philox4x32_10({0, 0, 0, 0}, {0, 0}) == A4{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
  CHECK(philox4x32_10({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}) ==
        A4{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
  CHECK(philox4x32_10({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}) ==
        A4{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
}

TEST_CASE("streams are reproducible and distinct") {
  RandomStream a(7, 3), b(7, 3), c(7, 4), d(8, 3);
  const CMatrix ma = sample_complex_gaussian(a, 4, 3);
  CHECK(ma == sample_complex_gaussian(b, 4, 3));
  CHECK(ma != sample_complex_gaussian(c, 4, 3));
  CHECK(ma != sample_complex_gaussian(d, 4, 3));
}

TEST_CASE("uniform draws stay inside the open unit interval") {
  RandomStream s(1, 0);
  double lo = 1.0, hi = 0.0, sum = 0.0;
  constexpr int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double u = s.uniform();
    lo = std::min(lo, u);
    hi = std::max(hi, u);
    sum += u;
  }
  CHECK(lo > 0.0);
  CHECK(hi < 1.0);
  CHECK(sum / n == doctest::Approx(0.5).epsilon(0.005));
}

TEST_CASE("complex gaussian moments") {
  RandomStream s(11, 0);
  const CMatrix m = sample_complex_gaussian(s, 1000, 1000);
  const std::complex<double> mean = m.mean();
  CHECK(std::abs(mean) < 4e-3);
  CHECK(m.cwiseAbs2().mean() == doctest::Approx(1.0).epsilon(0.005));
}

TEST_CASE("real part of complex gaussian passes KS against N(0, 1/2)") {
  RandomStream s(20240611, 0);
  std::vector<double> re;
  for (int i = 0; i < 100000; ++i) re.push_back(s.complex_normal().real());
  const auto ks = stats::ks_test(re, [](double x) { return stats::normal_cdf(x, 0.0, std::sqrt(0.5)); }, 0.01);
  CHECK(ks.pass);
}

TEST_CASE("gamma sampler moments") {
  RandomStream s(5, 0);
  constexpr int n = 1000000;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) sum += sample_gamma(s, 1);
  CHECK(std::abs(sum / n - 1.0) < 0.005);

  for (int shape : {2, 4}) {
    double acc = 0.0;
    constexpr int m = 100000;
    for (int i = 0; i < m; ++i) acc += sample_gamma(s, shape);
    CHECK(std::abs(acc / m - shape) < 5.0 * std::sqrt(static_cast<double>(shape) / m));
  }
}

TEST_CASE("gamma shape 3 median") {
  // CDF of Gamma(3): 1 - e^{-x}(1 + x + x^2/2), inverted by bisection.
  auto cdf = [](double x) { return 1.0 - std::exp(-x) * (1.0 + x + 0.5 * x * x); };
  double lo = 0.0, hi = 20.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (cdf(mid) < 0.5 ? lo : hi) = mid;
  }
  RandomStream s(9, 1);
  int below = 0;
  constexpr int n = 100000;
  for (int i = 0; i < n; ++i) below += sample_gamma(s, 3) <= lo;
  CHECK(std::abs(static_cast<double>(below) / n - 0.5) < 0.01);
}

TEST_CASE("trial results do not depend on the worker count") {
  NetworkConfig cfg;
  cfg.trials = 300;
  cfg.snr_db = 10.0;
  cfg.seed = 42;
  const auto one = [&] {
    set_worker_count(1);
    return collect_sirs(cfg);
  }();
  set_worker_count(3);
  const auto three = collect_sirs(cfg);
  set_worker_count(0);
  CHECK(one == three);
}

TEST_CASE("parallel_for propagates exceptions") {
  CHECK_THROWS_AS(parallel_for(
                      10, [](std::int64_t i) {
                        if (i == 7) throw std::runtime_error("boom");
                      },
                      4),
                  std::runtime_error);
}
