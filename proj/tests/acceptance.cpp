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

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "mrn/verify.hpp"

using nlohmann::json;

namespace {

struct Criterion {
  int number;
  const char* check;
  double budget_seconds;
  std::function<bool(const json&, std::string&)> accept;
};

double lowsnr_root() {
  double lo = 0.5, hi = 3.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (mid - 2.0 * (1.0 - std::exp(-mid)) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

bool within(double x, double target, double tol) { return std::abs(x - target) <= tol; }

std::vector<Criterion> criteria() {
  std::vector<Criterion> c;

  c.push_back({1, "zf-cancel", 1.0, [](const json& m, std::string& why) {
                 const double worst = m.at("max_interference_to_signal");
                 why = "max ISR " + num(worst) + " (< 1e-20)";
                 return worst < 1e-20;
               }});

  c.push_back({2, "sir-scaling", 60.0, [](const json& m, std::string& why) {
                 const std::vector<double> med = m.at("median_sir_db");
                 const double direct = m.at("direct_median_sir_db");
                 double sx = 0, sy = 0, sxx = 0, sxy = 0;
                 for (std::size_t i = 0; i < med.size(); ++i) {
                   const double x = static_cast<double>(i);
                   sx += x, sy += med[i], sxx += x * x, sxy += x * med[i];
                 }
                 const double n = static_cast<double>(med.size());
                 const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
                 double lowest = med.at(0);
                 for (double v : med) lowest = std::min(lowest, v);
                 const double gap = lowest - direct;
                 why = "slope " + num(slope) + " dB/doubling (3.01 +/- 0.5), direct gap " + num(gap) + " dB (> 10)";
                 return med.size() == 5 && within(slope, 3.01, 0.5) && gap > 10.0;
               }});

  c.push_back({3, "lowsnr-mf", 300.0, [](const json& m, std::string& why) {
                 const double snr = 0.01, K = 256, L = 2, M = 1, N = 2;
                 const double g = std::tgamma(N + 0.5) / std::tgamma(N);
                 const double theta1 = g * g;
                 const double predicted = snr * snr * K * theta1 * theta1 / (L * L * L * M * M * M);
                 const double mean = m.at("mean_sir");
                 why = "mean SIR " + num(mean) + " vs " + num(predicted) + " (rel. error " +
                       num(mean / predicted - 1.0) + ", tolerance 0.15)";
                 return std::abs(mean / predicted - 1.0) <= 0.15;
               }});

  c.push_back({4, "cstar", 1.0, [](const json& m, std::string& why) {
                 const double x = lowsnr_root();
                 const double ref_c = x / (2.0 * std::numbers::ln2);
                 bool ok = within(ref_c, 1.1495, 0.001);
                 std::size_t seen = 0;
                 for (const auto& row : m.at("numeric")) {
                   const double cs = row.at("c_star_per_stream"), k = row.at("constant");
                   ok = ok && within(cs, 1.1495, 0.001) && within(cs, ref_c, 0.001) && within(k, 2.97, 0.01);
                   ++seen;
                 }
                 why = "bisection root gives C*/LM " + num(ref_c) + "; " + std::to_string(seen) +
                       " numeric minimizations within 1.1495 +/- 0.001 and 2.97 +/- 0.01";
                 return ok && seen == 3;
               }});

  c.push_back({5, "highsnr-slopes", 300.0, [](const json& m, std::string& why) {
                 const double zf = m.at("ZF"), mmse = m.at("LMMSE"), cut = m.at("CUTSET"), mf = m.at("MF");
                 why = "ZF " + num(zf) + ", L-MMSE " + num(mmse) + ", cut-set " + num(cut) + " (1 +/- 0.15); MF " +
                       num(mf) + " (< 0.1)";
                 return within(zf, 1.0, 0.15) && within(mmse, 1.0, 0.15) && within(cut, 1.0, 0.15) && mf < 0.1;
               }});

  c.push_back({6, "k-scaling", 300.0, [](const json& m, std::string& why) {
                 const double d = m.at("ebn0_db_K10").get<double>() - m.at("ebn0_db_K20").get<double>();
                 why = "Eb/N0 at C=4 drops by " + num(d) + " dB from K=10 to K=20 (3.01 +/- 0.6)";
                 return within(d, 3.01, 0.6);
               }});

  c.push_back({7, "bursty-order", 300.0, [](const json& m, std::string& why) {
                 const json& e = m.at("ebn0_db_at_c0.2");
                 auto at = [&e](double alpha) {
                   for (const auto& [k, v] : e.items())
                     if (std::abs(std::stod(k) - alpha) < 1e-12) return v.get<double>();
                   throw std::out_of_range("no Eb/N0 for alpha " + num(alpha));
                 };
                 const double a = at(0.5), b = at(0.1), d = at(0.02);
                 const bool same = m.at("alpha1_identical");
                 why = "Eb/N0 at alpha 0.5, 0.1, 0.02: " + num(a) + ", " + num(b) + ", " + num(d) +
                       " dB (strictly decreasing); alpha=1 identical: " +
                       (same ? "yes" : "no");
                 return a > b && b > d && same;
               }});

  c.push_back({8, "gamma-ks", 30.0, [](const json& m, std::string& why) {
                 const double crit = 1.62762 / std::sqrt(10000.0);
                 bool ok = true;
                 for (const char* k : {"mf_N2", "zf_N2", "zf_N4"}) {
                   const double d = m.at(k).at("statistic");
                   why += std::string(why.empty() ? "" : ", ") + k + " D=" + num(d);
                   ok = ok && d < crit;
                 }
                 why += " (critical " + num(crit) + ")";
                 return ok;
               }});

  c.push_back({9, "awgn-figures", 1.0, [](const json& m, std::string& why) {
                 bool ok = true;
                 for (const char* k : {"callable", "sampled"}) {
                   const json& f = m.at(k);
                   const double s0 = f.at("s0"), emin = f.at("ebn0_min"), sinf = f.at("s_inf"), imp = f.at("ebn0_imp");
                   ok = ok && std::abs(s0 / 2.0 - 1.0) <= 0.02 && std::abs(emin / std::log(2.0) - 1.0) <= 0.02 &&
                        std::abs(sinf - 1.0) <= 0.02 && std::abs(imp - 1.0) <= 0.05;
                   why += std::string(why.empty() ? "" : "; ") + k + " S0 " + num(s0) + ", Eb/N0_min " + num(emin) +
                          ", S_inf " + num(sinf) + ", Eb/N0_imp " + num(imp);
                 }
                 return ok;
               }});

  c.push_back({10, "cutset-dominance", 600.0, [](const json& m, std::string& why) {
                 const int v = m.at("violations"), pts = m.at("points");
                 const double worst = m.at("smallest_margin_in_stderr");
                 why = std::to_string(v) + " violations over " + std::to_string(pts) +
                       " comparisons, smallest margin " + num(worst) + " stderr (> -3)";
                 return v == 0 && pts > 0 && worst > -3.0;
               }});

  c.push_back({11, "power", 10.0, [](const json& m, std::string& why) {
                 const double r = m.at("max_power_ratio");
                 why = "max transmit power / p_r = " + num(r) + " (<= 1 + 1e-10)";
                 return r <= 1.0 + 1e-10;
               }});

  c.push_back({12, "reconstruction", 10.0, [](const json& m, std::string& why) {
                 const double e = m.at("max_relative_error");
                 why = "max relative error " + num(e) + " (< 1e-10)";
                 return e < 1e-10;
               }});
  return c;
}

}  // namespace

int main() {
  int failures = 0;
  for (const Criterion& c : criteria()) {
    std::string why;
    bool pass = false;
    double seconds = 0.0;
    try {
      const auto t0 = std::chrono::steady_clock::now();
      const mrn::CheckResult r = mrn::run_check(c.check);
      seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      pass = c.accept(r.measured, why) && r.pass;
      if (seconds > c.budget_seconds) {
        pass = false;
        why += "; runtime over budget";
      }
    } catch (const std::exception& e) {
      why = std::string("error: ") + e.what();
    }
    failures += !pass;
    std::printf("%s [%d] %s: %s (%.2f s, budget %.0f s)\n", pass ? "PASS" : "FAIL", c.number, c.check, why.c_str(),
                seconds, c.budget_seconds);
    std::fflush(stdout);
  }
  std::printf("%d of 12 criteria passed\n", 12 - failures);
  return failures == 0 ? 0 : 1;
}
