/**
 * Copyright 2026 The aqnn Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <doctest.h>

#include <cmath>

#include "aqnn/attractor.hpp"
#include "aqnn/error.hpp"
#include "aqnn/gardner.hpp"
#include "oracles.hpp"

using namespace aqnn;

namespace {

// Linear-domain evaluations with tgamma, independent of the library's lgamma path.
double v_cptp_direct(double d) {
  return std::pow(M_PI, d / 2.0) / std::tgamma(d / 2.0 + 1.0) * std::exp(-d / 4.0);
}

double v_aqnn_direct(double eps, double m, double d) {
  const double r = d - m;
  return std::pow(eps, m) * std::pow(M_PI, r / 2.0) / std::tgamma(r / 2.0 + 1.0) * std::exp(-r / 4.0);
}

}  // namespace

TEST_CASE("manifold dimension") {
  CHECK(manifold_dims(2).d == 12);
  CHECK(manifold_dims(4).d == 240);
  CHECK(manifold_dims(3).d == 72);
}

TEST_CASE("HS-random channels are CPTP") {
  SeedStream s(1);
  double acc = 0.0;
  constexpr int kSamples = 10000;
  double acc2 = 0.0;
  for (int k = 0; k < kSamples; ++k) {
    const ChoiMatrix e = sample_cptp({2, 2}, s);
    if (k < 200) {
      CHECK(std::abs(e.matrix().trace().real() - 2.0) < 1e-10);
      CHECK(is_psd(e.matrix(), 1e-10).min_eigenvalue >= -1e-10);
      CHECK((oracle::ptrace(e.matrix(), 2, 2, true) - ComplexMatrix::Identity(2, 2)).norm() < 1e-10);
    }
    const double x = e.matrix()(0, 0).real();
    acc += x;
    acc2 += x * x;
  }
  const double mean = acc / kSamples;
  const double sd = std::sqrt(acc2 / kSamples - mean * mean);
  CHECK(std::abs(mean - 0.5) < 3.0 * sd / std::sqrt(static_cast<double>(kSamples)));
}

TEST_CASE("stationarity indicator") {
  SeedStream s(2);
  const ChoiMatrix e = build_canonical(random_correlation_matrix(3, 2, s));
  for (double eps : {1e-6, 0.1, 1.0})
    for (std::size_t m = 0; m <= 3; ++m) CHECK(stationarity_indicator(e, m, eps));

  const ChoiMatrix dep = choi_depolarizing({2, 2});
  CHECK(dep.matrix()(0, 0).real() == doctest::Approx(0.5));
  CHECK_FALSE(stationarity_indicator(dep, 1, 0.5));
  CHECK(stationarity_indicator(dep, 2, 2.0));
  for (int k = 0; k < 50; ++k) CHECK(stationarity_indicator(sample_cptp({2, 2}, s), 2, 2.0));
}

TEST_CASE("Monte Carlo estimator") {
  GardnerConfig c;
  c.n = 2;
  c.m = 0;
  c.samples = 500;
  CHECK(estimate_relative_volume(c).fraction == 1.0);

  c.m = 3;
  CHECK_THROWS_AS(c.validate(), InvariantError);
  c.m = 1;
  c.epsilon = 0.0;
  CHECK_THROWS_AS(c.validate(), InvariantError);
  c.epsilon = 2.5;
  CHECK_THROWS_AS(c.validate(), InvariantError);

  // Nested events on a shared sample set.
  GardnerConfig base;
  base.n = 2;
  base.samples = 20000;
  base.master_seed = 77;
  const auto rows = estimate_sweep(base, {{1, 0.5}, {2, 0.5}, {1, 1.0}, {2, 1.0}});
  CHECK(rows[1].hits <= rows[0].hits);
  CHECK(rows[3].hits <= rows[2].hits);
  CHECK(rows[0].hits <= rows[2].hits);
  CHECK(rows[1].hits <= rows[3].hits);
  CHECK(rows[0].fraction - rows[1].fraction > 3.0 * rows[0].standard_error);

  // Thread-count independence.
  base.threads = 4;
  const auto again = estimate_sweep(base, {{1, 0.5}, {2, 0.5}, {1, 1.0}, {2, 1.0}});
  for (std::size_t i = 0; i < rows.size(); ++i) CHECK(again[i].hits == rows[i].hits);

  GardnerConfig z;
  z.n = 2;
  z.m = 2;
  z.epsilon = 0.01;
  z.samples = 300;
  const VolumeEstimate none = estimate_relative_volume(z);
  CHECK(none.hits == 0);
  CHECK(none.upper_bound_95 == doctest::Approx(3.0 / 300));
}

TEST_CASE("analytic volumes") {
  CHECK(analytic_v_cptp(12).value == doctest::Approx(v_cptp_direct(12)).epsilon(1e-12));
  CHECK(std::abs(analytic_v_cptp(12).value - 0.066476) < 1e-5);
  CHECK(std::abs(analytic_v_cptp(2).value - 1.9055) < 1e-4);
  for (double d = 1; d <= 50; d += 1) {
    const LogValue v = analytic_v_cptp(d);
    CHECK(std::exp(v.log_value) == doctest::Approx(v.value).epsilon(1e-12));
    CHECK(v.value == doctest::Approx(v_cptp_direct(d)).epsilon(1e-10));
  }

  CHECK(analytic_v_aqnn(0.1, 2, 12).value == doctest::Approx(v_aqnn_direct(0.1, 2, 12)).epsilon(1e-12));
  CHECK(analytic_v_aqnn(0.1, 2, 12).value == doctest::Approx(0.01 * std::pow(M_PI, 5) / 120 * std::exp(-2.5)));
  CHECK(analytic_v_aqnn(0.3, 0, 12).value == doctest::Approx(analytic_v_cptp(12).value).epsilon(1e-12));
}

TEST_CASE("relative volume") {
  const RelativeVolume vr = analytic_relative_volume(0.1, 2, 12);
  CHECK(std::abs(vr.value - 0.031489) < 1e-5);
  CHECK(vr.value == doctest::Approx(0.06 * std::exp(0.5) / M_PI).epsilon(1e-12));
  CHECK(vr.valid);
  for (double eps : {0.05, 0.2, 0.7})
    for (double k : {1.0, 2.0, 5.0}) {
      const double ratio = analytic_v_aqnn(eps, k, 30).value / analytic_v_cptp(30).value;
      CHECK(analytic_relative_volume(eps, k, 30).value == doctest::Approx(ratio).epsilon(1e-12));
    }
  const RelativeVolume big = analytic_relative_volume(2.0, 1, 12);
  CHECK(big.value > 1.0);
  CHECK_FALSE(big.valid);
}

TEST_CASE("Stirling form and optimum") {
  for (double d : {12.0, 240.0, 1e4})
    for (double m : {1.0, 2.0, 7.0}) {
      const double eps = optimal_epsilon(d);
      CHECK(analytic_log_vr_stirling(eps, m, d) == doctest::Approx(-m * m / (4 * d)).epsilon(1e-12));
    }
  CHECK(optimal_epsilon(12) == doctest::Approx(std::exp(-0.25) * std::sqrt(2 * M_PI / 12)));
  const double gap = std::abs(analytic_log_vr_stirling(0.01, 10, 1e4) - analytic_relative_volume(0.01, 10, 1e4).log_value);
  CHECK(gap < 0.05);
  CHECK(analytic_log_vr_stirling(0.3, 0, 12) == 0.0);

  CHECK(std::abs(vr_optimal(10, 100) - 0.778801) < 1e-6);
  CHECK(vr_optimal(2, 12) == doctest::Approx(std::exp(-1.0 / 12)));
  CHECK(std::abs(vr_optimal(2, 12) - 0.92004) < 1e-5);
  CHECK(vr_optimal(0, 12) == 1.0);
}

TEST_CASE("capacity table") {
  const auto rows = capacity_table(1, 6);
  REQUIRE(rows.size() == 6);
  CHECK(rows[0].n == 2);
  CHECK(rows[0].d == 12);
  CHECK(rows[1].n == 4);
  CHECK(rows[1].d == 240);
  CHECK(std::abs(vr_optimal(2, 240) - 0.99584) < 1e-5);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const double n = std::pow(2.0, rows[i].qubits);
    CHECK(rows[i].m_max == rows[i].n);
    CHECK(rows[i].vr == doctest::Approx(std::exp(-n / (4 * (n * n * n * n - n * n)))).epsilon(1e-12));
    if (i > 0) {
      CHECK(rows[i].n > rows[i - 1].n);
      CHECK(rows[i].d > rows[i - 1].d);
      CHECK(rows[i].vr > rows[i - 1].vr);
    }
  }
}
