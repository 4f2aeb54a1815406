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

// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "aqnn/attractor.hpp"
#include "aqnn/feedforward.hpp"
#include "aqnn/gardner.hpp"
#include "commands.hpp"
#include "oracles.hpp"

using namespace aqnn;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), f, x);
  return buf;
}

double max_offdiag_modulus(const ComplexMatrix& b) {
  double m = 0.0;
  for (long i = 0; i < b.rows(); ++i)
    for (long j = 0; j < b.cols(); ++j)
      if (i != j) m = std::max(m, std::abs(b(i, j)));
  return m;
}

// Smallest eigenvalue ignoring the exact zeros of the decoupled sectors; this
// is the one that crosses zero at sigma_max(X) = 1.
double min_support_eigenvalue(const ComplexMatrix& e) {
  const HermitianEigen eig = eig_hermitian(e);
  for (long i = 0; i < eig.values.size(); ++i)
    if (std::abs(eig.values(i)) > 1e-12) return eig.values(i);
  return 0.0;
}

ComplexMatrix classical_member(const ComplexMatrix& tinv, std::size_t n, SeedStream& s) {
  ComplexMatrix d = ComplexMatrix::Zero(n, n);
  for (std::size_t i = 0; i < n; ++i) d(i, i) = 0.05 + s.uniform();
  ComplexMatrix x = tinv * d * tinv.adjoint();
  x /= x.trace();
  return 0.5 * (x + x.adjoint());
}

Outcome criterion1() {
  const auto t0 = Clock::now();
  SeedStream s(1001);
  double worst_eig = 0.0, worst_tp = 0.0, worst_fix = 0.0;
  bool ok = true;
  for (std::size_t n : {2, 3, 4, 8}) {
    for (int t = 0; t < 20; ++t) {
      const ChoiMatrix e = build_canonical(random_correlation_matrix(n, n, s));
      const CptpReport r = verify_cptp(e);
      ok = ok && r.is_cptp();
      worst_eig = std::min(worst_eig, r.min_eigenvalue);
      worst_tp = std::max(worst_tp, r.tp_deviation);
      for (std::size_t mu = 0; mu < n; ++mu) {
        const ComplexMatrix p = PureState::basis(n, mu).projector();
        worst_fix = std::max(worst_fix, (apply_channel(e, p) - p).norm());
      }
    }
  }
  const double elapsed = seconds_since(t0);
  Outcome o;
  o.pass = ok && worst_eig >= -1e-9 && worst_tp <= 1e-10 && worst_fix <= 1e-10 && elapsed < 10.0;
  o.detail = "min eig " + fmt("%.2e", worst_eig) + ", tp dev " + fmt("%.2e", worst_tp) + ", fixed residual " +
             fmt("%.2e", worst_fix) + ", " + fmt("%.2f", elapsed) + " s";
  return o;
}

Outcome criterion2() {
  SeedStream s(1002);
  double worst = 0.0;
  for (std::size_t n : {2, 4, 8}) {
    for (int t = 0; t < 100; ++t) {
      const CorrelationMatrix b = random_correlation_matrix(n, 1 + t % n, s);
      const DensityMatrix rho = random_density_matrix(n, s);
      const ComplexMatrix got = apply_channel(build_canonical(b), rho.matrix());
      worst = std::max(worst, (got - oracle::entrywise(b.matrix(), rho.matrix())).cwiseAbs().maxCoeff());
    }
  }
  return {worst <= 1e-10, "max entry deviation " + fmt("%.2e", worst) + " over 300 pairs"};
}

Outcome criterion3() {
  SeedStream s(1003);
  int bad = 0, trials = 0;
  for (std::size_t n : {2, 3, 4, 5}) {
    for (int t = 0; t < 10; ++t) {
      CorrelationMatrix b = random_correlation_matrix(n, n, s);
      while (max_offdiag_modulus(b.matrix()) >= 0.95) b = random_correlation_matrix(n, n, s);
      ++trials;
      if (fixed_point_space(build_canonical(b), 1e-8).dimension != n) ++bad;
    }
  }
  return {bad == 0, std::to_string(trials - bad) + "/" + std::to_string(trials) + " trials with dimension N"};
}

Outcome criterion4() {
  SeedStream s(1004);
  double worst = 0.0;
  for (std::size_t n : {2, 4}) {
    for (int t = 0; t < 5; ++t) {
      const CorrelationMatrix b = random_correlation_matrix(n, n, s);
      const DensityMatrix rho = random_density_matrix(n, s);
      const ChoiMatrix e = build_canonical(b);
      ComplexMatrix cur = rho.matrix();
      for (int k = 1; k <= 100; ++k) {
        cur = apply_channel(e, cur);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const double expected = std::pow(std::abs(b.matrix()(i, j)), k) * std::abs(rho.matrix()(i, j));
            worst = std::max(worst, std::abs(std::abs(cur(i, j)) - expected));
          }
      }
    }
  }
  return {worst <= 1e-10, "max modulus deviation " + fmt("%.2e", worst) + " over k <= 100"};
}

Outcome criterion5() {
  SeedStream s(1005);
  double worst = 0.0, smallest_nontrivial = 1e300;
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 2 + t % 5;
    const CorrelationMatrix b = random_correlation_matrix(n, 1 + t % n, s);
    const ComplexVector c = random_pure_state(n, s).amplitudes();
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) acc += std::norm(b.matrix()(i, j) - 1.0) * std::norm(c(i)) * std::norm(c(j));
    const double brute = (apply_channel(build_canonical(b), c * c.adjoint()) - c * c.adjoint()).norm();
    const TrivialityCheck chk = check_triviality(b, c);
    worst = std::max({worst, std::abs(std::sqrt(acc) - brute), std::abs(chk.residual - brute)});
    smallest_nontrivial = std::min(smallest_nontrivial, chk.residual);
  }
  double ones = 0.0;
  for (std::size_t n : {2, 3, 5}) {
    const ComplexVector c = random_pure_state(n, s).amplitudes();
    ones = std::max(ones, check_triviality(CorrelationMatrix::all_ones(n), c).residual);
  }
  const bool pass = worst <= 1e-12 && smallest_nontrivial > 1e-9 && ones <= 1e-9;
  return {pass, "closed form vs brute force " + fmt("%.2e", worst) + ", smallest non-trivial residual " +
                    fmt("%.2e", smallest_nontrivial) + ", all-ones residual " + fmt("%.2e", ones)};
}

Outcome criterion6() {
  const auto t0 = Clock::now();
  GardnerConfig base;
  base.n = 2;
  base.samples = 100000;
  base.master_seed = 2026;
  base.threads = 1;
  const std::vector<double> eps{0.05, 0.1, 0.2};
  std::vector<std::pair<std::size_t, double>> points;
  for (std::size_t m : {1, 2})
    for (double e : eps) points.emplace_back(m, e);
  const auto serial = estimate_sweep(base, points);
  const double elapsed = seconds_since(t0);
  base.threads = 4;
  const auto parallel = estimate_sweep(base, points);
  bool identical = true;
  for (std::size_t i = 0; i < serial.size(); ++i) identical = identical && serial[i].hits == parallel[i].hits;

  Outcome o;
  o.pass = identical && elapsed < 120.0;
  std::ostringstream detail;
  for (std::size_t mi = 0; mi < 2; ++mi) {
    const double m = static_cast<double>(mi + 1);
    detail << "M=" << mi + 1 << " fractions";
    bool all_hit = true;
    for (std::size_t k = 0; k < 3; ++k) {
      detail << ' ' << serial[mi * 3 + k].fraction;
      all_hit = all_hit && serial[mi * 3 + k].hits > 0;
    }
    if (!all_hit) {
      detail << " (zero hits, 95% bound " << 3.0 / base.samples << "; slope undefined); ";
      o.pass = false;
      continue;
    }
    // Least-squares slope of log fraction against log epsilon.
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t k = 0; k < 3; ++k) {
      const double x = std::log(eps[k]), y = std::log(serial[mi * 3 + k].fraction);
      sx += x, sy += y, sxx += x * x, sxy += x * y;
    }
    const double slope = (3 * sxy - sx * sy) / (3 * sxx - sx * sx);
    detail << " slope " << fmt("%.3f", slope) << " (target " << m << " +- 0.15); ";
    o.pass = o.pass && std::abs(slope - m) <= 0.15;
  }
  detail << (identical ? "parallel identical" : "PARALLEL MISMATCH") << ", " << fmt("%.1f", elapsed) << " s";
  o.detail = detail.str();
  return o;
}

Outcome criterion7() {
  GardnerConfig base;
  base.n = 2;
  base.samples = 20000;
  base.master_seed = 7;
  base.threads = 4;
  const std::vector<double> eps{0.1, 0.25, 0.5, 1.0, 2.0};
  std::vector<std::pair<std::size_t, double>> points;
  for (std::size_t m = 0; m <= 2; ++m)
    for (double e : eps) points.emplace_back(m, e);
  const auto rows = estimate_sweep(base, points);
  bool ok = true;
  for (std::size_t m = 0; m <= 2; ++m)
    for (std::size_t k = 0; k < eps.size(); ++k) {
      const auto& r = rows[m * eps.size() + k];
      if (m > 0) ok = ok && r.fraction <= rows[(m - 1) * eps.size() + k].fraction;
      if (k > 0) ok = ok && r.fraction >= rows[m * eps.size() + k - 1].fraction;
    }
  return {ok, "15-point grid, M in 0..2, epsilon 0.1..2, shared 20000 samples"};
}

Outcome criterion8() {
  const double v = analytic_v_cptp(12).value;
  const double vr = analytic_relative_volume(0.1, 2, 12).value;
  const double opt = vr_optimal(10, 100);
  double worst_cancel = 0.0;
  for (double d : {12.0, 240.0, 4032.0})
    for (double m : {1.0, 2.0, 8.0})
      worst_cancel = std::max(worst_cancel, std::abs(analytic_log_vr_stirling(optimal_epsilon(d), m, d) + m * m / (4 * d)));
  const bool pass = std::abs(v - 0.066476) <= 1e-5 && std::abs(vr - 0.031489) <= 1e-5 &&
                    std::abs(opt - 0.778801) <= 1e-6 && worst_cancel <= 1e-15;
  return {pass, "V_CPTP(12)=" + fmt("%.6f", v) + ", V_R(0.1,2,12)=" + fmt("%.6f", vr) + ", vr_opt(M^2=d)=" +
                    fmt("%.6f", opt) + ", cancellation gap " + fmt("%.1e", worst_cancel)};
}

Outcome criterion9() {
  SeedStream s(1009);
  int detected = 0, rejected = 0, fixed_ok = 0;
  double worst_resid = 0.0, min_comm = 1e300, worst_fix = 0.0;
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 2 + t % 5, m = 2 + t % 9;
    const bool unitary = t % 2 == 0;
    const ComplexMatrix t0 = unitary ? haar_unitary(n, s) : random_ginibre(n, n, s);
    const ComplexMatrix tinv = t0.inverse();
    std::vector<DensityMatrix> members;
    for (std::size_t k = 0; k < m; ++k) members.push_back(DensityMatrix::from_matrix(classical_member(tinv, n, s)));
    const ClassicalEnsembleReport r = detect_classical_ensemble(members);
    if (r.is_classical && r.diagonalization_residual < 1e-8) ++detected;
    worst_resid = std::max(worst_resid, r.diagonalization_residual);
    if (unitary) {
      if (!r.is_classical) continue;
      const CandidateChannel c = build_mixed_attractor(r, random_correlation_matrix(n, n, s));
      double w = 0.0;
      for (const auto& rho : members) w = std::max(w, (apply_channel(c.choi, rho.matrix()) - rho.matrix()).norm());
      worst_fix = std::max(worst_fix, w);
      if (w <= 1e-10 && c.report.is_cptp()) ++fixed_ok;
    }
  }
  // Two full-rank states are always jointly congruence-diagonalizable, so a
  // non-classical ensemble needs at least three members.
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 2 + t % 5, m = 3 + t % 8;
    std::vector<DensityMatrix> members;
    for (std::size_t k = 0; k < m; ++k) members.push_back(random_density_matrix(n, s));
    const ClassicalEnsembleReport r = detect_classical_ensemble(members);
    if (!r.is_classical && r.max_commutator_norm > 1e-3) ++rejected;
    min_comm = std::min(min_comm, r.max_commutator_norm);
  }
  const bool pass = detected == 50 && rejected == 50 && fixed_ok == 25;
  return {pass, std::to_string(detected) + "/50 detected (worst residual " + fmt("%.1e", worst_resid) + "), " +
                    std::to_string(rejected) + "/50 rejected (min commutator " + fmt("%.2e", min_comm) + "), " +
                    std::to_string(fixed_ok) + "/25 unitary ensembles fixed (worst " + fmt("%.1e", worst_fix) + ")"};
}

Outcome criterion10() {
  SeedStream s(1010);
  bool ok = true;
  double below = 0.0, above = 0.0;
  for (std::size_t n : {2, 4, 8}) {
    const std::size_t m0 = n / 2;
    const ComplexMatrix g = random_ginibre(m0, n - m0, s);
    Eigen::JacobiSVD<ComplexMatrix> svd(g);
    const ComplexMatrix unit = g / svd.singularValues()(0);
    const ComplexMatrix e_below = assemble_perceptron_choi(n, m0, 0.999 * unit);
    const ComplexMatrix e_above = assemble_perceptron_choi(n, m0, 1.001 * unit);
    below = min_support_eigenvalue(e_below);
    above = min_support_eigenvalue(e_above);
    const bool cp_below = verify_cptp(ChoiMatrix({n, 2}, e_below)).is_cptp();
    const bool cp_above = verify_cptp(ChoiMatrix({n, 2}, e_above)).is_cptp();
    ok = ok && below > 0.0 && above < 0.0 && cp_below && !cp_above;

    PerceptronSpec spec;
    spec.input_dim = n;
    spec.m0 = m0;
    spec.x = unit * s.uniform();
    const ChoiMatrix e = build_perceptron_canonical(spec);
    const std::array<DensityMatrix, 2> labels{DensityMatrix::from_pure(PureState::basis(2, 0)),
                                              DensityMatrix::from_pure(PureState::basis(2, 1))};
    for (std::size_t mu = 0; mu < n; ++mu) {
      const Classification c = classify(e, DensityMatrix::from_pure(PureState::basis(n, mu)), labels);
      ok = ok && c.label == (mu < m0 ? 0 : 1) && std::abs(c.confidence - 1.0) <= 1e-10;
    }
  }
  return {ok, "smallest nonzero Choi eigenvalue " + fmt("%.2e", below) + " at 0.999, " + fmt("%.2e", above) +
                  " at 1.001; all patterns classified with confidence 1"};
}

Outcome criterion11() {
  SeedStream s(1011);
  int good = 0, good_prod = 0;
  for (std::size_t n : {2, 3})
    for (int t = 0; t < 100; ++t) {
      if (operator_rank(reduced_states(random_bipartite_operator_basis(n, s, 0), n)) == n * n) ++good;
      if (operator_rank(reduced_states(product_vector_basis(n, s, 0), n)) == n * n) ++good_prod;
    }
  return {good == 200 && good_prod == 200,
          std::to_string(good) + "/200 entangled, " + std::to_string(good_prod) + "/200 product bases full rank"};
}

Outcome criterion12() {
  SeedStream s(1012);
  double worst_rel = 0.0, worst_oracle = 0.0;
  bool cptp = true;
  for (std::size_t n : {2, 3})
    for (int t = 0; t < 5; ++t) {
      const auto basis = orthonormalize(random_bipartite_operator_basis(n, s));
      const CompositeMap map = build_feedforward_map(basis, random_correlation_matrix(n * n, n * n, s));
      cptp = cptp && map.report.is_cptp() && map.relations.size() == n * n;
      for (const auto& r : map.relations) worst_rel = std::max(worst_rel, r.residual);
      for (int k = 0; k < 5; ++k) {
        const ComplexMatrix rho = random_density_matrix(n * n, s).matrix();
        const ComplexMatrix expected = oracle::ptrace(apply_channel(map.attractor, rho), n, n, true);
        worst_oracle = std::max(worst_oracle, (apply_channel(map.choi, rho) - expected).norm());
      }
    }
  return {cptp && worst_rel < 1e-10 && worst_oracle <= 1e-10,
          "worst relation residual " + fmt("%.2e", worst_rel) + ", oracle deviation " + fmt("%.2e", worst_oracle)};
}

Outcome criterion13() {
  std::vector<std::string> outputs;
  for (const char* threads : {"1", "4", "8"}) {
    std::ostringstream out, err;
    const int code = cli::run({"--seed", "13", "--threads", threads, "gardner", "mc", "--N", "2", "--M", "1",
                               "--epsilon", "0.1", "--samples", "100000"},
                              out, err);
    if (code != 0) return {false, "gardner mc exited with " + std::to_string(code) + ": " + err.str()};
    outputs.push_back(out.str());
  }
  const bool same = outputs[0] == outputs[1] && outputs[1] == outputs[2];
  return {same, same ? "CSV byte-identical under 1, 4 and 8 threads" : "CSV differs across thread counts"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"attractor storage", criterion1},
      {"entrywise action", criterion2},
      {"fixed-point dimension", criterion3},
      {"coherence decay", criterion4},
      {"triviality residual", criterion5},
      {"gardner epsilon scaling", criterion6},
      {"gardner monotonicity", criterion7},
      {"analytic formulas", criterion8},
      {"classical ensembles", criterion9},
      {"perceptron", criterion10},
      {"operator basis rank", criterion11},
      {"composite map", criterion12},
      {"reproducibility", criterion13},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("[%s] %2zu %-24s %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
