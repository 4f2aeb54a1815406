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

#include "aqnn/gardner.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <thread>

#include "aqnn/error.hpp"

namespace aqnn {

namespace {

Eigen::Index idx(std::size_t n) { return static_cast<Eigen::Index>(n); }

constexpr int kMaxSingularRetries = 64;

void require_positive(double x, const char* what) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw InvariantError(std::string(what) + " must be positive and finite");
  }
}

}  // namespace

void GardnerConfig::validate() const {
  std::ostringstream msg;
  if (n < 1) {
    msg << "N must be >= 1";
  } else if (m > n) {
    msg << "M = " << m << " exceeds N = " << n << " (at most N basis states can be stored)";
  } else if (!(epsilon > 0.0 && epsilon <= 2.0)) {
    msg << "epsilon = " << epsilon << " must satisfy 0 < epsilon <= 2";
  } else if (samples < 1) {
    msg << "samples must be >= 1";
  } else if (threads < 1) {
    msg << "threads must be >= 1";
  } else {
    return;
  }
  throw InvariantError(msg.str());
}

ManifoldDims manifold_dims(std::size_t n) {
  return {n, n * n * n * n - n * n};
}

ChoiMatrix sample_cptp(BipartiteDims dims, SeedStream& stream) {
  const std::size_t total = dims.total();
  const auto nb = idx(dims.dim_b);
  for (int attempt = 0; attempt < kMaxSingularRetries; ++attempt) {
    const ComplexMatrix g = random_ginibre(total, total, stream);
    const ComplexMatrix w = g * g.adjoint();
    const ComplexMatrix y = partial_trace(w, dims, Subsystem::B);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(0.5 * (y + y.adjoint()));
    const RealVector& lambda = solver.eigenvalues();
    if (!(lambda(0) > 1e-14 * lambda(lambda.size() - 1))) {
      continue;
    }
    const RealVector inv_sqrt = lambda.cwiseSqrt().cwiseInverse();
    const ComplexMatrix y_inv_sqrt =
        solver.eigenvectors() * inv_sqrt.asDiagonal() * solver.eigenvectors().adjoint();
    const ComplexMatrix k = tensor_product(y_inv_sqrt, ComplexMatrix::Identity(nb, nb));
    ComplexMatrix e = k * w * k.adjoint();
    return ChoiMatrix(dims, 0.5 * (e + e.adjoint()));
  }
  throw NumericalError("sample_cptp: Tr_B W numerically singular on every retry");
}

bool stationarity_indicator(const ChoiMatrix& e, std::size_t m, double epsilon) {
  const std::size_t n = e.input_dim();
  if (m > n || m > e.output_dim()) {
    throw InvariantError("stationarity_indicator: M exceeds the channel dimension");
  }
  const double lo = 1.0 - epsilon / 2.0;
  const double hi = 1.0 + epsilon / 2.0;
  for (std::size_t mu = 0; mu < m; ++mu) {
    const auto k = idx(mu * e.output_dim() + mu);
    const double x = e.matrix()(k, k).real();
    if (x < lo || x > hi) {
      return false;
    }
  }
  return true;
}

std::vector<VolumeEstimate> estimate_sweep(
    const GardnerConfig& base, const std::vector<std::pair<std::size_t, double>>& points) {
  for (const auto& [m, eps] : points) {
    GardnerConfig c = base;
    c.m = m;
    c.epsilon = eps;
    c.validate();
  }
  const BipartiteDims dims(base.n, base.n);
  const std::size_t workers = std::min<std::size_t>(base.threads, base.samples);
  std::vector<std::vector<std::size_t>> hits(workers, std::vector<std::size_t>(points.size(), 0));

  auto run = [&](std::size_t worker) {
    const std::size_t begin = base.samples * worker / workers;
    const std::size_t end = base.samples * (worker + 1) / workers;
    auto& local = hits[worker];
    for (std::size_t i = begin; i < end; ++i) {
      SeedStream stream(base.master_seed, i);
      const ChoiMatrix e = sample_cptp(dims, stream);
      for (std::size_t p = 0; p < points.size(); ++p) {
        if (stationarity_indicator(e, points[p].first, points[p].second)) {
          ++local[p];
        }
      }
    }
  };

  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back(run, w);
    }
  }

  std::vector<VolumeEstimate> out;
  out.reserve(points.size());
  for (std::size_t p = 0; p < points.size(); ++p) {
    VolumeEstimate est;
    est.config = base;
    est.config.m = points[p].first;
    est.config.epsilon = points[p].second;
    est.samples = base.samples;
    for (const auto& local : hits) {
      est.hits += local[p];
    }
    const double s = static_cast<double>(est.samples);
    est.fraction = static_cast<double>(est.hits) / s;
    est.standard_error = std::sqrt(est.fraction * (1.0 - est.fraction) / s);
    est.upper_bound_95 =
        est.hits == 0 ? 3.0 / s : std::min(1.0, est.fraction + 1.96 * est.standard_error);
    out.push_back(est);
  }
  return out;
}

VolumeEstimate estimate_relative_volume(const GardnerConfig& config) {
  config.validate();
  return estimate_sweep(config, {{config.m, config.epsilon}}).front();
}

LogValue analytic_v_cptp(double d) {
  require_positive(d, "d");
  const double log_v =
      0.5 * d * std::log(std::numbers::pi) - std::lgamma(0.5 * d + 1.0) - 0.25 * d;
  return {std::exp(log_v), log_v};
}

LogValue analytic_v_aqnn(double epsilon, double m, double d) {
  require_positive(epsilon, "epsilon");
  require_positive(d, "d");
  if (m < 0.0 || m >= d) {
    throw InvariantError("analytic_v_aqnn: requires 0 <= M < d");
  }
  const double r = d - m;
  const double log_v = m * std::log(epsilon) + 0.5 * r * std::log(std::numbers::pi) -
                       std::lgamma(0.5 * r + 1.0) - 0.25 * r;
  return {std::exp(log_v), log_v};
}

RelativeVolume analytic_relative_volume(double epsilon, double k, double d) {
  require_positive(epsilon, "epsilon");
  require_positive(d, "d");
  if (k < 0.0 || k >= d) {
    throw InvariantError("analytic_relative_volume: requires 0 <= K < d");
  }
  const double log_v = k * std::log(epsilon) + 0.25 * k - 0.5 * k * std::log(std::numbers::pi) +
                       std::lgamma(0.5 * d + 1.0) - std::lgamma(0.5 * (d - k) + 1.0);
  const double v = std::exp(log_v);
  return {v, log_v, v < 1.0};
}

double analytic_log_vr_stirling(double epsilon, double m, double d) {
  require_positive(epsilon, "epsilon");
  require_positive(d, "d");
  if (m == 0.0) {
    return 0.0;
  }
  const double arg = std::sqrt(std::numbers::e) * d * epsilon * epsilon / (2.0 * std::numbers::pi);
  return 0.5 * m * std::log(arg) - m * m / (4.0 * d);
}

double optimal_epsilon(double d) {
  require_positive(d, "d");
  return std::exp(-0.25) * std::sqrt(2.0 * std::numbers::pi / d);
}

double vr_optimal(double m, double d) {
  require_positive(d, "d");
  return std::exp(-m * m / (4.0 * d));
}

std::vector<CapacityRow> capacity_table(unsigned min_qubits, unsigned max_qubits) {
  // N^4 overflows 64 bits beyond 15 qubits.
  if (min_qubits < 1 || max_qubits > 15 || min_qubits > max_qubits) {
    throw InvariantError("capacity_table: qubit range must satisfy 1 <= min <= max <= 15");
  }
  std::vector<CapacityRow> rows;
  for (unsigned q = min_qubits; q <= max_qubits; ++q) {
    CapacityRow row;
    row.qubits = q;
    row.n = std::size_t{1} << q;
    row.d = manifold_dims(row.n).d;
    row.m_max = row.n;
    row.m_feasible = std::pow(2.0, 0.5 * q);
    row.vr = vr_optimal(row.m_feasible, static_cast<double>(row.d));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace aqnn
