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

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "aqnn/channel.hpp"
#include "aqnn/random.hpp"

namespace aqnn {

struct GardnerConfig {
  std::size_t n = 2;         // Hilbert space dimension
  std::size_t m = 1;         // number of stored basis states; 0 means no constraint
  double epsilon = 0.1;      // basin width, 0 < epsilon <= 2
  std::size_t samples = 1000;
  std::uint64_t master_seed = 0;
  unsigned threads = 1;

  /// Throws InvariantError naming the violated constraint.
  void validate() const;
};

struct VolumeEstimate {
  double fraction = 0.0;
  double standard_error = 0.0;  // sqrt(f (1 - f) / samples)
  std::size_t samples = 0;
  std::size_t hits = 0;
  double upper_bound_95 = 0.0;  // 3 / samples when hits == 0, else fraction + 1.96 standard_error
  GardnerConfig config;
};

struct ManifoldDims {
  std::size_t n = 0;
  std::size_t d = 0;  // N^4 - N^2
};

ManifoldDims manifold_dims(std::size_t n);

/// Hilbert-Schmidt random channel: W = G G^dag for a square Ginibre G on
/// A (x) B, Y = Tr_B W, E = (Y^-1/2 (x) 1) W (Y^-1/2 (x) 1).
ChoiMatrix sample_cptp(BipartiteDims dims, SeedStream& stream);

/// True iff <mu mu|E|mu mu> lies in [1 - eps/2, 1 + eps/2] for mu < m.
/// The entries are at most 1 for a CPTP map, so the effective window is
/// [1 - eps/2, 1].
bool stationarity_indicator(const ChoiMatrix& e, std::size_t m, double epsilon);

/// Sample i is drawn from SeedStream(master_seed, i); hits are reduced by
/// integer summation, so the result does not depend on the thread count.
VolumeEstimate estimate_relative_volume(const GardnerConfig& config);

/// Evaluates several (M, epsilon) points on one shared sample set.
/// `base.m` and `base.epsilon` are ignored.
std::vector<VolumeEstimate> estimate_sweep(const GardnerConfig& base,
                                           const std::vector<std::pair<std::size_t, double>>& points);

struct LogValue {
  double value = 0.0;
  double log_value = 0.0;
};

/// pi^{d/2} / Gamma(d/2 + 1) * exp(-d/4).
LogValue analytic_v_cptp(double d);
/// eps^M pi^{(d-M)/2} / Gamma((d-M)/2 + 1) * exp(-(d-M)/4); requires 0 <= M < d.
LogValue analytic_v_aqnn(double epsilon, double m, double d);

struct RelativeVolume {
  double value = 0.0;
  double log_value = 0.0;
  bool valid = true;  // value < 1
};

/// eps^K e^{K/4} pi^{-K/2} Gamma(d/2 + 1) / Gamma((d-K)/2 + 1). K = M for
/// pure patterns, K = M N^2 for mixed states.
RelativeVolume analytic_relative_volume(double epsilon, double k, double d);

/// Large-d approximation (M/2) ln(sqrt(e) d eps^2 / (2 pi)) - M^2/(4d).
double analytic_log_vr_stirling(double epsilon, double m, double d);

/// exp(-1/4) sqrt(2 pi / d)
double optimal_epsilon(double d);
/// exp(-M^2 / (4d))
double vr_optimal(double m, double d);

struct CapacityRow {
  unsigned qubits = 0;
  std::size_t n = 0;
  std::size_t d = 0;
  std::size_t m_max = 0;  // N
  double m_feasible = 0;  // 2^{n/2}
  double vr = 0.0;        // vr_optimal(2^{n/2}, d)
};

std::vector<CapacityRow> capacity_table(unsigned min_qubits, unsigned max_qubits);

}  // namespace aqnn
