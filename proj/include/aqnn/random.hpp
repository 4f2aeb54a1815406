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

#include "aqnn/linalg.hpp"
#include "aqnn/states.hpp"

namespace aqnn {

/// Counter-based deterministic random stream.
///
/// Draw k of stream (master, id) is a pure function of (master, id, k), so
/// sample i of a Monte Carlo run can use SeedStream(master, i) on any thread
/// and the result does not depend on scheduling.
class SeedStream {
 public:
  explicit SeedStream(std::uint64_t master_seed, std::uint64_t stream_id = 0);

  std::uint64_t next_u64();
  /// Uniform on the open interval (0, 1).
  double uniform();
  double normal();
  /// Real and imaginary parts i.i.d. standard normal.
  Complex complex_normal();

  std::uint64_t master_seed() const { return master_; }
  std::uint64_t stream_id() const { return stream_; }
  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t master_;
  std::uint64_t stream_;
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// Entries drawn in row-major order.
ComplexMatrix random_ginibre(std::size_t rows, std::size_t cols, SeedStream& stream);

/// Haar-distributed unitary: QR of a Ginibre matrix with the phases of
/// diag(R) absorbed into Q.
ComplexMatrix haar_unitary(std::size_t n, SeedStream& stream);

/// Haar-random pure state (normalized complex Gaussian vector).
PureState random_pure_state(std::size_t dim, SeedStream& stream);

/// Hilbert-Schmidt random state G G^dag / Tr with a square Ginibre G.
DensityMatrix random_density_matrix(std::size_t dim, SeedStream& stream);

/// Random Hermitian matrix (G + G^dag) / 2, not normalized.
ComplexMatrix random_hermitian(std::size_t dim, SeedStream& stream);

}  // namespace aqnn
