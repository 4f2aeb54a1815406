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

#include "aqnn/random.hpp"

#include <cmath>
#include <numbers>

namespace aqnn {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

SeedStream::SeedStream(std::uint64_t master_seed, std::uint64_t stream_id)
    : master_(master_seed),
      stream_(stream_id),
      key_(mix64(master_seed ^ mix64(stream_id + kGolden)) ^ mix64(master_seed + 2 * kGolden)) {}

std::uint64_t SeedStream::next_u64() {
  ++counter_;
  return mix64(key_ + counter_ * kGolden);
}

double SeedStream::uniform() {
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double SeedStream::normal() {
  const double u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Complex SeedStream::complex_normal() {
  const double re = normal();
  const double im = normal();
  return {re, im};
}

ComplexMatrix random_ginibre(std::size_t rows, std::size_t cols, SeedStream& stream) {
  ComplexMatrix g(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (Eigen::Index i = 0; i < g.rows(); ++i) {
    for (Eigen::Index j = 0; j < g.cols(); ++j) {
      g(i, j) = stream.complex_normal();
    }
  }
  return g;
}

ComplexMatrix haar_unitary(std::size_t n, SeedStream& stream) {
  const ComplexMatrix g = random_ginibre(n, n, stream);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index k = 0; k < q.cols(); ++k) {
    const Complex d = r(k, k);
    const double mag = std::abs(d);
    q.col(k) *= mag > 0.0 ? d / mag : Complex(1.0);
  }
  return q;
}

PureState random_pure_state(std::size_t dim, SeedStream& stream) {
  return PureState::normalized(random_ginibre(dim, 1, stream).col(0));
}

DensityMatrix random_density_matrix(std::size_t dim, SeedStream& stream) {
  const ComplexMatrix g = random_ginibre(dim, dim, stream);
  ComplexMatrix w = g * g.adjoint();
  w /= w.trace().real();
  return DensityMatrix::from_matrix(0.5 * (w + w.adjoint()));
}

ComplexMatrix random_hermitian(std::size_t dim, SeedStream& stream) {
  const ComplexMatrix g = random_ginibre(dim, dim, stream);
  return 0.5 * (g + g.adjoint());
}

}  // namespace aqnn
