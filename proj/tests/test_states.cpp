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

#include "aqnn/error.hpp"
#include "aqnn/random.hpp"
#include "aqnn/states.hpp"
#include "oracles.hpp"

using namespace aqnn;

namespace {

DensityMatrix plus_state() {
  ComplexVector v(2);
  v << 1, 1;
  return DensityMatrix::from_pure(PureState::normalized(v));
}

}  // namespace

TEST_CASE("pure state construction") {
  ComplexVector v(2);
  v << 3, 4;
  CHECK_THROWS_AS(PureState::from_amplitudes(v), InvariantError);
  const PureState p = PureState::normalized(v);
  CHECK(p.amplitudes().norm() == doctest::Approx(1.0));
  CHECK(std::abs(PureState::basis(3, 2).amplitudes()(2)) == doctest::Approx(1.0));
  CHECK_THROWS_AS(PureState::basis(3, 3), DimensionError);
  CHECK_THROWS_AS(PureState::normalized(ComplexVector::Zero(2)), InvariantError);
}

TEST_CASE("density matrix validation") {
  ComplexMatrix bad_trace = ComplexMatrix::Identity(2, 2);
  CHECK_THROWS_AS(DensityMatrix::from_matrix(bad_trace), InvariantError);

  ComplexMatrix not_herm = ComplexMatrix::Identity(2, 2) / 2.0;
  not_herm(0, 1) = 0.1;
  CHECK_THROWS_AS(DensityMatrix::from_matrix(not_herm), InvariantError);

  ComplexMatrix negative(2, 2);
  negative << 1.5, 0, 0, -0.5;
  CHECK_THROWS_AS(DensityMatrix::from_matrix(negative), InvariantError);

  // Tiny negative eigenvalues within tolerance are clipped.
  ComplexMatrix almost(2, 2);
  almost << 1.0 + 1e-11, 0, 0, -1e-11;
  const DensityMatrix rho = DensityMatrix::from_matrix(almost);
  CHECK(rho.matrix()(1, 1).real() >= 0.0);
  CHECK(rho.matrix().trace().real() == doctest::Approx(1.0));

  CHECK(DensityMatrix::maximally_mixed(4).purity() == doctest::Approx(0.25));
  CHECK(plus_state().purity() == doctest::Approx(1.0));
}

TEST_CASE("trace distance") {
  const DensityMatrix zero = DensityMatrix::from_pure(PureState::basis(2, 0));
  const DensityMatrix one = DensityMatrix::from_pure(PureState::basis(2, 1));
  CHECK(trace_distance(zero, zero) == doctest::Approx(0.0));
  CHECK(trace_distance(zero, one) == doctest::Approx(1.0));

  const ComplexMatrix diff = zero.matrix() - plus_state().matrix();
  const auto [lo, hi] = oracle::eig2(diff);
  const double expected = 0.5 * (std::abs(lo) + std::abs(hi));
  CHECK(trace_distance(zero, plus_state()) == doctest::Approx(expected).epsilon(1e-12));
  CHECK(trace_distance(zero, plus_state()) == doctest::Approx(0.70711).epsilon(1e-5));
}

TEST_CASE("purification") {
  const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
  const PureState p0 = purify(DensityMatrix::from_pure(PureState::basis(2, 0)), id);
  CHECK(std::abs(p0.amplitudes()(0)) == doctest::Approx(1.0));

  const PureState pm = purify(DensityMatrix::maximally_mixed(2), id);
  CHECK(std::abs(pm.amplitudes()(0) - 1.0 / std::sqrt(2.0)) < 1e-12);
  CHECK(std::abs(pm.amplitudes()(3) - 1.0 / std::sqrt(2.0)) < 1e-12);
  CHECK(std::abs(pm.amplitudes()(1)) < 1e-12);

  SeedStream s(17);
  for (int t = 0; t < 10; ++t) {
    const DensityMatrix rho = random_density_matrix(3, s);
    const ComplexMatrix u = haar_unitary(3, s);
    const PureState psi = purify(rho, u);
    CHECK((oracle::ptrace(psi.projector(), 3, 3, true) - rho.matrix()).norm() < 1e-10);
  }
  CHECK_THROWS_AS(purify(DensityMatrix::maximally_mixed(2), 2.0 * id), InvariantError);
}
