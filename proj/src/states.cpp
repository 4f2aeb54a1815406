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

#include "aqnn/states.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "aqnn/error.hpp"

namespace aqnn {

PureState PureState::from_amplitudes(ComplexVector amplitudes, double tol) {
  const double norm = amplitudes.norm();
  if (std::abs(norm - 1.0) > tol) {
    std::ostringstream msg;
    msg << "pure state norm is " << norm << ", expected 1";
    throw InvariantError(msg.str());
  }
  return PureState(std::move(amplitudes));
}

PureState PureState::normalized(const ComplexVector& v) {
  const double norm = v.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw InvariantError("cannot normalize a zero or non-finite vector");
  }
  return PureState(v / norm);
}

PureState PureState::basis(std::size_t dim, std::size_t index) {
  if (index >= dim) {
    throw DimensionError("basis index out of range");
  }
  ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(dim));
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return PureState(std::move(v));
}

DensityMatrix DensityMatrix::from_matrix(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw DimensionError("density matrix must be square and non-empty");
  }
  if (!all_finite(m)) {
    throw InvariantError("density matrix has non-finite entries");
  }
  const double herm = hermiticity_deviation(m);
  if (herm > tol) {
    std::ostringstream msg;
    msg << "density matrix is not Hermitian (deviation " << herm << ")";
    throw InvariantError(msg.str());
  }
  ComplexMatrix h = 0.5 * (m + m.adjoint());
  const double tr = h.trace().real();
  if (std::abs(tr - 1.0) > tol) {
    std::ostringstream msg;
    msg << "density matrix trace is " << tr << ", expected 1";
    throw InvariantError(msg.str());
  }
  const HermitianEigen eig = eig_hermitian(h);
  const double min_ev = eig.values(0);
  if (min_ev < -tol) {
    std::ostringstream msg;
    msg << "density matrix has negative eigenvalue " << min_ev;
    throw InvariantError(msg.str());
  }
  if (min_ev < 0.0) {
    RealVector clipped = eig.values.cwiseMax(0.0);
    clipped /= clipped.sum();
    h = eig.vectors * clipped.asDiagonal() * eig.vectors.adjoint();
  }
  return DensityMatrix(std::move(h));
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
  return DensityMatrix(psi.projector());
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
  const auto n = static_cast<Eigen::Index>(dim);
  return DensityMatrix(ComplexMatrix::Identity(n, n) / static_cast<double>(dim));
}

double trace_distance(const ComplexMatrix& x, const ComplexMatrix& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) {
    throw DimensionError("trace_distance: dimension mismatch");
  }
  return 0.5 * trace_norm_hermitian(x - y);
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  return trace_distance(rho.matrix(), sigma.matrix());
}

PureState purify(const DensityMatrix& rho, const ComplexMatrix& ancilla_unitary, double tol) {
  const auto n = static_cast<Eigen::Index>(rho.dim());
  if (ancilla_unitary.rows() != n || ancilla_unitary.cols() != n) {
    throw DimensionError("purify: ancilla unitary dimension does not match the state");
  }
  const ComplexMatrix gram = ancilla_unitary.adjoint() * ancilla_unitary;
  if ((gram - ComplexMatrix::Identity(n, n)).norm() > tol * static_cast<double>(n)) {
    throw InvariantError("purify: ancilla operator is not unitary");
  }
  const ComplexMatrix root =
      hermitian_function(rho.matrix(), [](double x) { return std::sqrt(std::max(x, 0.0)); });
  ComplexVector psi = ComplexVector::Zero(n * n);
  for (Eigen::Index i = 0; i < n; ++i) {
    psi += tensor_product(ComplexVector(root.col(i)), ComplexVector(ancilla_unitary.col(i)));
  }
  return PureState::normalized(psi);
}

}  // namespace aqnn
