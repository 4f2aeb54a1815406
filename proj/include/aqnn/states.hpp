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

#include "aqnn/linalg.hpp"

namespace aqnn {

/// Unit-norm state vector.
class PureState {
 public:
  /// Validates ||amplitudes|| = 1 within `tol`.
  static PureState from_amplitudes(ComplexVector amplitudes, double tol = kDefaultTol);
  /// Rescales a nonzero vector to unit norm.
  static PureState normalized(const ComplexVector& v);
  static PureState basis(std::size_t dim, std::size_t index);

  std::size_t dim() const { return static_cast<std::size_t>(amplitudes_.size()); }
  const ComplexVector& amplitudes() const { return amplitudes_; }
  ComplexMatrix projector() const { return amplitudes_ * amplitudes_.adjoint(); }

 private:
  explicit PureState(ComplexVector a) : amplitudes_(std::move(a)) {}
  ComplexVector amplitudes_;
};

/// Hermitian, positive semidefinite, unit trace.
///
/// Construction validates all three within `tol`; the stored matrix is the
/// Hermitian part of the input and eigenvalues in [-tol, 0) are clipped to
/// zero (the matrix is then renormalized to unit trace).
class DensityMatrix {
 public:
  static DensityMatrix from_matrix(const ComplexMatrix& m, double tol = kDefaultTol);
  static DensityMatrix from_pure(const PureState& psi);
  static DensityMatrix maximally_mixed(std::size_t dim);

  std::size_t dim() const { return static_cast<std::size_t>(matrix_.rows()); }
  const ComplexMatrix& matrix() const { return matrix_; }
  double purity() const { return (matrix_ * matrix_).trace().real(); }

 private:
  explicit DensityMatrix(ComplexMatrix m) : matrix_(std::move(m)) {}
  ComplexMatrix matrix_;
};

/// 1/2 ||rho - sigma||_1
double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);
/// Same quantity for arbitrary Hermitian operands (e.g. unnormalized outputs).
double trace_distance(const ComplexMatrix& x, const ComplexMatrix& y);

/// Purification (sqrt(rho) (x) U)|Omega> on A (x) A' with
/// |Omega> = sum_i |i>|i>; Tr_{A'} of the result is rho.
PureState purify(const DensityMatrix& rho, const ComplexMatrix& ancilla_unitary,
                 double tol = kDefaultTol);

}  // namespace aqnn
