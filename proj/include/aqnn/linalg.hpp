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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace aqnn {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

// Default tolerance for hermiticity, positivity, trace and norm checks.
inline constexpr double kDefaultTol = 1e-9;

// Dimensions of a bipartite space A (x) B. Throughout the library the A
// index is the major (slow) index: |a,b> sits at position a * dim_b + b.
struct BipartiteDims {
  std::size_t dim_a = 1;
  std::size_t dim_b = 1;

  BipartiteDims() = default;
  BipartiteDims(std::size_t a, std::size_t b);

  std::size_t total() const { return dim_a * dim_b; }
  bool operator==(const BipartiteDims&) const = default;
};

enum class Subsystem { A, B };

/// Kronecker product; row index of (a (x) b) is a_row * rows(b) + b_row.
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector tensor_product(const ComplexVector& a, const ComplexVector& b);

/// Traces out `traced` and returns the operator on the remaining factor.
ComplexMatrix partial_trace(const ComplexMatrix& m, BipartiteDims dims, Subsystem traced);

struct HermitianEigen {
  RealVector values;      // ascending
  ComplexMatrix vectors;  // orthonormal columns
};

/// Eigendecomposition of a Hermitian matrix. Throws InvariantError when
/// ||M - M^dag||_F exceeds `herm_tol` * max(1, ||M||_F).
HermitianEigen eig_hermitian(const ComplexMatrix& m, double herm_tol = kDefaultTol);

struct PsdCheck {
  bool psd = false;
  double min_eigenvalue = 0.0;
};

PsdCheck is_psd(const ComplexMatrix& m, double tol = kDefaultTol);

/// ||M - M^dag||_F
double hermiticity_deviation(const ComplexMatrix& m);

/// Rank of the operators as vectors in C^{N^2}, counting singular values
/// >= tol * sigma_max.
std::size_t operator_rank(std::span<const ComplexMatrix> ops, double tol = 1e-10);

/// Schatten 1-norm of a Hermitian matrix.
double trace_norm_hermitian(const ComplexMatrix& m);

/// f(M) = V f(lambda) V^dag for Hermitian M.
template <class F>
ComplexMatrix hermitian_function(const ComplexMatrix& m, F&& f) {
  const HermitianEigen eig = eig_hermitian(m);
  RealVector fv = eig.values.unaryExpr(f);
  return eig.vectors * fv.asDiagonal() * eig.vectors.adjoint();
}

/// Row-major vectorization: vec(M)[i * cols + j] = M(i, j).
ComplexVector vec(const ComplexMatrix& m);
ComplexMatrix unvec(const ComplexVector& v, std::size_t rows, std::size_t cols);

/// |i><j| of size n x n.
ComplexMatrix matrix_unit(std::size_t n, std::size_t i, std::size_t j);

bool all_finite(const ComplexMatrix& m);

}  // namespace aqnn
