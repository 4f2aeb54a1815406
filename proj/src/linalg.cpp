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

#include "aqnn/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "aqnn/error.hpp"

namespace aqnn {

BipartiteDims::BipartiteDims(std::size_t a, std::size_t b) : dim_a(a), dim_b(b) {
  if (a < 1 || b < 1) {
    throw DimensionError("bipartite dimensions must be >= 1");
  }
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexVector tensor_product(const ComplexVector& a, const ComplexVector& b) {
  ComplexVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    out.segment(i * b.size(), b.size()) = a(i) * b;
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, BipartiteDims dims, Subsystem traced) {
  const auto n = static_cast<Eigen::Index>(dims.total());
  if (m.rows() != n || m.cols() != n) {
    std::ostringstream msg;
    msg << "partial_trace: matrix is " << m.rows() << "x" << m.cols() << ", expected " << n << "x"
        << n << " for dims (" << dims.dim_a << "," << dims.dim_b << ")";
    throw DimensionError(msg.str());
  }
  const auto na = static_cast<Eigen::Index>(dims.dim_a);
  const auto nb = static_cast<Eigen::Index>(dims.dim_b);
  if (traced == Subsystem::B) {
    ComplexMatrix out = ComplexMatrix::Zero(na, na);
    for (Eigen::Index i = 0; i < na; ++i) {
      for (Eigen::Index j = 0; j < na; ++j) {
        out(i, j) = m.block(i * nb, j * nb, nb, nb).trace();
      }
    }
    return out;
  }
  ComplexMatrix out = ComplexMatrix::Zero(nb, nb);
  for (Eigen::Index a = 0; a < na; ++a) {
    out += m.block(a * nb, a * nb, nb, nb);
  }
  return out;
}

double hermiticity_deviation(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) {
    throw DimensionError("hermiticity_deviation: matrix is not square");
  }
  return (m - m.adjoint()).norm();
}

HermitianEigen eig_hermitian(const ComplexMatrix& m, double herm_tol) {
  const double dev = hermiticity_deviation(m);
  if (dev > herm_tol * std::max(1.0, m.norm())) {
    std::ostringstream msg;
    msg << "eig_hermitian: input is not Hermitian (||M - M^dag||_F = " << dev << ")";
    throw InvariantError(msg.str());
  }
  const ComplexMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("eig_hermitian: eigensolver did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

PsdCheck is_psd(const ComplexMatrix& m, double tol) {
  const HermitianEigen eig = eig_hermitian(m);
  const double min_ev = eig.values.size() > 0 ? eig.values(0) : 0.0;
  return {min_ev >= -tol, min_ev};
}

std::size_t operator_rank(std::span<const ComplexMatrix> ops, double tol) {
  if (ops.empty()) {
    throw InvariantError("operator_rank: empty operator list");
  }
  const Eigen::Index rows = ops.front().rows();
  const Eigen::Index cols = ops.front().cols();
  ComplexMatrix stacked(static_cast<Eigen::Index>(ops.size()), rows * cols);
  for (std::size_t k = 0; k < ops.size(); ++k) {
    if (ops[k].rows() != rows || ops[k].cols() != cols) {
      throw DimensionError("operator_rank: operators differ in shape");
    }
    stacked.row(static_cast<Eigen::Index>(k)) = vec(ops[k]).transpose();
  }
  Eigen::JacobiSVD<ComplexMatrix> svd(stacked);
  const RealVector& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) {
    return 0;
  }
  const double cutoff = tol * sv(0);
  return static_cast<std::size_t>((sv.array() >= cutoff).count());
}

double trace_norm_hermitian(const ComplexMatrix& m) {
  return eig_hermitian(m).values.cwiseAbs().sum();
}

ComplexVector vec(const ComplexMatrix& m) {
  ComplexVector v(m.size());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      v(i * m.cols() + j) = m(i, j);
    }
  }
  return v;
}

ComplexMatrix unvec(const ComplexVector& v, std::size_t rows, std::size_t cols) {
  const auto r = static_cast<Eigen::Index>(rows);
  const auto c = static_cast<Eigen::Index>(cols);
  if (v.size() != r * c) {
    throw DimensionError("unvec: length does not match rows * cols");
  }
  ComplexMatrix m(r, c);
  for (Eigen::Index i = 0; i < r; ++i) {
    for (Eigen::Index j = 0; j < c; ++j) {
      m(i, j) = v(i * c + j);
    }
  }
  return m;
}

ComplexMatrix matrix_unit(std::size_t n, std::size_t i, std::size_t j) {
  ComplexMatrix m = ComplexMatrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = 1.0;
  return m;
}

bool all_finite(const ComplexMatrix& m) {
  return m.real().allFinite() && m.imag().allFinite();
}

}  // namespace aqnn
