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

#include "aqnn/channel.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "aqnn/error.hpp"

namespace aqnn {

namespace {

Eigen::Index idx(std::size_t n) { return static_cast<Eigen::Index>(n); }

void require_square_channel(const ChoiMatrix& e, const char* what) {
  if (e.input_dim() != e.output_dim()) {
    std::ostringstream msg;
    msg << what << ": channel must map a space to itself (dims " << e.input_dim() << " -> "
        << e.output_dim() << ")";
    throw DimensionError(msg.str());
  }
}

}  // namespace

ChoiMatrix::ChoiMatrix(BipartiteDims dims, ComplexMatrix matrix)
    : dims_(dims), matrix_(std::move(matrix)) {
  const auto n = idx(dims_.total());
  if (matrix_.rows() != n || matrix_.cols() != n) {
    std::ostringstream msg;
    msg << "Choi matrix is " << matrix_.rows() << "x" << matrix_.cols()
        << " but dims (" << dims_.dim_a << "," << dims_.dim_b << ") require " << n << "x" << n;
    throw DimensionError(msg.str());
  }
}

std::string_view to_string(CptpVerdict v) {
  switch (v) {
    case CptpVerdict::cptp:
      return "cptp";
    case CptpVerdict::cp_only:
      return "cp_only";
    case CptpVerdict::tp_only:
      return "tp_only";
    case CptpVerdict::neither:
      return "neither";
  }
  return "neither";
}

CptpVerdict verdict_from_string(std::string_view s) {
  for (auto v : {CptpVerdict::cptp, CptpVerdict::cp_only, CptpVerdict::tp_only,
                 CptpVerdict::neither}) {
    if (to_string(v) == s) {
      return v;
    }
  }
  throw ParseError("unknown CPTP verdict '" + std::string(s) + "'");
}

ChoiMatrix choi_identity(std::size_t n) {
  const BipartiteDims dims(n, n);
  ComplexVector omega = ComplexVector::Zero(idx(n * n));
  for (std::size_t i = 0; i < n; ++i) {
    omega(idx(i * n + i)) = 1.0;
  }
  return ChoiMatrix(dims, omega * omega.adjoint());
}

ChoiMatrix choi_depolarizing(BipartiteDims dims) {
  const auto n = idx(dims.total());
  return ChoiMatrix(dims, ComplexMatrix::Identity(n, n) / static_cast<double>(dims.dim_b));
}

ChoiMatrix choi_partial_trace(BipartiteDims input_split, Subsystem traced) {
  const std::size_t kept = traced == Subsystem::B ? input_split.dim_a : input_split.dim_b;
  return choi_from_action(BipartiteDims(input_split.total(), kept), [&](const ComplexMatrix& x) {
    return partial_trace(x, input_split, traced);
  });
}

ChoiMatrix choi_from_action(BipartiteDims dims,
                            const std::function<ComplexMatrix(const ComplexMatrix&)>& action) {
  const auto na = idx(dims.dim_a);
  const auto nb = idx(dims.dim_b);
  ComplexMatrix e = ComplexMatrix::Zero(na * nb, na * nb);
  for (Eigen::Index i = 0; i < na; ++i) {
    for (Eigen::Index j = 0; j < na; ++j) {
      const ComplexMatrix out = action(matrix_unit(dims.dim_a, i, j));
      if (out.rows() != nb || out.cols() != nb) {
        throw DimensionError("choi_from_action: map output has the wrong dimension");
      }
      e.block(i * nb, j * nb, nb, nb) = out;
    }
  }
  return ChoiMatrix(dims, std::move(e));
}

ComplexMatrix apply_channel(const ChoiMatrix& e, const ComplexMatrix& x) {
  const auto na = idx(e.input_dim());
  const auto nb = idx(e.output_dim());
  if (x.rows() != na || x.cols() != na) {
    std::ostringstream msg;
    msg << "apply: input is " << x.rows() << "x" << x.cols() << ", channel expects " << na << "x"
        << na;
    throw DimensionError(msg.str());
  }
  ComplexMatrix out = ComplexMatrix::Zero(nb, nb);
  for (Eigen::Index a = 0; a < na; ++a) {
    for (Eigen::Index ap = 0; ap < na; ++ap) {
      const Complex w = x(a, ap);
      if (w != Complex(0.0)) {
        out.noalias() += w * e.matrix().block(a * nb, ap * nb, nb, nb);
      }
    }
  }
  return out;
}

DensityMatrix apply_channel(const ChoiMatrix& e, const DensityMatrix& rho) {
  return DensityMatrix::from_matrix(apply_channel(e, rho.matrix()));
}

CptpReport verify_cptp(const ChoiMatrix& e, double tol) {
  const ComplexMatrix& m = e.matrix();
  CptpReport report;
  report.hermiticity_deviation = hermiticity_deviation(m);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(0.5 * (m + m.adjoint()),
                                                      Eigen::EigenvaluesOnly);
  report.min_eigenvalue = solver.eigenvalues()(0);
  const auto na = idx(e.input_dim());
  report.tp_deviation =
      (partial_trace(m, e.dims(), Subsystem::B) - ComplexMatrix::Identity(na, na)).norm();

  const bool cp = report.hermiticity_deviation <= tol && report.min_eigenvalue >= -tol;
  const bool tp = report.tp_deviation <= tol;
  if (cp && tp) {
    report.verdict = CptpVerdict::cptp;
  } else if (cp) {
    report.verdict = CptpVerdict::cp_only;
  } else if (tp) {
    report.verdict = CptpVerdict::tp_only;
  } else {
    report.verdict = CptpVerdict::neither;
  }
  return report;
}

KrausSet kraus_from_choi(const ChoiMatrix& e, double tol) {
  const HermitianEigen eig = eig_hermitian(e.matrix(), tol);
  if (eig.values(0) < -tol) {
    std::ostringstream msg;
    msg << "kraus_from_choi: Choi matrix has negative eigenvalue " << eig.values(0);
    throw InvariantError(msg.str());
  }
  const auto na = idx(e.input_dim());
  const auto nb = idx(e.output_dim());
  KrausSet kraus{e.dims(), {}};
  // Largest weights first.
  for (Eigen::Index k = eig.values.size() - 1; k >= 0; --k) {
    const double lambda = eig.values(k);
    if (lambda <= tol) {
      break;
    }
    ComplexMatrix op(nb, na);
    const double scale = std::sqrt(lambda);
    for (Eigen::Index a = 0; a < na; ++a) {
      for (Eigen::Index b = 0; b < nb; ++b) {
        op(b, a) = scale * eig.vectors(a * nb + b, k);
      }
    }
    kraus.operators.push_back(std::move(op));
  }
  return kraus;
}

ComplexMatrix apply_kraus(const KrausSet& kraus, const ComplexMatrix& x) {
  const auto nb = idx(kraus.dims.dim_b);
  ComplexMatrix out = ComplexMatrix::Zero(nb, nb);
  for (const auto& k : kraus.operators) {
    out.noalias() += k * x * k.adjoint();
  }
  return out;
}

TransferMatrix transfer_matrix(const ChoiMatrix& e) {
  const std::size_t na = e.input_dim();
  const std::size_t nb = e.output_dim();
  ComplexMatrix l(idx(nb * nb), idx(na * na));
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < na; ++j) {
      l.col(idx(i * na + j)) = vec(apply_channel(e, matrix_unit(na, i, j)));
    }
  }
  return {e.dims(), std::move(l)};
}

FixedPointSpace fixed_point_space(const ChoiMatrix& e, double tol) {
  require_square_channel(e, "fixed_point_space");
  const std::size_t n = e.input_dim();
  const ComplexMatrix l = transfer_matrix(e).matrix;

  Eigen::ComplexEigenSolver<ComplexMatrix> solver(l, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("fixed_point_space: eigensolver did not converge");
  }
  FixedPointSpace space;
  space.eigenvalues.assign(solver.eigenvalues().begin(), solver.eigenvalues().end());
  std::stable_sort(space.eigenvalues.begin(), space.eigenvalues.end(),
                   [](Complex x, Complex y) { return std::abs(x) > std::abs(y); });
  for (const Complex lambda : space.eigenvalues) {
    if (std::abs(lambda - 1.0) <= tol) {
      ++space.dimension;
    } else if (std::abs(lambda) >= 1.0 - tol) {
      ++space.peripheral_dimension;
    }
  }

  const auto n2 = idx(n * n);
  const ComplexMatrix shifted = l - ComplexMatrix::Identity(n2, n2);
  Eigen::JacobiSVD<ComplexMatrix> svd(shifted, Eigen::ComputeFullV);
  const ComplexMatrix& v = svd.matrixV();
  ComplexMatrix span(n2, idx(space.dimension));
  for (std::size_t k = 0; k < space.dimension; ++k) {
    const Eigen::Index column = n2 - 1 - idx(k);
    span.col(idx(k)) = v.col(column);
    space.basis.push_back(unvec(v.col(column), n, n));
  }

  space.hermitian_closed = true;
  const double closure_tol = std::sqrt(tol);
  for (const auto& b : space.basis) {
    const ComplexVector w = vec(b.adjoint());
    const ComplexVector residual = w - span * (span.adjoint() * w);
    if (residual.norm() > closure_tol) {
      space.hermitian_closed = false;
      break;
    }
  }
  return space;
}

Trajectory iterate(const ChoiMatrix& e, const DensityMatrix& rho0, std::size_t max_steps,
                   double conv_tol) {
  require_square_channel(e, "iterate");
  Trajectory traj;
  traj.states.push_back(rho0);
  for (std::size_t k = 1; k <= max_steps; ++k) {
    DensityMatrix next = apply_channel(e, traj.states.back());
    const double d = trace_distance(next, traj.states.back());
    traj.distances.push_back(d);
    traj.steps = k;
    if (d < conv_tol) {
      traj.converged = true;
      break;
    }
    traj.states.push_back(std::move(next));
  }
  return traj;
}

ChoiMatrix compose(const ChoiMatrix& second, const ChoiMatrix& first) {
  if (first.output_dim() != second.input_dim()) {
    std::ostringstream msg;
    msg << "compose: first channel outputs dimension " << first.output_dim()
        << " but second expects " << second.input_dim();
    throw DimensionError(msg.str());
  }
  return choi_from_action(BipartiteDims(first.input_dim(), second.output_dim()),
                          [&](const ComplexMatrix& x) { return apply_channel(second, apply_channel(first, x)); });
}

}  // namespace aqnn
