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

#include "aqnn/attractor.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "aqnn/error.hpp"

namespace aqnn {

namespace {

Eigen::Index idx(std::size_t n) { return static_cast<Eigen::Index>(n); }

// Conjugates the entrywise action of b by t: x -> T (B o (T^-1 x T^-dag)) T^dag.
ComplexMatrix similarity_schur(const CorrelationMatrix& b, const BasisTransform& t,
                               const ComplexMatrix& x) {
  const ComplexMatrix inner = t.inverse() * x * t.inverse().adjoint();
  return t.matrix() * b.matrix().cwiseProduct(inner) * t.matrix().adjoint();
}

}  // namespace

CorrelationMatrix CorrelationMatrix::from_matrix(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw DimensionError("correlation matrix must be square and non-empty");
  }
  if (!all_finite(m)) {
    throw InvariantError("correlation matrix has non-finite entries");
  }
  if (hermiticity_deviation(m) > tol) {
    throw InvariantError("correlation matrix is not Hermitian");
  }
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (std::abs(m(i, i) - 1.0) > tol) {
      std::ostringstream msg;
      msg << "correlation matrix diagonal entry " << i << " is " << m(i, i).real()
          << ", must be 1 (alpha_{mu mu} = 0)";
      throw InvariantError(msg.str());
    }
  }
  ComplexMatrix h = 0.5 * (m + m.adjoint());
  h.diagonal().setOnes();
  const PsdCheck psd = is_psd(h, tol);
  if (!psd.psd) {
    std::ostringstream msg;
    msg << "correlation matrix is not positive semidefinite (min eigenvalue "
        << psd.min_eigenvalue << "); the attractor would not be completely positive";
    throw InvariantError(msg.str());
  }
  return CorrelationMatrix(std::move(h));
}

CorrelationMatrix CorrelationMatrix::all_ones(std::size_t n) {
  return CorrelationMatrix(ComplexMatrix::Ones(idx(n), idx(n)));
}

CorrelationMatrix CorrelationMatrix::identity(std::size_t n) {
  return CorrelationMatrix(ComplexMatrix::Identity(idx(n), idx(n)));
}

BasisTransform BasisTransform::from_matrix(const ComplexMatrix& t, double inv_tol,
                                           double orth_tol) {
  if (t.rows() != t.cols() || t.rows() == 0) {
    throw DimensionError("basis transform must be square and non-empty");
  }
  if (!all_finite(t)) {
    throw InvariantError("basis transform has non-finite entries");
  }
  Eigen::JacobiSVD<ComplexMatrix> svd(t);
  const double smin = svd.singularValues()(svd.singularValues().size() - 1);
  if (smin < inv_tol) {
    std::ostringstream msg;
    msg << "basis transform is singular (smallest singular value " << smin << ")";
    throw InvariantError(msg.str());
  }
  const auto n = t.rows();
  const bool unitary = (t.adjoint() * t - ComplexMatrix::Identity(n, n)).norm() <= orth_tol;
  ComplexMatrix inv = unitary ? ComplexMatrix(t.adjoint()) : ComplexMatrix(t.inverse());
  return BasisTransform(t, std::move(inv), unitary, smin);
}

BasisTransform BasisTransform::identity(std::size_t n) {
  const auto i = ComplexMatrix::Identity(idx(n), idx(n));
  return BasisTransform(i, i, true, 1.0);
}

ChoiMatrix build_canonical(const CorrelationMatrix& b) {
  const std::size_t n = b.dim();
  ComplexMatrix e = ComplexMatrix::Zero(idx(n * n), idx(n * n));
  for (std::size_t mu = 0; mu < n; ++mu) {
    for (std::size_t nu = 0; nu < n; ++nu) {
      e(idx(mu * n + mu), idx(nu * n + nu)) = b.matrix()(idx(mu), idx(nu));
    }
  }
  return ChoiMatrix(BipartiteDims(n, n), std::move(e));
}

CorrelationMatrix random_correlation_matrix(std::size_t n, std::size_t rank, SeedStream& stream) {
  if (rank < 1 || rank > n) {
    throw InvariantError("random_correlation_matrix: rank must satisfy 1 <= rank <= N");
  }
  ComplexMatrix g = random_ginibre(n, rank, stream);
  g.rowwise().normalize();
  ComplexMatrix b = g * g.adjoint();
  b = 0.5 * (b + b.adjoint());
  b.diagonal().setOnes();
  return CorrelationMatrix::from_matrix(b);
}

CandidateChannel build_general(const CorrelationMatrix& b, const BasisTransform& t, double tol) {
  if (b.dim() != t.dim()) {
    throw DimensionError("build_general: correlation matrix and transform dimensions differ");
  }
  const std::size_t n = b.dim();
  ChoiMatrix choi = choi_from_action(
      BipartiteDims(n, n), [&](const ComplexMatrix& x) { return similarity_schur(b, t, x); });
  CptpReport report = verify_cptp(choi, tol);
  return {std::move(choi), report};
}

std::vector<RealMatrix> coherence_decay_profile(const CorrelationMatrix& b,
                                                const DensityMatrix& rho, std::size_t steps) {
  if (rho.dim() != b.dim()) {
    throw DimensionError("coherence_decay_profile: state and correlation matrix differ in size");
  }
  const ChoiMatrix e = build_canonical(b);
  std::vector<RealMatrix> profile;
  profile.reserve(steps + 1);
  ComplexMatrix current = rho.matrix();
  profile.push_back(current.cwiseAbs());
  for (std::size_t k = 1; k <= steps; ++k) {
    current = apply_channel(e, current);
    profile.push_back(current.cwiseAbs());
  }
  return profile;
}

TrivialityCheck check_triviality(const CorrelationMatrix& b, const ComplexVector& c, double tol) {
  if (static_cast<std::size_t>(c.size()) != b.dim()) {
    throw DimensionError("check_triviality: coefficient vector has the wrong length");
  }
  if (std::abs(c.norm() - 1.0) > tol) {
    throw InvariantError("check_triviality: coefficient vector must have unit norm");
  }
  for (Eigen::Index mu = 0; mu < c.size(); ++mu) {
    if (std::abs(c(mu)) <= tol) {
      std::ostringstream msg;
      msg << "check_triviality: coefficient c_" << mu << " is zero; all c_mu must be nonzero";
      throw InvariantError(msg.str());
    }
  }
  const ComplexMatrix projector = c * c.adjoint();
  const ComplexMatrix image = apply_channel(build_canonical(b), projector);
  TrivialityCheck check;
  check.residual = (image - projector).norm();
  check.trivial = check.residual <= tol;
  return check;
}

namespace {

// Orthonormal basis diagonalizing every member (in the order given).
// Eigenvectors are ordered by descending eigenvalue of the first member;
// clusters that member leaves degenerate are split by the next one.
ComplexMatrix common_eigenbasis(const std::vector<ComplexMatrix>& members, double cluster_tol) {
  const Eigen::Index n = members.front().rows();
  std::vector<ComplexMatrix> blocks{ComplexMatrix::Identity(n, n)};

  auto refine = [](const ComplexMatrix& q, const ComplexMatrix& k) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(q.adjoint() * k * q);
    const RealVector values = solver.eigenvalues().reverse();
    const ComplexMatrix rotated = q * solver.eigenvectors().rowwise().reverse();
    return std::pair{values, rotated};
  };

  for (const auto& k : members) {
    std::vector<ComplexMatrix> next;
    for (const auto& q : blocks) {
      if (q.cols() == 1) {
        next.push_back(q);
        continue;
      }
      const auto [values, rotated] = refine(q, k);
      const double scale = std::max(1.0, values.cwiseAbs().maxCoeff());
      Eigen::Index start = 0;
      for (Eigen::Index i = 1; i <= values.size(); ++i) {
        if (i == values.size() || values(i - 1) - values(i) > cluster_tol * scale) {
          next.push_back(rotated.middleCols(start, i - start));
          start = i;
        }
      }
    }
    blocks = std::move(next);
  }

  // Blocks no member resolved: settle on the first member's eigenvectors.
  ComplexMatrix basis(n, n);
  Eigen::Index col = 0;
  for (const auto& q : blocks) {
    const ComplexMatrix settled = q.cols() == 1 ? q : refine(q, members.front()).second;
    basis.middleCols(col, settled.cols()) = settled;
    col += settled.cols();
  }
  return basis;
}

}  // namespace

ClassicalEnsembleReport detect_classical_ensemble(std::span<const DensityMatrix> states,
                                                  double tol) {
  if (states.empty()) {
    throw InvariantError("detect_classical_ensemble: ensemble is empty");
  }
  const std::size_t n = states.front().dim();
  ComplexMatrix sigma = ComplexMatrix::Zero(idx(n), idx(n));
  for (const auto& rho : states) {
    if (rho.dim() != n) {
      throw DimensionError("detect_classical_ensemble: members differ in dimension");
    }
    sigma += rho.matrix();
  }
  sigma /= static_cast<double>(states.size());

  const HermitianEigen ref = eig_hermitian(sigma);
  const double reg = 1e-12 * sigma.norm();
  RealVector scale(idx(n));
  std::vector<bool> active(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double lambda = ref.values(idx(i));
    active[i] = lambda >= reg;
    scale(idx(i)) = 1.0 / std::sqrt(std::max(lambda, reg));
  }

  // Whitened members, expressed in the eigenbasis of sigma.
  std::vector<ComplexMatrix> whitened;
  whitened.reserve(states.size());
  for (const auto& rho : states) {
    ComplexMatrix k = ref.vectors.adjoint() * rho.matrix() * ref.vectors;
    for (std::size_t i = 0; i < n; ++i) {
      if (!active[i]) {
        k.row(idx(i)).setZero();
        k.col(idx(i)).setZero();
      }
    }
    k = scale.asDiagonal() * k * scale.asDiagonal();
    whitened.push_back(0.5 * (k + k.adjoint()));
  }

  ClassicalEnsembleReport report;
  for (std::size_t a = 0; a < whitened.size(); ++a) {
    for (std::size_t b = a + 1; b < whitened.size(); ++b) {
      const double c = (whitened[a] * whitened[b] - whitened[b] * whitened[a]).norm();
      report.max_commutator_norm = std::max(report.max_commutator_norm, c);
    }
  }

  const ComplexMatrix v = common_eigenbasis(whitened, std::sqrt(tol));
  ComplexMatrix t = v.adjoint() * scale.asDiagonal() * ref.vectors.adjoint();
  t.rowwise().normalize();

  std::vector<RealVector> diagonals;
  for (const auto& rho : states) {
    const ComplexMatrix d = t * rho.matrix() * t.adjoint();
    ComplexMatrix off = d;
    off.diagonal().setZero();
    report.diagonalization_residual = std::max(report.diagonalization_residual, off.norm());
    diagonals.push_back(d.diagonal().real());
  }

  report.is_classical =
      report.max_commutator_norm <= tol && report.diagonalization_residual <= tol;
  if (report.is_classical) {
    report.transform = BasisTransform::from_matrix(t);
    report.diagonals = std::move(diagonals);
  }
  return report;
}

CandidateChannel build_mixed_attractor(const ClassicalEnsembleReport& report,
                                       const CorrelationMatrix& b, double tol) {
  if (!report.is_classical || !report.transform) {
    throw InvariantError("build_mixed_attractor: ensemble is not classical");
  }
  if (report.transform->dim() != b.dim()) {
    throw DimensionError("build_mixed_attractor: correlation matrix dimension differs");
  }
  const BasisTransform inverse = BasisTransform::from_matrix(report.transform->inverse());
  return build_general(b, inverse, tol);
}

}  // namespace aqnn
