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

#include <optional>
#include <span>
#include <vector>

#include "aqnn/channel.hpp"
#include "aqnn/random.hpp"

namespace aqnn {

/// Coefficients beta_{mu nu} = 1 + alpha_{mu nu} of the canonical attractor.
///
/// Hermitian, unit diagonal and positive semidefinite. PSD is the exact
/// condition for the canonical Choi operator to be positive; it implies
/// |beta_{mu nu}| <= 1 off the diagonal.
class CorrelationMatrix {
 public:
  /// Validates the invariants within `tol`; the diagonal is then set to 1
  /// exactly and the matrix replaced by its Hermitian part.
  static CorrelationMatrix from_matrix(const ComplexMatrix& m, double tol = kDefaultTol);
  /// All entries 1: the identity channel.
  static CorrelationMatrix all_ones(std::size_t n);
  /// beta = 1: the completely dephasing channel.
  static CorrelationMatrix identity(std::size_t n);

  std::size_t dim() const { return static_cast<std::size_t>(matrix_.rows()); }
  const ComplexMatrix& matrix() const { return matrix_; }

 private:
  explicit CorrelationMatrix(ComplexMatrix m) : matrix_(std::move(m)) {}
  ComplexMatrix matrix_;
};

/// Invertible change of basis T with T|mu> = |r_mu>.
class BasisTransform {
 public:
  static constexpr double kInvertibleTol = 1e-10;

  /// Throws InvariantError when the smallest singular value is below
  /// `inv_tol`. The unitary flag is ||T^dag T - 1||_F <= orth_tol.
  static BasisTransform from_matrix(const ComplexMatrix& t, double inv_tol = kInvertibleTol,
                                    double orth_tol = kDefaultTol);
  static BasisTransform identity(std::size_t n);

  std::size_t dim() const { return static_cast<std::size_t>(matrix_.rows()); }
  const ComplexMatrix& matrix() const { return matrix_; }
  const ComplexMatrix& inverse() const { return inverse_; }
  bool is_unitary() const { return unitary_; }
  double min_singular_value() const { return min_singular_value_; }

 private:
  BasisTransform(ComplexMatrix t, ComplexMatrix inv, bool unitary, double smin)
      : matrix_(std::move(t)), inverse_(std::move(inv)), unitary_(unitary), min_singular_value_(smin) {}
  ComplexMatrix matrix_;
  ComplexMatrix inverse_;
  bool unitary_ = false;
  double min_singular_value_ = 0.0;
};

/// Choi operator plus its CPTP certificate; used by constructions whose
/// output is only guaranteed trace preserving for unitary transforms.
struct CandidateChannel {
  ChoiMatrix choi;
  CptpReport report;
};

/// E = sum_{mu nu} beta_{mu nu} |mu mu><nu nu|. The channel multiplies
/// rho entrywise by beta and fixes every |mu><mu|.
ChoiMatrix build_canonical(const CorrelationMatrix& b);

/// Normalized Gram matrix of `n` random complex vectors in C^rank.
CorrelationMatrix random_correlation_matrix(std::size_t n, std::size_t rank, SeedStream& stream);

/// Lambda(rho) = T Lambda_B(T^-1 rho T^-dag) T^dag with Lambda_B the
/// canonical channel of `b`. Fixes every T|mu><mu|T^dag; trace preserving
/// in general only when T is unitary (up to a diagonal rescaling).
CandidateChannel build_general(const CorrelationMatrix& b, const BasisTransform& t,
                               double tol = kDefaultTol);

/// Moduli |<mu|rho_k|nu>| for k = 0..steps under repeated application of
/// the canonical channel of `b`.
std::vector<RealMatrix> coherence_decay_profile(const CorrelationMatrix& b,
                                                const DensityMatrix& rho, std::size_t steps);

struct TrivialityCheck {
  double residual = 0.0;  // ||Lambda(|e><e|) - |e><e| ||_F
  bool trivial = false;   // residual <= tol
};

/// Tests whether the canonical channel of `b` additionally fixes the
/// superposition |e> = sum_mu c_mu |mu> (all c_mu nonzero). A fixed |e>
/// forces the channel to be the identity.
TrivialityCheck check_triviality(const CorrelationMatrix& b, const ComplexVector& c,
                                 double tol = kDefaultTol);

struct ClassicalEnsembleReport {
  bool is_classical = false;
  std::optional<BasisTransform> transform;  // T with T rho_mu T^dag diagonal
  std::vector<RealVector> diagonals;        // diag(T rho_mu T^dag), when classical
  double max_commutator_norm = 0.0;         // over whitened pairs, Frobenius
  double diagonalization_residual = 0.0;    // max ||T rho T^dag - diag||_F
};

inline constexpr double kClassicalTol = 1e-8;

ClassicalEnsembleReport detect_classical_ensemble(std::span<const DensityMatrix> states,
                                                  double tol = kClassicalTol);

/// Attractor fixing every member of a classical ensemble.
CandidateChannel build_mixed_attractor(const ClassicalEnsembleReport& report,
                                       const CorrelationMatrix& b, double tol = kDefaultTol);

}  // namespace aqnn
