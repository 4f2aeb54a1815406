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

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "aqnn/linalg.hpp"
#include "aqnn/states.hpp"

namespace aqnn {

/// Choi (JCS) operator E = sum_ij |i><j| (x) Lambda(|i><j|) on A (x) B.
///
/// The channel acts as Lambda(rho) = Tr_A[E (rho^T (x) 1_B)]. A ChoiMatrix
/// only guarantees consistent shape; complete positivity and trace
/// preservation are certified separately by verify_cptp.
class ChoiMatrix {
 public:
  ChoiMatrix(BipartiteDims dims, ComplexMatrix matrix);

  const BipartiteDims& dims() const { return dims_; }
  const ComplexMatrix& matrix() const { return matrix_; }
  std::size_t input_dim() const { return dims_.dim_a; }
  std::size_t output_dim() const { return dims_.dim_b; }

 private:
  BipartiteDims dims_;
  ComplexMatrix matrix_;
};

enum class CptpVerdict { cptp, cp_only, tp_only, neither };

std::string_view to_string(CptpVerdict v);
CptpVerdict verdict_from_string(std::string_view s);

struct CptpReport {
  double min_eigenvalue = 0.0;
  double tp_deviation = 0.0;           // ||Tr_B E - 1_A||_F
  double hermiticity_deviation = 0.0;  // ||E - E^dag||_F
  CptpVerdict verdict = CptpVerdict::neither;

  bool is_cptp() const { return verdict == CptpVerdict::cptp; }
};

struct KrausSet {
  BipartiteDims dims;
  std::vector<ComplexMatrix> operators;  // each dim_b x dim_a
};

/// N_B^2 x N_A^2 linearization: vec(Lambda(rho)) = matrix * vec(rho) with
/// row-major vec.
struct TransferMatrix {
  BipartiteDims dims;
  ComplexMatrix matrix;
};

struct FixedPointSpace {
  std::size_t dimension = 0;             // eigenvalues with |lambda - 1| <= tol
  std::size_t peripheral_dimension = 0;  // |lambda| = 1 within tol, lambda != 1
  std::vector<ComplexMatrix> basis;      // orthonormal in the Frobenius inner product
  bool hermitian_closed = false;         // span closed under X -> X^dag
  std::vector<Complex> eigenvalues;      // full spectrum, descending modulus
};

struct Trajectory {
  std::vector<DensityMatrix> states;  // rho_0 .. rho_k
  std::vector<double> distances;      // distances[k-1] = D(rho_k, rho_{k-1}) per application
  bool converged = false;
  std::size_t steps = 0;              // channel applications performed
};

ChoiMatrix choi_identity(std::size_t n);
/// 1_A (x) 1_B / N_B: every input goes to the maximally mixed output.
ChoiMatrix choi_depolarizing(BipartiteDims dims);
/// Choi of rho_{AB} -> Tr_{traced}(rho_{AB}) for the given split of the input.
ChoiMatrix choi_partial_trace(BipartiteDims input_split, Subsystem traced);

/// Builds the Choi matrix of a linear map from its action on matrix units.
ChoiMatrix choi_from_action(BipartiteDims dims,
                            const std::function<ComplexMatrix(const ComplexMatrix&)>& action);

/// Direct contraction Tr_A[E (x^T (x) 1)] for an arbitrary operator x.
ComplexMatrix apply_channel(const ChoiMatrix& e, const ComplexMatrix& x);
/// State-to-state version; throws InvariantError when the output is not a
/// valid state (only possible for non-CPTP candidates).
DensityMatrix apply_channel(const ChoiMatrix& e, const DensityMatrix& rho);

CptpReport verify_cptp(const ChoiMatrix& e, double tol = kDefaultTol);

KrausSet kraus_from_choi(const ChoiMatrix& e, double tol = kDefaultTol);
ComplexMatrix apply_kraus(const KrausSet& kraus, const ComplexMatrix& x);

TransferMatrix transfer_matrix(const ChoiMatrix& e);

inline constexpr double kFixedPointTol = 1e-8;

FixedPointSpace fixed_point_space(const ChoiMatrix& e, double tol = kFixedPointTol);

Trajectory iterate(const ChoiMatrix& e, const DensityMatrix& rho0, std::size_t max_steps,
                   double conv_tol);

/// Choi of Lambda_2 o Lambda_1.
ChoiMatrix compose(const ChoiMatrix& second, const ChoiMatrix& first);

}  // namespace aqnn
