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

#include <array>
#include <span>
#include <vector>

#include "aqnn/attractor.hpp"
#include "aqnn/channel.hpp"
#include "aqnn/random.hpp"

namespace aqnn {

/// Two-output perceptron: inputs 0..m0-1 map to |0><0|, inputs
/// m0..input_dim-1 to |1><1|. X (m0 x m1) couples the two sectors and must
/// satisfy X X^dag <= 1.
struct PerceptronSpec {
  std::size_t input_dim = 2;
  std::size_t m0 = 1;
  ComplexMatrix x;

  std::size_t m1() const { return input_dim - m0; }
  /// Throws InvariantError when the sectors are empty, X has the wrong
  /// shape, or sigma_max(X) > 1 + tol.
  void validate(double tol = kDefaultTol) const;
};

/// Raw canonical perceptron Choi operator without any admissibility check.
ComplexMatrix assemble_perceptron_choi(std::size_t input_dim, std::size_t m0, const ComplexMatrix& x);

ChoiMatrix build_perceptron_canonical(const PerceptronSpec& spec, double tol = kDefaultTol);

/// Lambda(rho) = T_B Lambda_X(T_A^-1 rho T_A^-dag) T_B^dag.
CandidateChannel build_perceptron_general(const PerceptronSpec& spec, const BasisTransform& t_a,
                                          const BasisTransform& t_b, double tol = kDefaultTol);

struct Classification {
  int label = 0;
  double confidence = 0.0;        // overlap of the winning label
  std::array<double, 2> overlaps{};  // Tr[Lambda(rho) sigma_k]
};

/// Label = argmax_k Tr[Lambda(rho) sigma_k]; ties go to label 0.
Classification classify(const ChoiMatrix& e, const DensityMatrix& rho,
                        const std::array<DensityMatrix, 2>& outputs);

/// Tr_{A'} of each state on A (x) A' with dim A = dim A' = n.
std::vector<ComplexMatrix> reduced_states(std::span<const PureState> states, std::size_t n);

/// True iff the n^2 reductions span the operator space on A.
bool reductions_span_operators(std::span<const PureState> states, std::size_t n,
                               double tol = 1e-10);

/// n^2 Haar-random pure states on A (x) A' whose reductions form an operator
/// basis; redraws up to `max_retries` times on rank deficiency.
std::vector<PureState> random_bipartite_operator_basis(std::size_t n, SeedStream& stream,
                                                       std::size_t max_retries = 16);

/// n^2 product states |r_mu> (x) |r'_mu> with pairwise distinct factors.
std::vector<PureState> product_vector_basis(std::size_t n, SeedStream& stream,
                                            std::size_t max_retries = 16);

/// Gram-Schmidt (QR) orthonormalization of a linearly independent set.
std::vector<PureState> orthonormalize(std::span<const PureState> states);

struct IoRelation {
  DensityMatrix input;
  DensityMatrix target;
  ComplexMatrix achieved;
  double residual = 0.0;  // trace distance(target, achieved)
};

struct CompositeMap {
  ChoiMatrix choi;      // dims (n^2, n)
  CptpReport report;
  ChoiMatrix attractor; // dims (n^2, n^2), fixes every basis state
  std::vector<IoRelation> relations;
  std::size_t output_operator_rank = 0;
};

/// Tr_{A'} o attractor, where the attractor fixes each basis state. The
/// basis transform has the basis vectors as columns, so an orthonormal
/// basis gives a certified CPTP composite.
CompositeMap build_feedforward_map(std::span<const PureState> basis, const CorrelationMatrix& b,
                                double tol = kDefaultTol);

}  // namespace aqnn
