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

#include "aqnn/feedforward.hpp"

#include <cmath>
#include <sstream>

#include "aqnn/error.hpp"

namespace aqnn {

namespace {

Eigen::Index idx(std::size_t n) { return static_cast<Eigen::Index>(n); }

// Position of |a, k> in A (x) B with a two-dimensional output.
Eigen::Index io(std::size_t a, std::size_t k) { return idx(a * 2 + k); }

void check_qubit_output(const DensityMatrix& s, const char* what) {
  if (s.dim() != 2) {
    throw DimensionError(std::string(what) + ": output states must be 2-dimensional");
  }
}

std::size_t integer_sqrt(std::size_t m) {
  auto r = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(m))));
  return r * r == m ? r : 0;
}

}  // namespace

void PerceptronSpec::validate(double tol) const {
  if (m0 < 1 || m0 >= input_dim) {
    throw InvariantError("perceptron: both sectors must be non-empty (1 <= M0 < N_A)");
  }
  if (x.rows() != idx(m0) || x.cols() != idx(m1())) {
    std::ostringstream msg;
    msg << "perceptron: X must be " << m0 << "x" << m1() << ", got " << x.rows() << "x"
        << x.cols();
    throw DimensionError(msg.str());
  }
  if (!all_finite(x)) {
    throw InvariantError("perceptron: X has non-finite entries");
  }
  Eigen::JacobiSVD<ComplexMatrix> svd(x);
  const double smax = svd.singularValues().size() > 0 ? svd.singularValues()(0) : 0.0;
  if (smax > 1.0 + tol) {
    std::ostringstream msg;
    msg << "perceptron: largest singular value of X is " << smax
        << "; complete positivity requires X X^dag <= 1";
    throw InvariantError(msg.str());
  }
}

ComplexMatrix assemble_perceptron_choi(std::size_t input_dim, std::size_t m0,
                                       const ComplexMatrix& x) {
  const std::size_t m1 = input_dim - m0;
  ComplexMatrix e = ComplexMatrix::Zero(idx(2 * input_dim), idx(2 * input_dim));
  for (std::size_t a = 0; a < input_dim; ++a) {
    const std::size_t k = a < m0 ? 0 : 1;
    e(io(a, k), io(a, k)) = 1.0;
  }
  for (std::size_t i = 0; i < m0; ++i) {
    for (std::size_t j = 0; j < m1; ++j) {
      const Complex v = x(idx(i), idx(j));
      e(io(i, 0), io(m0 + j, 1)) = v;
      e(io(m0 + j, 1), io(i, 0)) = std::conj(v);
    }
  }
  return e;
}

ChoiMatrix build_perceptron_canonical(const PerceptronSpec& spec, double tol) {
  spec.validate(tol);
  return ChoiMatrix(BipartiteDims(spec.input_dim, 2),
                    assemble_perceptron_choi(spec.input_dim, spec.m0, spec.x));
}

CandidateChannel build_perceptron_general(const PerceptronSpec& spec, const BasisTransform& t_a,
                                          const BasisTransform& t_b, double tol) {
  if (t_a.dim() != spec.input_dim || t_b.dim() != 2) {
    throw DimensionError("perceptron: T_A must act on the input space and T_B on the 2-dim output");
  }
  const ChoiMatrix canonical = build_perceptron_canonical(spec, tol);
  ChoiMatrix choi = choi_from_action(canonical.dims(), [&](const ComplexMatrix& x) {
    const ComplexMatrix inner = t_a.inverse() * x * t_a.inverse().adjoint();
    return ComplexMatrix(t_b.matrix() * apply_channel(canonical, inner) * t_b.matrix().adjoint());
  });
  CptpReport report = verify_cptp(choi, tol);
  return {std::move(choi), report};
}

Classification classify(const ChoiMatrix& e, const DensityMatrix& rho,
                        const std::array<DensityMatrix, 2>& outputs) {
  if (e.output_dim() != 2) {
    throw DimensionError("classify: channel must have a 2-dimensional output");
  }
  check_qubit_output(outputs[0], "classify");
  check_qubit_output(outputs[1], "classify");
  const ComplexMatrix out = apply_channel(e, rho.matrix());
  Classification c;
  for (std::size_t k = 0; k < 2; ++k) {
    c.overlaps[k] = (out * outputs[k].matrix()).trace().real();
  }
  c.label = c.overlaps[1] > c.overlaps[0] ? 1 : 0;
  c.confidence = c.overlaps[static_cast<std::size_t>(c.label)];
  return c;
}

std::vector<ComplexMatrix> reduced_states(std::span<const PureState> states, std::size_t n) {
  std::vector<ComplexMatrix> out;
  out.reserve(states.size());
  const BipartiteDims dims(n, n);
  for (const auto& psi : states) {
    if (psi.dim() != n * n) {
      throw DimensionError("reduced_states: state does not live on A (x) A'");
    }
    out.push_back(partial_trace(psi.projector(), dims, Subsystem::B));
  }
  return out;
}

bool reductions_span_operators(std::span<const PureState> states, std::size_t n, double tol) {
  if (states.empty()) {
    return false;
  }
  const auto reduced = reduced_states(states, n);
  return operator_rank(reduced, tol) == n * n;
}

std::vector<PureState> random_bipartite_operator_basis(std::size_t n, SeedStream& stream,
                                                       std::size_t max_retries) {
  if (n < 2) {
    throw InvariantError("random_bipartite_operator_basis: requires N >= 2");
  }
  for (std::size_t attempt = 0; attempt <= max_retries; ++attempt) {
    std::vector<PureState> states;
    states.reserve(n * n);
    for (std::size_t mu = 0; mu < n * n; ++mu) {
      states.push_back(random_pure_state(n * n, stream));
    }
    if (reductions_span_operators(states, n)) {
      return states;
    }
  }
  throw NumericalError("random_bipartite_operator_basis: reductions rank deficient after retries");
}

std::vector<PureState> product_vector_basis(std::size_t n, SeedStream& stream,
                                            std::size_t max_retries) {
  if (n < 2) {
    throw InvariantError("product_vector_basis: requires N >= 2");
  }
  const std::size_t count = n * n;
  const double distinct_tol = 1e-9;
  for (std::size_t attempt = 0; attempt <= max_retries; ++attempt) {
    std::vector<PureState> left;
    std::vector<PureState> right;
    for (std::size_t mu = 0; mu < count; ++mu) {
      left.push_back(random_pure_state(n, stream));
      right.push_back(random_pure_state(n, stream));
    }
    bool distinct = true;
    for (std::size_t a = 0; a < count && distinct; ++a) {
      for (std::size_t b = a + 1; b < count && distinct; ++b) {
        const double ol = std::abs(left[a].amplitudes().dot(left[b].amplitudes()));
        const double orr = std::abs(right[a].amplitudes().dot(right[b].amplitudes()));
        distinct = ol < 1.0 - distinct_tol && orr < 1.0 - distinct_tol;
      }
    }
    if (!distinct) {
      continue;
    }
    std::vector<PureState> states;
    states.reserve(count);
    for (std::size_t mu = 0; mu < count; ++mu) {
      states.push_back(PureState::normalized(
          tensor_product(left[mu].amplitudes(), right[mu].amplitudes())));
    }
    if (reductions_span_operators(states, n)) {
      return states;
    }
  }
  throw NumericalError("product_vector_basis: no admissible product basis after retries");
}

std::vector<PureState> orthonormalize(std::span<const PureState> states) {
  if (states.empty()) {
    return {};
  }
  const auto dim = idx(states.front().dim());
  ComplexMatrix a(dim, idx(states.size()));
  for (std::size_t k = 0; k < states.size(); ++k) {
    if (idx(states[k].dim()) != dim) {
      throw DimensionError("orthonormalize: states differ in dimension");
    }
    a.col(idx(k)) = states[k].amplitudes();
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(a);
  const ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(dim, a.cols());
  const ComplexMatrix& r = qr.matrixQR();
  std::vector<PureState> out;
  out.reserve(states.size());
  for (Eigen::Index k = 0; k < a.cols(); ++k) {
    const Complex d = r(k, k);
    if (std::abs(d) < 1e-12) {
      throw InvariantError("orthonormalize: states are linearly dependent");
    }
    out.push_back(PureState::normalized(q.col(k) * (d / std::abs(d))));
  }
  return out;
}

CompositeMap build_feedforward_map(std::span<const PureState> basis, const CorrelationMatrix& b,
                                double tol) {
  const std::size_t count = basis.size();
  const std::size_t n = integer_sqrt(count);
  if (n < 1) {
    throw DimensionError("build_feedforward_map: basis size must be a perfect square N^2");
  }
  if (b.dim() != count) {
    throw DimensionError("build_feedforward_map: correlation matrix must have dimension N^2");
  }
  ComplexMatrix columns(idx(count), idx(count));
  for (std::size_t mu = 0; mu < count; ++mu) {
    if (basis[mu].dim() != count) {
      throw DimensionError("build_feedforward_map: basis states must live on A (x) A'");
    }
    columns.col(idx(mu)) = basis[mu].amplitudes();
  }
  const BasisTransform t = [&] {
    try {
      return BasisTransform::from_matrix(columns);
    } catch (const InvariantError&) {
      throw InvariantError("build_feedforward_map: basis states are linearly dependent");
    }
  }();

  CandidateChannel attractor = build_general(b, t, tol);
  ChoiMatrix composite =
      compose(choi_partial_trace(BipartiteDims(n, n), Subsystem::B), attractor.choi);
  const CptpReport report = verify_cptp(composite, tol);

  std::vector<IoRelation> relations;
  std::vector<ComplexMatrix> outputs;
  relations.reserve(count);
  for (const auto& psi : basis) {
    DensityMatrix input = DensityMatrix::from_pure(psi);
    DensityMatrix target = DensityMatrix::from_matrix(
        partial_trace(input.matrix(), BipartiteDims(n, n), Subsystem::B));
    ComplexMatrix achieved = apply_channel(composite, input.matrix());
    const double residual = trace_distance(target.matrix(), achieved);
    outputs.push_back(achieved);
    relations.push_back({std::move(input), std::move(target), std::move(achieved), residual});
  }
  const std::size_t rank = operator_rank(outputs);
  return {std::move(composite), report, std::move(attractor.choi), std::move(relations), rank};
}

}  // namespace aqnn
