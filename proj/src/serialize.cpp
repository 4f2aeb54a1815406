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

#include "aqnn/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "aqnn/error.hpp"

namespace aqnn {

namespace {

template <class T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing field '") + key + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw ParseError(std::string("field '") + key + "': " + e.what());
  }
}

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

}  // namespace

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

Json matrix_to_json(const ComplexMatrix& m) {
  Json entries = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      entries.push_back(complex_to_json(m(i, j)));
    }
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

ComplexMatrix matrix_from_json(const Json& j) {
  const auto rows = field<std::int64_t>(j, "rows");
  const auto cols = field<std::int64_t>(j, "cols");
  if (rows < 0 || cols < 0) {
    throw ParseError("matrix: negative dimension");
  }
  const Json& entries = j.at("entries");
  if (!entries.is_array() || static_cast<std::int64_t>(entries.size()) != rows * cols) {
    throw ParseError("matrix: 'entries' must hold rows * cols elements");
  }
  ComplexMatrix m(rows, cols);
  for (std::int64_t k = 0; k < rows * cols; ++k) {
    const Json& e = entries[static_cast<std::size_t>(k)];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
      throw ParseError("matrix: each entry must be [re, im]");
    }
    const Complex z(e[0].get<double>(), e[1].get<double>());
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw ParseError("matrix: non-finite entry");
    }
    m(k / cols, k % cols) = z;
  }
  return m;
}

Json choi_to_json(const ChoiMatrix& e) {
  Json j = matrix_to_json(e.matrix());
  j["dimA"] = e.dims().dim_a;
  j["dimB"] = e.dims().dim_b;
  return j;
}

ChoiMatrix choi_from_json(const Json& j) {
  const auto a = field<std::size_t>(j, "dimA");
  const auto b = field<std::size_t>(j, "dimB");
  try {
    return ChoiMatrix(BipartiteDims(a, b), matrix_from_json(j));
  } catch (const DimensionError& e) {
    throw ParseError(std::string("choi: ") + e.what());
  }
}

Json report_to_json(const CptpReport& r) {
  return Json{{"min_eigenvalue", r.min_eigenvalue},
              {"tp_deviation", r.tp_deviation},
              {"hermiticity_deviation", r.hermiticity_deviation},
              {"verdict", std::string(to_string(r.verdict))}};
}

CptpReport report_from_json(const Json& j) {
  CptpReport r;
  r.min_eigenvalue = field<double>(j, "min_eigenvalue");
  r.tp_deviation = field<double>(j, "tp_deviation");
  r.hermiticity_deviation = field<double>(j, "hermiticity_deviation");
  r.verdict = verdict_from_string(field<std::string>(j, "verdict"));
  return r;
}

Json ensemble_report_to_json(const ClassicalEnsembleReport& r) {
  Json diagonals = Json::array();
  for (const auto& d : r.diagonals) {
    diagonals.push_back(std::vector<double>(d.begin(), d.end()));
  }
  return Json{{"is_classical", r.is_classical},
              {"max_commutator_norm", r.max_commutator_norm},
              {"diagonalization_residual", r.diagonalization_residual},
              {"transform", r.transform ? matrix_to_json(r.transform->matrix()) : Json(nullptr)},
              {"diagonals", std::move(diagonals)}};
}

Json fixed_points_to_json(const FixedPointSpace& space) {
  Json eigenvalues = Json::array();
  for (const Complex z : space.eigenvalues) {
    eigenvalues.push_back(complex_to_json(z));
  }
  Json basis = Json::array();
  for (const auto& b : space.basis) {
    basis.push_back(matrix_to_json(b));
  }
  return Json{{"dimension", space.dimension},
              {"peripheral_dimension", space.peripheral_dimension},
              {"hermitian_closed", space.hermitian_closed},
              {"eigenvalues", std::move(eigenvalues)},
              {"basis", std::move(basis)}};
}

Json perceptron_spec_to_json(const PerceptronSpec& spec) {
  return Json{{"input_dim", spec.input_dim}, {"m0", spec.m0}, {"X", matrix_to_json(spec.x)}};
}

PerceptronSpec perceptron_spec_from_json(const Json& j) {
  PerceptronSpec spec;
  spec.input_dim = field<std::size_t>(j, "input_dim");
  spec.m0 = field<std::size_t>(j, "m0");
  if (!j.contains("X")) {
    throw ParseError("missing field 'X'");
  }
  spec.x = matrix_from_json(j.at("X"));
  return spec;
}

Json relation_to_json(const IoRelation& r) {
  return Json{{"input", matrix_to_json(r.input.matrix())},
              {"target", matrix_to_json(r.target.matrix())},
              {"achieved", matrix_to_json(r.achieved)},
              {"residual", r.residual}};
}

std::string relations_csv(const std::vector<IoRelation>& relations) {
  std::ostringstream out;
  out << "index,residual,output_purity\n";
  for (std::size_t k = 0; k < relations.size(); ++k) {
    const double purity = (relations[k].achieved * relations[k].achieved).trace().real();
    out << k << ',' << format_double(relations[k].residual) << ',' << format_double(purity)
        << '\n';
  }
  return out.str();
}

namespace {

struct AnalyticColumns {
  double eq5 = std::nan("");
  double eq7 = std::nan("");
};

AnalyticColumns analytic_columns(const VolumeEstimate& v) {
  AnalyticColumns a;
  const double d = static_cast<double>(manifold_dims(v.config.n).d);
  const double m = static_cast<double>(v.config.m);
  if (d > 0.0 && m < d) {
    a.eq5 = analytic_relative_volume(v.config.epsilon, m, d).value;
    a.eq7 = vr_optimal(m, d);
  }
  return a;
}

}  // namespace

std::string volume_csv(const std::vector<VolumeEstimate>& rows) {
  std::ostringstream out;
  out << "N,M,epsilon,samples,hits,fraction,stderr,analytic_eq5,analytic_eq7\n";
  for (const auto& v : rows) {
    const AnalyticColumns a = analytic_columns(v);
    out << v.config.n << ',' << v.config.m << ',' << format_double(v.config.epsilon) << ','
        << v.samples << ',' << v.hits << ',' << format_double(v.fraction) << ','
        << format_double(v.standard_error) << ',' << format_double(a.eq5) << ','
        << format_double(a.eq7) << '\n';
  }
  return out.str();
}

Json volume_json(const std::vector<VolumeEstimate>& rows) {
  Json out = Json::array();
  for (const auto& v : rows) {
    const AnalyticColumns a = analytic_columns(v);
    auto num = [](double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); };
    out.push_back(Json{{"N", v.config.n},
                       {"M", v.config.m},
                       {"epsilon", v.config.epsilon},
                       {"samples", v.samples},
                       {"hits", v.hits},
                       {"fraction", v.fraction},
                       {"stderr", v.standard_error},
                       {"upper_bound_95", v.upper_bound_95},
                       {"analytic_eq5", num(a.eq5)},
                       {"analytic_eq7", num(a.eq7)}});
  }
  return out;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open '" + path.string() + "'");
  }
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw ParseError("'" + path.string() + "': " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw ParseError("cannot write '" + path.string() + "'");
  }
  out << text;
}

}  // namespace aqnn
