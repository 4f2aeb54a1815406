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

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "aqnn/attractor.hpp"
#include "aqnn/channel.hpp"
#include "aqnn/feedforward.hpp"
#include "aqnn/gardner.hpp"

namespace aqnn {

using Json = nlohmann::json;

// Matrix format: {"rows": r, "cols": c, "entries": [[re, im], ...]} with
// entries in row-major order. Readers throw ParseError on malformed input.
Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j);

// Choi format: the matrix format plus "dimA" and "dimB".
Json choi_to_json(const ChoiMatrix& e);
ChoiMatrix choi_from_json(const Json& j);

Json report_to_json(const CptpReport& r);
CptpReport report_from_json(const Json& j);

Json ensemble_report_to_json(const ClassicalEnsembleReport& r);
Json fixed_points_to_json(const FixedPointSpace& space);

Json perceptron_spec_to_json(const PerceptronSpec& spec);
PerceptronSpec perceptron_spec_from_json(const Json& j);

Json relation_to_json(const IoRelation& r);

/// CSV with columns index,residual,output_purity.
std::string relations_csv(const std::vector<IoRelation>& relations);

/// Gardner sweep columns:
/// N,M,epsilon,samples,hits,fraction,stderr,analytic_eq5,analytic_eq7
std::string volume_csv(const std::vector<VolumeEstimate>& rows);
Json volume_json(const std::vector<VolumeEstimate>& rows);

/// 17 significant digits; reads back to the same double.
std::string format_double(double x);

Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace aqnn
