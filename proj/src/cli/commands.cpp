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

#include "commands.hpp"

#include <cstdlib>
#include <filesystem>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "aqnn/attractor.hpp"
#include "aqnn/channel.hpp"
#include "aqnn/error.hpp"
#include "aqnn/feedforward.hpp"
#include "aqnn/gardner.hpp"
#include "aqnn/serialize.hpp"
#include "aqnn/version.hpp"
#include "manifest.hpp"

namespace aqnn::cli {

namespace fs = std::filesystem;

namespace {

// JSON config files: top-level keys are global options, nested objects are
// subcommand sections, e.g. {"seed": 7, "gardner": {"mc": {"samples": 1000}}}.
class ConfigJson : public CLI::Config {
 public:
  std::string to_config(const CLI::App* app, bool, bool, std::string) const override {
    return to_json(*app).dump(2);
  }

  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
    Json j;
    try {
      j = Json::parse(input);
    } catch (const Json::exception& e) {
      throw ParseError(std::string("config file: ") + e.what());
    }
    if (!j.is_object()) {
      throw ParseError("config file: top level must be a JSON object");
    }
    std::vector<CLI::ConfigItem> items;
    flatten(j, {}, items);
    return items;
  }

 private:
  static std::string scalar(const Json& v) {
    return v.is_string() ? v.get<std::string>() : v.dump();
  }

  static void flatten(const Json& j, const std::vector<std::string>& parents,
                      std::vector<CLI::ConfigItem>& items) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_object()) {
        auto nested = parents;
        nested.push_back(key);
        flatten(value, nested, items);
        continue;
      }
      if (value.is_null()) {
        continue;
      }
      CLI::ConfigItem item;
      item.parents = parents;
      item.name = key;
      if (value.is_array()) {
        for (const auto& v : value) {
          item.inputs.push_back(scalar(v));
        }
      } else {
        item.inputs.push_back(scalar(value));
      }
      items.push_back(std::move(item));
    }
  }

  static Json to_json(const CLI::App& app) {
    Json j = Json::object();
    for (const CLI::Option* opt : app.get_options()) {
      if (opt->get_lnames().empty() || opt->count() == 0) {
        continue;
      }
      const std::string& name = opt->get_lnames().front();
      if (name == "help" || name == "config") {
        continue;
      }
      j[name] = opt->results().size() == 1 ? Json(opt->results().front()) : Json(opt->results());
    }
    for (const CLI::App* sub : app.get_subcommands()) {
      j[sub->get_name()] = to_json(*sub);
    }
    return j;
  }
};

struct Globals {
  std::uint64_t seed = 0;
  double tol = kDefaultTol;
  bool tol_explicit = false;
  unsigned threads = 1;
  std::string out;
  std::string manifest;
};

struct ConstructOptions {
  std::string kind;
  std::size_t n = 2;
  std::size_t rank = 0;
  std::size_t m0 = 1;
  std::string b_path;
  std::string t_path;
  std::string states_path;
  std::string spec_path;
  std::string x_path;
  std::string ta_path;
  std::string tb_path;
  bool raw_basis = false;
};

struct ChannelOptions {
  std::string choi_path;
  std::string rho_path;
  std::size_t steps = 1000;
  double conv_tol = 1e-12;
};

struct GardnerOptions {
  std::size_t n = 2;
  std::vector<std::size_t> ms{1};
  std::vector<double> epsilons{0.1};
  std::size_t samples = 10000;
  std::string format = "csv";
  std::vector<double> ds;
  std::vector<std::size_t> ns;
  bool mixed = false;
  unsigned n_min = 1;
  unsigned n_max = 6;
};

ComplexMatrix load_matrix(const std::string& path) {
  return matrix_from_json(read_json_file(path));
}

std::vector<DensityMatrix> load_states(const std::string& path, double tol) {
  const Json j = read_json_file(path);
  const Json& list = j.is_object() && j.contains("states") ? j.at("states") : j;
  if (!list.is_array()) {
    throw ParseError("states file must be a JSON array of matrices");
  }
  std::vector<DensityMatrix> states;
  for (const auto& m : list) {
    states.push_back(DensityMatrix::from_matrix(matrix_from_json(m), tol));
  }
  return states;
}

CorrelationMatrix correlation_or_random(const ConstructOptions& o, std::size_t n, double tol,
                                        SeedStream& stream) {
  if (!o.b_path.empty()) {
    CorrelationMatrix b = CorrelationMatrix::from_matrix(load_matrix(o.b_path), tol);
    if (b.dim() != n) {
      throw DimensionError("correlation matrix has dimension " + std::to_string(b.dim()) +
                           ", expected " + std::to_string(n));
    }
    return b;
  }
  return random_correlation_matrix(n, o.rank == 0 ? n : o.rank, stream);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json global_parameters(const Globals& g) {
  return Json{{"seed", g.seed}, {"tol", g.tol}, {"threads", g.threads}, {"out", g.out}};
}

void emit_manifest(const RunManifest& manifest, const fs::path& fallback, const Globals& g,
                   std::ostream& err) {
  const Json j = manifest.finish();
  if (!g.manifest.empty()) {
    write_text_file(g.manifest, dump(j));
  } else if (!fallback.empty()) {
    write_text_file(fallback, dump(j));
  } else {
    err << "manifest: " << j.dump() << "\n";
  }
}

// Manifest next to a single output file, or on stderr when writing to stdout.
fs::path sidecar(const std::string& out) {
  return out.empty() ? fs::path() : fs::path(out + ".manifest.json");
}

void write_or_print(RunManifest& manifest, const std::string& path, const std::string& text,
                    std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    manifest.write_output(path, text);
  }
}

int cmd_construct(const ConstructOptions& o, const Globals& g, std::ostream& out,
                  std::ostream& err) {
  const fs::path dir = g.out.empty() ? fs::path(".") : fs::path(g.out);
  SeedStream stream(g.seed, 0);
  Json params = global_parameters(g);
  params["construct"] = Json{{"kind", o.kind},       {"N", o.n},           {"rank", o.rank},
                             {"m0", o.m0},           {"B", o.b_path},      {"T", o.t_path},
                             {"states", o.states_path}, {"spec", o.spec_path}, {"X", o.x_path},
                             {"TA", o.ta_path},      {"TB", o.tb_path},    {"raw-basis", o.raw_basis}};
  RunManifest manifest("construct", params, g.seed);

  std::optional<ChoiMatrix> choi;
  Json report;

  if (o.kind == "canonical" || o.kind == "general") {
    std::size_t n = o.n;
    if (!o.b_path.empty()) {
      n = static_cast<std::size_t>(load_matrix(o.b_path).rows());
    }
    const CorrelationMatrix b = correlation_or_random(o, n, g.tol, stream);
    manifest.write_output(dir / "correlation.json", dump(matrix_to_json(b.matrix())));
    if (o.kind == "canonical") {
      choi = build_canonical(b);
      report = report_to_json(verify_cptp(*choi, g.tol));
    } else {
      const BasisTransform t = o.t_path.empty()
                                   ? BasisTransform::from_matrix(haar_unitary(n, stream))
                                   : BasisTransform::from_matrix(load_matrix(o.t_path));
      manifest.write_output(dir / "transform.json", dump(matrix_to_json(t.matrix())));
      CandidateChannel c = build_general(b, t, g.tol);
      choi = std::move(c.choi);
      report = report_to_json(c.report);
    }
  } else if (o.kind == "mixed") {
    if (o.states_path.empty()) {
      throw InvariantError("construct mixed: --states is required");
    }
    const auto states = load_states(o.states_path, g.tol);
    const ClassicalEnsembleReport ens =
        detect_classical_ensemble(states, g.tol_explicit ? g.tol : kClassicalTol);
    manifest.write_output(dir / "ensemble.json", dump(ensemble_report_to_json(ens)));
    if (!ens.is_classical) {
      std::ostringstream msg;
      msg << "construct mixed: ensemble is not classical (max whitened commutator "
          << ens.max_commutator_norm << ")";
      throw InvariantError(msg.str());
    }
    const CorrelationMatrix b = correlation_or_random(o, states.front().dim(), g.tol, stream);
    CandidateChannel c = build_mixed_attractor(ens, b, g.tol);
    choi = std::move(c.choi);
    report = report_to_json(c.report);
  } else if (o.kind == "perceptron") {
    PerceptronSpec spec;
    if (!o.spec_path.empty()) {
      spec = perceptron_spec_from_json(read_json_file(o.spec_path));
    } else {
      spec.input_dim = o.n;
      spec.m0 = o.m0;
      if (o.m0 >= o.n) {
        throw InvariantError("perceptron: both sectors must be non-empty (1 <= M0 < N_A)");
      }
      spec.x = o.x_path.empty()
                   ? ComplexMatrix::Zero(static_cast<Eigen::Index>(o.m0),
                                         static_cast<Eigen::Index>(o.n - o.m0))
                   : load_matrix(o.x_path);
    }
    spec.validate(g.tol);
    manifest.write_output(dir / "spec.json", dump(perceptron_spec_to_json(spec)));
    if (o.ta_path.empty() && o.tb_path.empty()) {
      choi = build_perceptron_canonical(spec, g.tol);
      report = report_to_json(verify_cptp(*choi, g.tol));
    } else {
      const BasisTransform ta = o.ta_path.empty() ? BasisTransform::identity(spec.input_dim)
                                                  : BasisTransform::from_matrix(load_matrix(o.ta_path));
      const BasisTransform tb = o.tb_path.empty() ? BasisTransform::identity(2)
                                                  : BasisTransform::from_matrix(load_matrix(o.tb_path));
      CandidateChannel c = build_perceptron_general(spec, ta, tb, g.tol);
      choi = std::move(c.choi);
      report = report_to_json(c.report);
    }
  } else if (o.kind == "theorem3") {
    std::vector<PureState> basis = random_bipartite_operator_basis(o.n, stream);
    if (!o.raw_basis) {
      basis = orthonormalize(basis);
    }
    const CorrelationMatrix b = correlation_or_random(o, o.n * o.n, g.tol, stream);
    CompositeMap map = build_feedforward_map(basis, b, g.tol);
    Json relations = Json::array();
    Json summary = Json::array();
    for (std::size_t k = 0; k < map.relations.size(); ++k) {
      relations.push_back(relation_to_json(map.relations[k]));
      summary.push_back(Json{{"index", k}, {"residual", map.relations[k].residual}});
    }
    manifest.write_output(dir / "relations.json", dump(relations));
    manifest.write_output(dir / "relations.csv", relations_csv(map.relations));
    choi = std::move(map.choi);
    report = report_to_json(map.report);
    report["relations"] = std::move(summary);
    report["output_operator_rank"] = map.output_operator_rank;
  } else {
    throw InvariantError("construct: unknown kind '" + o.kind + "'");
  }

  manifest.write_output(dir / "choi.json", dump(choi_to_json(*choi)));
  manifest.write_output(dir / "report.json", dump(report));
  manifest.set("verdict", report["verdict"]);
  emit_manifest(manifest, dir / "manifest.json", g, err);
  out << dump(report);
  return report["verdict"] == "cptp" ? kSuccess : kVerificationFailed;
}

int cmd_verify(const ChannelOptions& o, const Globals& g, std::ostream& out, std::ostream& err) {
  Json params = global_parameters(g);
  params["verify"] = Json{{"choi", o.choi_path}};
  RunManifest manifest("verify", params, g.seed);
  const ChoiMatrix choi = choi_from_json(read_json_file(o.choi_path));
  const CptpReport report = verify_cptp(choi, g.tol);
  const std::string text = dump(report_to_json(report));
  write_or_print(manifest, g.out, text, out);
  if (!g.out.empty()) {
    out << text;
  }
  manifest.set("verdict", std::string(to_string(report.verdict)));
  emit_manifest(manifest, sidecar(g.out), g, err);
  return report.is_cptp() ? kSuccess : kVerificationFailed;
}

int cmd_iterate(const ChannelOptions& o, const Globals& g, std::ostream& out, std::ostream& err) {
  Json params = global_parameters(g);
  params["iterate"] =
      Json{{"choi", o.choi_path}, {"rho", o.rho_path}, {"steps", o.steps}, {"conv-tol", o.conv_tol}};
  RunManifest manifest("iterate", params, g.seed);
  const ChoiMatrix choi = choi_from_json(read_json_file(o.choi_path));
  const DensityMatrix rho0 = DensityMatrix::from_matrix(load_matrix(o.rho_path), g.tol);
  if (choi.input_dim() != rho0.dim() || choi.output_dim() != rho0.dim()) {
    throw DimensionError("iterate: state dimension does not match the channel");
  }
  const Trajectory traj = iterate(choi, rho0, o.steps, o.conv_tol);

  std::ostringstream csv;
  csv << "step,trace_distance,max_offdiag\n";
  for (std::size_t k = 1; k <= traj.steps; ++k) {
    const ComplexMatrix state = k < traj.states.size()
                                    ? traj.states[k].matrix()
                                    : apply_channel(choi, traj.states.back().matrix());
    ComplexMatrix off = state;
    off.diagonal().setZero();
    const double max_off = off.size() > 0 ? off.cwiseAbs().maxCoeff() : 0.0;
    csv << k << ',' << format_double(traj.distances[k - 1]) << ',' << format_double(max_off)
        << '\n';
  }
  write_or_print(manifest, g.out, csv.str(), out);
  manifest.set("converged", traj.converged);
  manifest.set("steps", traj.steps);
  emit_manifest(manifest, sidecar(g.out), g, err);
  return kSuccess;
}

int cmd_fixed_points(const ChannelOptions& o, const Globals& g, std::ostream& out,
                     std::ostream& err) {
  const double tol = g.tol_explicit ? g.tol : kFixedPointTol;
  Json params = global_parameters(g);
  params["tol"] = tol;
  params["fixed-points"] = Json{{"choi", o.choi_path}};
  RunManifest manifest("fixed-points", params, g.seed);
  const ChoiMatrix choi = choi_from_json(read_json_file(o.choi_path));
  const FixedPointSpace space = fixed_point_space(choi, tol);
  Json full = fixed_points_to_json(space);
  if (!g.out.empty()) {
    manifest.write_output(g.out, dump(full));
  }
  full.erase("basis");
  out << dump(full);
  emit_manifest(manifest, sidecar(g.out), g, err);
  return kSuccess;
}

int cmd_gardner_mc(const GardnerOptions& o, const Globals& g, std::ostream& out,
                   std::ostream& err) {
  Json params = global_parameters(g);
  params["gardner"]["mc"] = Json{{"N", o.n},
                                 {"M", o.ms},
                                 {"epsilon", o.epsilons},
                                 {"samples", o.samples},
                                 {"format", o.format}};
  RunManifest manifest("gardner mc", params, g.seed);
  GardnerConfig base;
  base.n = o.n;
  base.samples = o.samples;
  base.master_seed = g.seed;
  base.threads = g.threads;
  std::vector<std::pair<std::size_t, double>> points;
  for (const std::size_t m : o.ms) {
    for (const double eps : o.epsilons) {
      points.emplace_back(m, eps);
    }
  }
  const auto rows = estimate_sweep(base, points);
  const std::string text = o.format == "json" ? dump(volume_json(rows)) : volume_csv(rows);
  write_or_print(manifest, g.out, text, out);
  emit_manifest(manifest, sidecar(g.out), g, err);
  return kSuccess;
}

int cmd_gardner_analytic(const GardnerOptions& o, const Globals& g, std::ostream& out,
                         std::ostream& err) {
  Json params = global_parameters(g);
  params["gardner"]["analytic"] = Json{
      {"d", o.ds}, {"N", o.ns}, {"M", o.ms}, {"epsilon", o.epsilons}, {"mixed", o.mixed}};
  RunManifest manifest("gardner analytic", params, g.seed);
  if (o.ds.empty() == o.ns.empty()) {
    throw InvariantError("gardner analytic: give exactly one of --d or --N");
  }
  if (o.mixed && o.ns.empty()) {
    throw InvariantError("gardner analytic: --mixed needs --N (K = M N^2)");
  }
  struct Space {
    double d;
    double n;  // 0 when only d is known
  };
  std::vector<Space> spaces;
  for (const double d : o.ds) {
    spaces.push_back({d, 0.0});
  }
  for (const std::size_t n : o.ns) {
    spaces.push_back({static_cast<double>(manifold_dims(n).d), static_cast<double>(n)});
  }

  std::ostringstream csv;
  csv << "d,M,K,epsilon,v_cptp,v_aqnn,analytic_eq5,eq5_valid,log_vr_stirling,analytic_eq7,"
         "optimal_epsilon\n";
  for (const auto& s : spaces) {
    for (const std::size_t m_count : o.ms) {
      const double m = static_cast<double>(m_count);
      const double k = o.mixed ? m * s.n * s.n : m;
      for (const double eps : o.epsilons) {
        const RelativeVolume vr = analytic_relative_volume(eps, k, s.d);
        csv << format_double(s.d) << ',' << m_count << ',' << format_double(k) << ','
            << format_double(eps) << ',' << format_double(analytic_v_cptp(s.d).value) << ','
            << format_double(analytic_v_aqnn(eps, k, s.d).value) << ','
            << format_double(vr.value) << ',' << (vr.valid ? "true" : "false") << ','
            << format_double(analytic_log_vr_stirling(eps, k, s.d)) << ','
            << format_double(vr_optimal(k, s.d)) << ',' << format_double(optimal_epsilon(s.d))
            << '\n';
      }
    }
  }
  write_or_print(manifest, g.out, csv.str(), out);
  emit_manifest(manifest, sidecar(g.out), g, err);
  return kSuccess;
}

int cmd_gardner_capacity(const GardnerOptions& o, const Globals& g, std::ostream& out,
                         std::ostream& err) {
  Json params = global_parameters(g);
  params["gardner"]["capacity"] =
      Json{{"n-min", o.n_min}, {"n-max", o.n_max}, {"format", o.format}};
  RunManifest manifest("gardner capacity", params, g.seed);
  const auto rows = capacity_table(o.n_min, o.n_max);
  std::string text;
  if (o.format == "json") {
    Json j = Json::array();
    for (const auto& r : rows) {
      j.push_back(Json{{"qubits", r.qubits},
                       {"N", r.n},
                       {"d", r.d},
                       {"M_max", r.m_max},
                       {"M_feasible", r.m_feasible},
                       {"vr_optimal", r.vr}});
    }
    text = dump(j);
  } else {
    std::ostringstream csv;
    csv << "qubits,N,d,M_max,M_feasible,vr_optimal\n";
    for (const auto& r : rows) {
      csv << r.qubits << ',' << r.n << ',' << r.d << ',' << r.m_max << ','
          << format_double(r.m_feasible) << ',' << format_double(r.vr) << '\n';
    }
    text = csv.str();
  }
  write_or_print(manifest, g.out, text, out);
  emit_manifest(manifest, sidecar(g.out), g, err);
  return kSuccess;
}

double default_tolerance() {
  const char* env = std::getenv("AQNN_DEFAULT_TOL");
  if (env == nullptr || *env == '\0') {
    return kDefaultTol;
  }
  char* end = nullptr;
  const double tol = std::strtod(env, &end);
  if (end == env || *end != '\0' || !(tol > 0.0)) {
    throw InvariantError(std::string("AQNN_DEFAULT_TOL is not a positive number: ") + env);
  }
  return tol;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Attractor quantum neural network toolkit", "aqnn"};
  app.config_formatter(std::make_shared<ConfigJson>());
  app.set_config("--config", "", "JSON file supplying any option; flags override it");
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  ConstructOptions construct;
  ChannelOptions channel;
  GardnerOptions gardner;

  try {
    g.tol = default_tolerance();
  } catch (const InvariantError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidParameters;
  }

  app.add_option("--seed", g.seed, "Master seed for all random draws")->capture_default_str();
  auto* tol_opt = app.add_option("--tol", g.tol, "Numerical tolerance")->capture_default_str();
  app.add_option("--threads", g.threads, "Worker threads (gardner mc)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--out", g.out, "Output directory (construct) or file");
  app.add_option("--manifest", g.manifest, "Where to write the run manifest");

  auto* c = app.add_subcommand("construct", "Build a channel and write Choi, report and manifest");
  c->add_option("--kind", construct.kind, "canonical|general|mixed|perceptron|theorem3")
      ->required()
      ->check(CLI::IsMember({"canonical", "general", "mixed", "perceptron", "theorem3"}));
  c->add_option("--N", construct.n, "Dimension (input dimension for perceptron)")
      ->check(CLI::PositiveNumber);
  c->add_option("--rank", construct.rank, "Rank of a randomly drawn correlation matrix");
  c->add_option("--m0", construct.m0, "Perceptron inputs mapped to label 0");
  c->add_option("--B", construct.b_path, "Correlation matrix file");
  c->add_option("--T", construct.t_path, "Basis transform file (general)");
  c->add_option("--states", construct.states_path, "Ensemble file: JSON array of matrices");
  c->add_option("--spec", construct.spec_path, "Perceptron spec file");
  c->add_option("--X", construct.x_path, "Perceptron coupling matrix file");
  c->add_option("--TA", construct.ta_path, "Perceptron input transform file");
  c->add_option("--TB", construct.tb_path, "Perceptron output transform file");
  c->add_flag("--raw-basis", construct.raw_basis, "theorem3: keep the non-orthonormal basis");

  auto* v = app.add_subcommand("verify", "Check complete positivity and trace preservation");
  v->add_option("--choi", channel.choi_path, "Choi file")->required();

  auto* it = app.add_subcommand("iterate", "Apply a channel repeatedly to a state");
  it->add_option("--choi", channel.choi_path, "Choi file")->required();
  it->add_option("--rho", channel.rho_path, "Initial state file")->required();
  it->add_option("--steps", channel.steps, "Maximum number of applications")->capture_default_str();
  it->add_option("--conv-tol", channel.conv_tol, "Successive-iterate trace distance threshold")
      ->capture_default_str();

  auto* fp = app.add_subcommand("fixed-points", "Eigenvalue-1 space of the transfer matrix");
  fp->add_option("--choi", channel.choi_path, "Choi file")->required();

  auto* gd = app.add_subcommand("gardner", "Relative volume of maps storing M patterns");
  gd->require_subcommand(1);
  auto* mc = gd->add_subcommand("mc", "Monte Carlo estimate over HS-random channels");
  mc->add_option("--N", gardner.n, "Dimension")->check(CLI::PositiveNumber)->capture_default_str();
  mc->add_option("--M", gardner.ms, "Pattern counts")->capture_default_str();
  mc->add_option("--epsilon", gardner.epsilons, "Basin widths")->capture_default_str();
  mc->add_option("--samples", gardner.samples, "Samples")->capture_default_str();
  mc->add_option("--format", gardner.format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
  auto* an = gd->add_subcommand("analytic", "Closed-form volume formulas");
  an->add_option("--d", gardner.ds, "Manifold dimensions");
  an->add_option("--N", gardner.ns, "Hilbert space dimensions (d = N^4 - N^2)");
  an->add_option("--M", gardner.ms, "Pattern counts")->capture_default_str();
  an->add_option("--epsilon", gardner.epsilons, "Basin widths")->capture_default_str();
  an->add_flag("--mixed", gardner.mixed, "Use K = M N^2 constraints (mixed patterns)");
  auto* cap = gd->add_subcommand("capacity", "Capacity table for n qubits");
  cap->add_option("--n-min", gardner.n_min, "Smallest qubit count")->capture_default_str();
  cap->add_option("--n-max", gardner.n_max, "Largest qubit count")->capture_default_str();
  cap->add_option("--format", gardner.format, "csv|json")->check(CLI::IsMember({"csv", "json"}));

  std::vector<std::string> argv_storage{"aqnn"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) {
    argv.push_back(a.c_str());
  }

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    g.tol_explicit = tol_opt->count() > 0;
    if (!(g.tol > 0.0)) {
      throw InvariantError("--tol must be positive");
    }
    if (c->parsed()) {
      return cmd_construct(construct, g, out, err);
    }
    if (v->parsed()) {
      return cmd_verify(channel, g, out, err);
    }
    if (it->parsed()) {
      return cmd_iterate(channel, g, out, err);
    }
    if (fp->parsed()) {
      return cmd_fixed_points(channel, g, out, err);
    }
    if (mc->parsed()) {
      return cmd_gardner_mc(gardner, g, out, err);
    }
    if (an->parsed()) {
      return cmd_gardner_analytic(gardner, g, out, err);
    }
    if (cap->parsed()) {
      return cmd_gardner_capacity(gardner, g, out, err);
    }
    return kInvalidParameters;
  } catch (const CLI::FileError& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInvalidParameters;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidParameters;
  }
}

}  // namespace aqnn::cli
