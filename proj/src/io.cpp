// Copyright 2026-present the vqsd project
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "vqsd/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace vqsd::io {

using nlohmann::json;

namespace {

json matrix_to_json_obj(const ComplexMatrix& m) {
  json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  std::vector<double> re, im;
  re.reserve(m.rows() * m.cols());
  im.reserve(m.rows() * m.cols());
  for (const auto& v : m.entries()) {
    re.push_back(v.real());
    im.push_back(v.imag());
  }
  j["re"] = std::move(re);
  j["im"] = std::move(im);
  return j;
}

ComplexMatrix matrix_from_json_obj(const json& j) {
  const std::size_t rows = j.at("rows").get<std::size_t>();
  const std::size_t cols = j.at("cols").get<std::size_t>();
  const auto re = j.at("re").get<std::vector<double>>();
  const auto im = j.at("im").get<std::vector<double>>();
  if (re.size() != rows * cols || im.size() != rows * cols)
    throw std::invalid_argument("matrix: re/im length does not match shape");
  std::vector<cd> entries(rows * cols);
  for (std::size_t i = 0; i < entries.size(); ++i)
    entries[i] = cd{re[i], im[i]};
  return ComplexMatrix(rows, cols, std::move(entries));
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  try {
    json j;
    in >> j;
    return j;
  } catch (const json::exception& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << text;
}

void reject_unknown_keys(const json& j, const char* context,
                         std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : j.items()) {
    (void)value;
    bool ok = false;
    for (const char* a : allowed)
      if (key == a) {
        ok = true;
        break;
      }
    if (!ok)
      throw std::invalid_argument(std::string("unknown config key '") + key +
                                  "' in " + context);
  }
}

std::string ansatz_kind_name(AnsatzKind k) {
  return k == AnsatzKind::UniversalPauli ? "universal-pauli" : "brick-wall";
}

AnsatzKind ansatz_kind_from_name(const std::string& name) {
  if (name == "universal-pauli") return AnsatzKind::UniversalPauli;
  if (name == "brick-wall") return AnsatzKind::BrickWall;
  throw std::invalid_argument("unknown ansatz kind: " + name);
}

std::string bit_label(std::size_t b, std::size_t n) {
  std::string s(n, '0');
  for (std::size_t q = 0; q < n; ++q)
    if ((b >> (n - 1 - q)) & 1u) s[q] = '1';
  return s;
}

}  // namespace

std::string matrix_to_json(const ComplexMatrix& m) {
  return matrix_to_json_obj(m).dump(2) + "\n";
}

ComplexMatrix matrix_from_json(const std::string& text) {
  try {
    return matrix_from_json_obj(json::parse(text));
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("matrix: ") + e.what());
  }
}

void write_density_matrix(const std::string& path, const DensityMatrix& rho,
                          std::uint64_t seed) {
  json j = matrix_to_json_obj(rho.matrix());
  j["n_qubits"] = rho.n_qubits();
  j["seed"] = seed;
  write_text_file(path, j.dump(2) + "\n");
}

DensityMatrix read_density_matrix(const std::string& path) {
  const json j = load_json_file(path);
  try {
    return DensityMatrix::from_matrix(j.at("n_qubits").get<std::size_t>(),
                                      matrix_from_json_obj(j));
  } catch (const json::exception& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

void write_ansatz_params(const std::string& path, const AnsatzParams& params) {
  json j;
  j["kind"] = ansatz_kind_name(params.descriptor.kind);
  j["n_qubits"] = params.descriptor.n_qubits;
  if (params.descriptor.kind == AnsatzKind::BrickWall)
    j["blocks"] = params.descriptor.blocks;
  j["theta"] = params.theta;
  write_text_file(path, j.dump(2) + "\n");
}

AnsatzParams read_ansatz_params(const std::string& path) {
  const json j = load_json_file(path);
  AnsatzParams params;
  params.descriptor.kind = ansatz_kind_from_name(j.at("kind").get<std::string>());
  params.descriptor.n_qubits = j.at("n_qubits").get<std::size_t>();
  if (params.descriptor.kind == AnsatzKind::BrickWall)
    params.descriptor.blocks = j.at("blocks").get<std::size_t>();
  params.theta = j.at("theta").get<std::vector<double>>();
  params.validate();
  return params;
}

void write_distribution(const std::string& path,
                        const BasisDistribution& dist) {
  std::ostringstream out;
  out << "basis\tprobability\n";
  out.precision(17);
  for (std::size_t b = 0; b < dist.probs.size(); ++b)
    out << bit_label(b, dist.n_qubits) << '\t' << dist.probs[b] << '\n';
  write_text_file(path, out.str());
}

void write_train_record(const std::string& path, const TrainRecord& record) {
  std::ostringstream out;
  out << "epoch\tobjective\td_over_p\toffdiag_average\twall_seconds\n";
  out.precision(17);
  for (const auto& row : record.rows)
    out << row.epoch << '\t' << row.objective << '\t' << row.d_over_p << '\t'
        << row.offdiag_average << '\t' << row.wall_seconds << '\n';
  write_text_file(path, out.str());
}

void write_depth_sweep(const std::string& path, const DepthSweepResult& sweep) {
  std::ostringstream out;
  out << "m\tobjective\td_over_p\toffdiag_average\n";
  out.precision(17);
  for (const auto& stage : sweep.stages)
    out << stage.blocks << '\t' << stage.objective << '\t' << stage.d_over_p
        << '\t' << stage.offdiag_average << '\n';
  write_text_file(path, out.str());
}

void write_verify_report_json(const std::string& path,
                              const VerifyReport& report) {
  json j;
  j["evolved_diagonal_sorted"] = report.evolved_diagonal_sorted;
  j["exact_eigenvalues"] = report.exact_eigenvalues;
  j["eigenvalue_gap"] = report.eigenvalue_gap;
  j["offdiag_average"] = report.offdiag_average;
  j["purity_gap"] = report.purity_gap;
  j["eigenvalue_tol"] = report.eigenvalue_tol;
  j["offdiag_tol"] = report.offdiag_tol;
  j["pass"] = report.pass;
  write_text_file(path, j.dump(2) + "\n");
}

std::string verify_report_text(const VerifyReport& report) {
  std::ostringstream out;
  out.precision(12);
  out << "diagonalization report\n";
  out << "  eigenvalue gap (sorted diag vs eigh): " << report.eigenvalue_gap
      << "  (tol " << report.eigenvalue_tol << ")\n";
  out << "  off-diagonal average:                 " << report.offdiag_average
      << "  (tol " << report.offdiag_tol << ")\n";
  out << "  purity - objective gap:               " << report.purity_gap << "\n";
  out << "  eigenvalues (ascending):\n";
  for (std::size_t i = 0; i < report.exact_eigenvalues.size(); ++i)
    out << "    " << report.exact_eigenvalues[i] << "  vs diag "
        << report.evolved_diagonal_sorted[i] << "\n";
  out << "  result: " << (report.pass ? "PASS" : "FAIL") << "\n";
  return out.str();
}

RunConfig parse_run_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("config parse error: ") + e.what());
  }

  try {
  reject_unknown_keys(j, "config root",
                      {"experiment", "n_qubits", "state", "ansatz", "objective",
                       "epochs", "learning_rate", "beta1", "beta2", "epsilon",
                       "fd_step", "shots", "seed", "conv_tol", "conv_window",
                       "log_every", "init_range", "depth", "out_dir"});

  RunConfig config;
  if (j.contains("experiment")) config.experiment = j["experiment"].get<std::string>();
  if (config.experiment.empty())
    throw std::invalid_argument("config: experiment name must be nonempty");
  config.n_qubits = j.at("n_qubits").get<std::size_t>();

  if (j.contains("state")) {
    const json& s = j["state"];
    reject_unknown_keys(s, "state", {"source", "path", "rank", "seed"});
    const std::string source =
        s.contains("source") ? s["source"].get<std::string>() : "generate";
    if (source == "file") {
      config.state_from_file = true;
      config.state_path = s.at("path").get<std::string>();
    } else if (source == "generate") {
      config.state_from_file = false;
      if (s.contains("rank")) config.state_rank = s["rank"].get<std::size_t>();
      if (s.contains("seed")) config.state_seed = s["seed"].get<std::uint64_t>();
    } else {
      throw std::invalid_argument("config: state.source must be 'file' or 'generate'");
    }
  }

  config.train.ansatz.n_qubits = config.n_qubits;
  if (j.contains("ansatz")) {
    const json& a = j["ansatz"];
    reject_unknown_keys(a, "ansatz", {"kind", "blocks"});
    config.train.ansatz.kind = ansatz_kind_from_name(a.at("kind").get<std::string>());
    if (a.contains("blocks"))
      config.train.ansatz.blocks = a["blocks"].get<std::size_t>();
  }

  if (j.contains("objective"))
    config.train.objective = objective_from_name(j["objective"].get<std::string>());
  if (j.contains("epochs")) config.train.epochs = j["epochs"].get<std::size_t>();
  if (j.contains("learning_rate"))
    config.train.adam.learning_rate = j["learning_rate"].get<double>();
  if (j.contains("beta1")) config.train.adam.beta1 = j["beta1"].get<double>();
  if (j.contains("beta2")) config.train.adam.beta2 = j["beta2"].get<double>();
  if (j.contains("epsilon")) config.train.adam.epsilon = j["epsilon"].get<double>();
  if (j.contains("fd_step")) config.train.fd_step = j["fd_step"].get<double>();
  if (j.contains("shots")) config.train.shots = j["shots"].get<std::size_t>();
  if (j.contains("seed")) config.train.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("conv_tol")) config.train.conv_tol = j["conv_tol"].get<double>();
  if (j.contains("conv_window"))
    config.train.conv_window = j["conv_window"].get<std::size_t>();
  if (j.contains("log_every"))
    config.train.log_every = std::max<std::size_t>(1, j["log_every"].get<std::size_t>());
  if (j.contains("init_range"))
    config.train.init_range = j["init_range"].get<double>();

  if (j.contains("depth")) {
    const json& d = j["depth"];
    reject_unknown_keys(
        d, "depth", {"m_start", "m_step", "m_max", "tau_depth", "fresh_start"});
    if (d.contains("m_start")) config.depth.m_start = d["m_start"].get<std::size_t>();
    if (d.contains("m_step")) config.depth.m_step = d["m_step"].get<std::size_t>();
    if (d.contains("m_max")) config.depth.m_max = d["m_max"].get<std::size_t>();
    if (d.contains("tau_depth")) config.depth.tau_depth = d["tau_depth"].get<double>();
    if (d.contains("fresh_start"))
      config.depth.fresh_start = d["fresh_start"].get<bool>();
  }

  if (j.contains("out_dir")) config.out_dir = j["out_dir"].get<std::string>();
  return config;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("config: ") + e.what());
  }
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_run_config(ss.str());
}

std::string run_config_to_json(const RunConfig& config) {
  json j;
  j["experiment"] = config.experiment;
  j["n_qubits"] = config.n_qubits;
  if (config.state_from_file) {
    j["state"] = {{"source", "file"}, {"path", config.state_path}};
  } else {
    j["state"] = {{"source", "generate"},
                  {"rank", config.state_rank},
                  {"seed", config.state_seed}};
  }
  j["ansatz"]["kind"] = ansatz_kind_name(config.train.ansatz.kind);
  if (config.train.ansatz.kind == AnsatzKind::BrickWall)
    j["ansatz"]["blocks"] = config.train.ansatz.blocks;
  j["objective"] = objective_name(config.train.objective);
  j["epochs"] = config.train.epochs;
  j["learning_rate"] = config.train.adam.learning_rate;
  j["beta1"] = config.train.adam.beta1;
  j["beta2"] = config.train.adam.beta2;
  j["epsilon"] = config.train.adam.epsilon;
  j["fd_step"] = config.train.fd_step;
  j["shots"] = config.train.shots;
  j["seed"] = config.train.seed;
  j["conv_tol"] = config.train.conv_tol;
  j["conv_window"] = config.train.conv_window;
  j["log_every"] = config.train.log_every;
  j["init_range"] = config.train.init_range;
  j["depth"] = {{"m_start", config.depth.m_start},
                {"m_step", config.depth.m_step},
                {"m_max", config.depth.m_max},
                {"tau_depth", config.depth.tau_depth},
                {"fresh_start", config.depth.fresh_start}};
  j["out_dir"] = config.out_dir;
  return j.dump(2) + "\n";
}

RunConfig preset_config(const std::string& name) {
  RunConfig config;
  config.experiment = name;
  if (name == "fig2") {
    config.n_qubits = 2;
    config.state_seed = 11;
    config.train.ansatz.kind = AnsatzKind::UniversalPauli;
    config.train.objective = ObjectiveKind::GlobalD;
    config.train.adam.learning_rate = 0.02;
    config.train.epochs = 4000;
    config.train.seed = 1;
    config.train.log_every = 10;
  } else if (name == "fig3") {
    config.n_qubits = 1;
    config.state_seed = 5;
    config.train.ansatz.kind = AnsatzKind::BrickWall;
    config.train.ansatz.blocks = 1;
    config.train.objective = ObjectiveKind::SingleQubitPi;
    config.train.adam.learning_rate = 0.02;
    config.train.epochs = 3000;
    config.train.seed = 1;
    config.train.log_every = 5;
  } else if (name == "fig4") {
    config.n_qubits = 2;
    config.state_seed = 11;
    config.train.ansatz.kind = AnsatzKind::BrickWall;
    config.train.ansatz.blocks = 8;
    config.train.objective = ObjectiveKind::LocalL;
    config.train.adam.learning_rate = 0.02;
    config.train.epochs = 6000;
    config.train.seed = 1;
    config.train.log_every = 10;
  } else if (name == "app-depth-sweep") {
    config.n_qubits = 5;
    config.state_seed = 19;
    config.train.ansatz.kind = AnsatzKind::BrickWall;
    config.train.ansatz.blocks = 5;
    config.train.objective = ObjectiveKind::LocalL;
    config.train.adam.learning_rate = 0.02;
    config.train.epochs = 1500;
    config.train.seed = 1;
    config.train.log_every = 25;
    config.depth = DepthSweepOptions{};
  } else {
    throw std::invalid_argument("unknown preset: " + name);
  }
  return config;
}

DensityMatrix resolve_state(const RunConfig& config) {
  if (config.state_from_file) return read_density_matrix(config.state_path);
  const std::size_t dim = std::size_t{1} << config.n_qubits;
  const std::size_t rank = config.state_rank == 0 ? dim : config.state_rank;
  return random_density_matrix(config.n_qubits, rank, config.state_seed);
}

std::string file_stem(const RunConfig& config) {
  std::ostringstream out;
  out << config.experiment << "_n" << config.n_qubits << '_'
      << objective_name(config.train.objective) << '_'
      << ansatz_kind_name(config.train.ansatz.kind);
  if (config.train.ansatz.kind == AnsatzKind::BrickWall)
    out << "_m" << config.train.ansatz.blocks;
  out << "_s" << config.train.seed;
  return out.str();
}

}  // namespace vqsd::io
