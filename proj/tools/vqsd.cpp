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

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "vqsd/io.hpp"
#include "vqsd/kernels.hpp"

namespace fs = std::filesystem;
using namespace vqsd;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitUnconverged = 2;

struct CommonOpts {
  std::string config_path;
  std::string preset;
  std::string out_dir;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> shots;
};

io::RunConfig resolve_config(const CommonOpts& opts) {
  if (opts.config_path.empty() && opts.preset.empty())
    throw std::invalid_argument("either --config or --preset is required");
  io::RunConfig config = opts.config_path.empty()
                             ? io::preset_config(opts.preset)
                             : io::load_run_config(opts.config_path);
  if (!opts.out_dir.empty()) config.out_dir = opts.out_dir;
  if (opts.seed) config.train.seed = *opts.seed;
  if (opts.shots) config.train.shots = *opts.shots;
  fs::create_directories(config.out_dir);
  return config;
}

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--config", opts.config_path, "run config file (JSON)");
  cmd->add_option("--preset", opts.preset,
                  "built-in setup: fig2, fig3, fig4, app-depth-sweep");
  cmd->add_option("--out", opts.out_dir, "output directory");
  cmd->add_option("--seed", opts.seed, "override the training seed");
  cmd->add_option("--shots", opts.shots,
                  "measurement shots per evaluation (0 = exact)");
}

int cmd_gen_state(std::size_t n, std::size_t rank, std::uint64_t seed,
                  const std::string& out_path) {
  if (rank == 0) rank = std::size_t{1} << n;
  const DensityMatrix rho = random_density_matrix(n, rank, seed);
  io::write_density_matrix(out_path, rho, seed);
  std::printf("wrote %s\n", out_path.c_str());
  std::printf("purity            %.12f\n", purity(rho));
  std::printf("offdiag_average   %.12e\n", off_diagonal_average(rho));
  return kExitOk;
}

int cmd_train(const CommonOpts& opts) {
  const io::RunConfig config = resolve_config(opts);
  const DensityMatrix rho = io::resolve_state(config);
  const std::string stem =
      (fs::path(config.out_dir) / io::file_stem(config)).string();

  std::printf("training %s: N=%zu, objective=%s, %zu parameters\n",
              config.experiment.c_str(), config.n_qubits,
              objective_name(config.train.objective).c_str(),
              config.train.ansatz.param_count());

  const TrainResult result = train(rho, config.train);
  io::write_train_record(stem + "_record.tsv", result.record);
  io::write_ansatz_params(stem + "_params.json", result.best_params);
  io::write_density_matrix(stem + "_evolved.json", result.evolved,
                           config.train.seed);
  io::write_distribution(stem + "_probs.tsv",
                         basis_probabilities(result.evolved));

  const VerifyReport report = verify_diagonalization(rho, result.best_params);
  io::write_verify_report_json(stem + "_verify.json", report);
  std::fputs(io::verify_report_text(report).c_str(), stdout);

  const auto& last = result.record.rows.back();
  std::printf("epochs=%zu objective=%.9f d_over_p=%.9f offdiag=%.3e\n",
              last.epoch, last.objective, last.d_over_p, last.offdiag_average);
  return report.pass ? kExitOk : kExitUnconverged;
}

int cmd_depth_sweep(const CommonOpts& opts) {
  io::RunConfig config = resolve_config(opts);
  if (config.train.ansatz.kind != AnsatzKind::BrickWall)
    throw std::invalid_argument("depth-sweep requires a brick-wall ansatz");
  const DensityMatrix rho = io::resolve_state(config);
  const std::string stem =
      (fs::path(config.out_dir) / io::file_stem(config)).string();

  const DepthSweepResult sweep = grow_depth(rho, config.train, config.depth);
  io::write_depth_sweep(stem + "_sweep.tsv", sweep);
  for (const auto& stage : sweep.stages)
    io::write_train_record(
        stem + "_m" + std::to_string(stage.blocks) + "_record.tsv",
        stage.record);

  const auto& final_stage = sweep.stages.back();
  io::write_ansatz_params(stem + "_params.json", final_stage.params);
  const VerifyReport report = verify_diagonalization(rho, final_stage.params);
  io::write_verify_report_json(stem + "_verify.json", report);
  std::fputs(io::verify_report_text(report).c_str(), stdout);

  for (const auto& stage : sweep.stages)
    std::printf("m=%-3zu objective=%.9f d_over_p=%.9f offdiag=%.3e\n",
                stage.blocks, stage.objective, stage.d_over_p,
                stage.offdiag_average);
  if (!sweep.converged)
    std::printf("sweep did not converge within m_max=%zu\n",
                config.depth.m_max);
  return (sweep.converged && report.pass) ? kExitOk : kExitUnconverged;
}

int cmd_verify(const std::string& state_path, const std::string& params_path,
               const std::string& out_dir, double eig_tol, double off_tol) {
  const DensityMatrix rho = io::read_density_matrix(state_path);
  const AnsatzParams params = io::read_ansatz_params(params_path);
  const VerifyReport report =
      verify_diagonalization(rho, params, eig_tol, off_tol);
  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    io::write_verify_report_json(
        (fs::path(out_dir) / "verify_report.json").string(), report);
  }
  std::fputs(io::verify_report_text(report).c_str(), stdout);
  return report.pass ? kExitOk : kExitUnconverged;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"variational quantum state diagonalization toolkit"};
  app.require_subcommand(1);

  // gen-state
  std::size_t gen_n = 2, gen_rank = 0;
  std::uint64_t gen_seed = 0;
  std::string gen_out = "state.json";
  auto* gen = app.add_subcommand("gen-state", "generate a random density matrix");
  gen->add_option("-n,--qubits", gen_n, "qubit count")->required();
  gen->add_option("--rank", gen_rank, "state rank (default: full)");
  gen->add_option("--seed", gen_seed, "generator seed");
  gen->add_option("--out", gen_out, "output file");

  CommonOpts train_opts;
  auto* train_cmd = app.add_subcommand("train", "run a training experiment");
  add_common(train_cmd, train_opts);

  CommonOpts sweep_opts;
  auto* sweep_cmd =
      app.add_subcommand("depth-sweep", "dynamic brick-wall depth growth");
  add_common(sweep_cmd, sweep_opts);

  std::string verify_state, verify_params, verify_out;
  double verify_eig_tol = 1e-3, verify_off_tol = 1e-3;
  auto* verify_cmd =
      app.add_subcommand("verify", "check a state/parameter pair");
  verify_cmd->add_option("state", verify_state, "density matrix file")->required();
  verify_cmd->add_option("params", verify_params, "ansatz parameter file")->required();
  verify_cmd->add_option("--out", verify_out, "output directory for the report");
  verify_cmd->add_option("--eig-tol", verify_eig_tol, "eigenvalue gap tolerance");
  verify_cmd->add_option("--off-tol", verify_off_tol, "off-diagonal tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (gen->parsed()) return cmd_gen_state(gen_n, gen_rank, gen_seed, gen_out);
    if (train_cmd->parsed()) return cmd_train(train_opts);
    if (sweep_cmd->parsed()) return cmd_depth_sweep(sweep_opts);
    if (verify_cmd->parsed())
      return cmd_verify(verify_state, verify_params, verify_out, verify_eig_tol,
                        verify_off_tol);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
