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

#pragma once

#include <string>

#include "vqsd/trainer.hpp"

namespace vqsd::io {

// Matrices are stored as JSON objects with fields rows, cols, re, im
// (row-major real and imaginary parts). Density matrices add n_qubits.
std::string matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const std::string& text);

void write_density_matrix(const std::string& path, const DensityMatrix& rho,
                          std::uint64_t seed);
DensityMatrix read_density_matrix(const std::string& path);

void write_ansatz_params(const std::string& path, const AnsatzParams& params);
AnsatzParams read_ansatz_params(const std::string& path);

// Two-column table: basis label as a bit string, probability.
void write_distribution(const std::string& path, const BasisDistribution& dist);

// Tab-separated with a header row.
void write_train_record(const std::string& path, const TrainRecord& record);
void write_depth_sweep(const std::string& path, const DepthSweepResult& sweep);

void write_verify_report_json(const std::string& path,
                              const VerifyReport& report);
std::string verify_report_text(const VerifyReport& report);

/// Everything a run needs: the state source, training setup, and output
/// location. Parsed strictly; unknown config keys are errors.
struct RunConfig {
  std::string experiment = "run";
  std::size_t n_qubits = 2;

  bool state_from_file = false;
  std::string state_path;
  std::size_t state_rank = 0;  // 0 = full rank
  std::uint64_t state_seed = 0;

  TrainConfig train;
  DepthSweepOptions depth;

  std::string out_dir = ".";
};

RunConfig parse_run_config(const std::string& json_text);
RunConfig load_run_config(const std::string& path);
std::string run_config_to_json(const RunConfig& config);

// Built-in experiment setups: fig2, fig3, fig4, app-depth-sweep.
RunConfig preset_config(const std::string& name);

// Resolves the configured state source (file or seeded generator).
DensityMatrix resolve_state(const RunConfig& config);

// <experiment>_n<N>_<objective>_<ansatz>[_m<blocks>]_s<seed>
std::string file_stem(const RunConfig& config);

}  // namespace vqsd::io
