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

#include <cstdint>
#include <optional>
#include <vector>

#include "vqsd/objectives.hpp"
#include "vqsd/optimizer.hpp"

namespace vqsd {

struct TrainConfig {
  AnsatzDescriptor ansatz;
  ObjectiveKind objective = ObjectiveKind::GlobalD;
  std::size_t epochs = 2000;
  AdamHyperparams adam;
  double fd_step = kDefaultFdStep;
  std::size_t shots = 0;  // 0 = exact probabilities
  std::uint64_t seed = 0;
  double conv_tol = 1e-8;        // objective spread over the window
  std::size_t conv_window = 50;  // epochs
  std::size_t log_every = 1;
  double init_range = 0.1;  // initial angles uniform in [-r, r]
};

struct TrainRow {
  std::size_t epoch = 0;
  double objective = 0.0;  // native direction (D maximized, L/pi minimized)
  double d_over_p = 0.0;
  double offdiag_average = 0.0;
  double wall_seconds = 0.0;
};

struct TrainRecord {
  std::vector<TrainRow> rows;
  bool converged = false;
};

struct TrainResult {
  TrainRecord record;
  AnsatzParams best_params;
  double best_objective = 0.0;  // native direction
  DensityMatrix evolved;        // under best_params
};

// Runs Adam with finite-difference gradients until `epochs` or the
// objective spread over conv_window epochs drops below conv_tol.
// Deterministic per (config, seed).
TrainResult train(const DensityMatrix& rho, const TrainConfig& config);

// Same, but starting from the given parameter vector instead of the
// seeded random initialization.
TrainResult train_from(const DensityMatrix& rho, const TrainConfig& config,
                       std::vector<double> theta0);

struct DepthStage {
  std::size_t blocks = 0;
  double objective = 0.0;
  double d_over_p = 0.0;
  double offdiag_average = 0.0;
  AnsatzParams params;
  TrainRecord record;
};

struct DepthSweepResult {
  std::vector<DepthStage> stages;
  bool converged = false;  // |L_m - L_prev| < tau_depth reached within m_max
};

struct DepthSweepOptions {
  std::size_t m_start = 5;
  std::size_t m_step = 5;
  std::size_t m_max = 70;
  double tau_depth = 1e-4;
  bool fresh_start = false;      // retrain from scratch at each depth
  double grow_init_range = 1e-3; // init range for appended blocks
};

// Brick-wall depth growth: trains, appends blocks, retrains until the
// converged objective stops improving.
DepthSweepResult grow_depth(const DensityMatrix& rho, const TrainConfig& config,
                            const DepthSweepOptions& opts);

struct VerifyReport {
  std::vector<double> evolved_diagonal_sorted;  // ascending
  std::vector<double> exact_eigenvalues;        // ascending, from eigh
  double eigenvalue_gap = 0.0;                  // max-abs sorted difference
  double offdiag_average = 0.0;
  double purity_gap = 0.0;  // P - D >= 0
  double eigenvalue_tol = 1e-3;
  double offdiag_tol = 1e-3;
  bool pass = false;
};

VerifyReport verify_diagonalization(const DensityMatrix& rho,
                                    const AnsatzParams& params,
                                    double eigenvalue_tol = 1e-3,
                                    double offdiag_tol = 1e-3);

// Universal-ansatz parameters whose circuit reproduces the given unitary
// up to global phase (Pauli-basis expansion of the matrix logarithm).
AnsatzParams universal_params_for_unitary(const ComplexMatrix& u);

// Parameters that exactly diagonalize rho, from the eigh oracle.
AnsatzParams exact_diagonalizer_params(const DensityMatrix& rho);

}  // namespace vqsd
