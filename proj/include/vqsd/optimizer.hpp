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

#include <functional>
#include <vector>

namespace vqsd {

struct AdamHyperparams {
  double learning_rate = 0.01;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

/// Adam moment estimates; owned by a single training loop.
struct AdamState {
  AdamHyperparams hp;
  std::size_t step = 0;
  std::vector<double> m;
  std::vector<double> v;

  explicit AdamState(std::size_t dim, AdamHyperparams hp = {});
};

using ObjectiveFn = std::function<double(const std::vector<double>&)>;

inline constexpr double kDefaultFdStep = 1e-4;

// Central differences: g_i = (f(x + h e_i) - f(x - h e_i)) / 2h.
// Throws std::runtime_error on non-finite evaluations.
std::vector<double> finite_diff_gradient(const ObjectiveFn& f,
                                         const std::vector<double>& theta,
                                         double h = kDefaultFdStep);

// In-place Adam update with bias correction; increments state.step.
void adam_step(AdamState& state, std::vector<double>& theta,
               const std::vector<double>& grad);

}  // namespace vqsd
