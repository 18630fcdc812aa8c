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

#include "vqsd/optimizer.hpp"

#include <cmath>
#include <stdexcept>

namespace vqsd {

AdamState::AdamState(std::size_t dim, AdamHyperparams hyper)
    : hp(hyper), m(dim, 0.0), v(dim, 0.0) {}

std::vector<double> finite_diff_gradient(const ObjectiveFn& f,
                                         const std::vector<double>& theta,
                                         double h) {
  if (!(h > 0.0)) throw std::invalid_argument("finite_diff_gradient: h must be > 0");
  std::vector<double> grad(theta.size());
  std::vector<double> probe = theta;
  for (std::size_t i = 0; i < theta.size(); ++i) {
    probe[i] = theta[i] + h;
    const double fp = f(probe);
    probe[i] = theta[i] - h;
    const double fm = f(probe);
    probe[i] = theta[i];
    if (!std::isfinite(fp) || !std::isfinite(fm))
      throw std::runtime_error("finite_diff_gradient: non-finite objective value");
    grad[i] = (fp - fm) / (2.0 * h);
  }
  return grad;
}

void adam_step(AdamState& state, std::vector<double>& theta,
               const std::vector<double>& grad) {
  if (theta.size() != grad.size() || theta.size() != state.m.size())
    throw std::invalid_argument("adam_step: dimension mismatch");
  const auto& hp = state.hp;
  ++state.step;
  const double bc1 = 1.0 - std::pow(hp.beta1, double(state.step));
  const double bc2 = 1.0 - std::pow(hp.beta2, double(state.step));
  for (std::size_t i = 0; i < theta.size(); ++i) {
    state.m[i] = hp.beta1 * state.m[i] + (1.0 - hp.beta1) * grad[i];
    state.v[i] = hp.beta2 * state.v[i] + (1.0 - hp.beta2) * grad[i] * grad[i];
    const double mhat = state.m[i] / bc1;
    const double vhat = state.v[i] / bc2;
    theta[i] -= hp.learning_rate * mhat / (std::sqrt(vhat) + hp.epsilon);
  }
}

}  // namespace vqsd
