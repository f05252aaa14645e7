// Copyright 2026 The QSAM Authors.
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


#include "qsam/learn/optimizer.hpp"

#include <cmath>

#include "qsam/core/error.hpp"

namespace qsam::learn {

void OptimizerConfig::validate() const {
  if (!(learning_rate > 0.0) || !std::isfinite(learning_rate)) {
    throw InputError("learning rate must be positive");
  }
  if (!(beta1 > 0.0 && beta1 < 1.0) || !(beta2 > 0.0 && beta2 < 1.0)) {
    throw InputError("Adam betas must lie in (0, 1)");
  }
  if (!(eps > 0.0)) throw InputError("Adam epsilon must be positive");
}

void gd_step(std::span<double> values, std::span<const double> grad, double learning_rate) {
  if (values.size() != grad.size()) throw InputError("gradient size does not match values");
  for (std::size_t k = 0; k < values.size(); ++k) values[k] -= learning_rate * grad[k];
}

void adam_step(std::span<double> values, std::span<const double> grad, AdamState& state,
               const OptimizerConfig& config) {
  if (values.size() != grad.size() || state.m.size() != grad.size()) {
    throw InputError("Adam state does not match the gradient");
  }
  ++state.step;
  const double t = static_cast<double>(state.step);
  const double c1 = 1.0 - std::pow(config.beta1, t);
  const double c2 = 1.0 - std::pow(config.beta2, t);
  for (std::size_t k = 0; k < values.size(); ++k) {
    state.m[k] = config.beta1 * state.m[k] + (1.0 - config.beta1) * grad[k];
    state.v[k] = config.beta2 * state.v[k] + (1.0 - config.beta2) * grad[k] * grad[k];
    const double m_hat = state.m[k] / c1;
    const double v_hat = state.v[k] / c2;
    values[k] -= config.learning_rate * m_hat / (std::sqrt(v_hat) + config.eps);
  }
}

}  // namespace qsam::learn
