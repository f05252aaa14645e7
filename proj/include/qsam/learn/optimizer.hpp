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


#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qsam/learn/gradient.hpp"

namespace qsam::learn {

enum class OptimizerKind { Adam, GradientDescent };

struct OptimizerConfig {
  OptimizerKind kind = OptimizerKind::Adam;
  double learning_rate = 0.05;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;

  // Throws InputError for lr <= 0, betas outside (0, 1) or eps <= 0.
  void validate() const;
};

struct AdamState {
  explicit AdamState(std::size_t size = 0) : m(size, 0.0), v(size, 0.0) {}

  std::vector<double> m;
  std::vector<double> v;
  std::uint64_t step = 0;
};

// theta <- theta - lr * g.
void gd_step(std::span<double> values, std::span<const double> grad, double learning_rate);

// Bias-corrected Adam update.
void adam_step(std::span<double> values, std::span<const double> grad, AdamState& state,
               const OptimizerConfig& config);

}  // namespace qsam::learn
