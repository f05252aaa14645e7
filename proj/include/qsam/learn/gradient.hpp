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

#include <map>
#include <span>
#include <vector>

#include "qsam/circuit/params.hpp"
#include "qsam/learn/loss.hpp"
#include "qsam/net/network.hpp"

namespace qsam::learn {

enum class GradientMode { ParameterShift, FiniteDifference };

struct GradientOptions {
  GradientMode mode = GradientMode::ParameterShift;
  double fd_step = 1e-6;  // central difference step h
};

// dL/dtheta keyed by parameter; covers every slot of the store.
using Gradient = std::map<circuit::ParamId, double>;

Gradient to_gradient(const circuit::ParamStore& layout, std::span<const double> grad);

struct BatchEvaluation {
  LossValue loss;
  std::vector<double> p1;
  std::vector<double> gradient;  // by slot; empty unless requested
};

// Loss and predictions over `batch`, plus dL/dtheta when `with_gradient`.
BatchEvaluation evaluate_batch(const net::Network& network,
                               const std::vector<net::CompiledSample>& batch,
                               std::span<const double> values,
                               const net::NoiseModel* noise, bool with_gradient,
                               const GradientOptions& options = {});

// dL/d(param) over `batch` by the parameter-shift rule applied to each gate
// occurrence separately, the other occurrences held at theta. Throws
// InputError for unknown parameters.
double grad_parameter_shift(const net::Network& network,
                            const std::vector<net::CompiledSample>& batch,
                            const circuit::ParamStore& store, const circuit::ParamId& param,
                            const net::NoiseModel* noise = nullptr);

}  // namespace qsam::learn
