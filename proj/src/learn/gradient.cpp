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


#include "qsam/learn/gradient.hpp"

#include <numbers>

#include "qsam/core/error.hpp"
#include "qsam/net/forward.hpp"

namespace qsam::learn {

Gradient to_gradient(const circuit::ParamStore& layout, std::span<const double> grad) {
  if (grad.size() != layout.size()) throw InputError("gradient size does not match layout");
  Gradient out;
  for (std::size_t k = 0; k < grad.size(); ++k) out.emplace(layout.ids()[k], grad[k]);
  return out;
}

namespace {

LossValue loss_at(const net::Network& network, const std::vector<net::CompiledSample>& batch,
                  std::span<const double> values, const net::NoiseModel* noise) {
  LossValue loss;
  for (const auto& s : batch) {
    const double p1 = net::probability_one(network.expect_z(s, values, noise));
    loss.per_sample.push_back(bce_loss(p1, s.label));
    loss.total += loss.per_sample.back();
  }
  return loss;
}

}  // namespace

BatchEvaluation evaluate_batch(const net::Network& network,
                               const std::vector<net::CompiledSample>& batch,
                               std::span<const double> values,
                               const net::NoiseModel* noise, bool with_gradient,
                               const GradientOptions& options) {
  BatchEvaluation out;
  const bool shift = with_gradient && options.mode == GradientMode::ParameterShift;
  if (with_gradient) out.gradient.assign(values.size(), 0.0);
  for (const auto& s : batch) {
    double z = 0.0;
    if (shift) {
      // dL/dtheta = dL/dp1 * (-1/2) d<Z>/dtheta; the weight needs <Z> first.
      std::vector<double> dz(values.size(), 0.0);
      z = network.expect_z_gradient(s, values, noise, 1.0, dz);
      const double w = -0.5 * bce_derivative(net::probability_one(z), s.label);
      for (std::size_t k = 0; k < dz.size(); ++k) out.gradient[k] += w * dz[k];
    } else {
      z = network.expect_z(s, values, noise);
    }
    const double p1 = net::probability_one(z);
    out.p1.push_back(p1);
    out.loss.per_sample.push_back(bce_loss(p1, s.label));
    out.loss.total += out.loss.per_sample.back();
  }
  if (with_gradient && options.mode == GradientMode::FiniteDifference) {
    if (!(options.fd_step > 0.0)) throw InputError("finite-difference step must be positive");
    std::vector<double> v(values.begin(), values.end());
    for (std::size_t k = 0; k < v.size(); ++k) {
      const double base = v[k];
      v[k] = base + options.fd_step;
      const double plus = loss_at(network, batch, v, noise).total;
      v[k] = base - options.fd_step;
      const double minus = loss_at(network, batch, v, noise).total;
      v[k] = base;
      out.gradient[k] = (plus - minus) / (2.0 * options.fd_step);
    }
  }
  return out;
}

double grad_parameter_shift(const net::Network& network,
                            const std::vector<net::CompiledSample>& batch,
                            const circuit::ParamStore& store, const circuit::ParamId& param,
                            const net::NoiseModel* noise) {
  const std::size_t slot = store.slot(param);
  const auto values = store.values();
  double total = 0.0;
  for (const auto& s : batch) {
    const double z = network.expect_z(s, values, noise);
    const double w = -0.5 * bce_derivative(net::probability_one(z), s.label);
    double dz = 0.0;
    for (const net::GateRef& ref : network.occurrences(s, slot)) {
      if (network.op_at(s, ref).kind == circuit::GateKind::CNOT) {
        throw InputError("parameter " + param.to_string() + " sits on a non-rotation gate");
      }
      const net::Shift plus{ref, std::numbers::pi / 2};
      const net::Shift minus{ref, -std::numbers::pi / 2};
      dz += 0.5 * (network.expect_z(s, values, noise, &plus) -
                   network.expect_z(s, values, noise, &minus));
    }
    total += w * dz;
  }
  return total;
}

}  // namespace qsam::learn
