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


// Test-side reference implementations. They use only the slow reference
// primitives (GateMatrix application, Kraus sums, explicit partial traces)
// so they share no code paths with the staged evaluator.

#pragma once

#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "qsam/circuit/block.hpp"
#include "qsam/circuit/params.hpp"
#include "qsam/core/channel.hpp"
#include "qsam/core/state.hpp"
#include "qsam/net/network.hpp"
#include "qsam/net/topology.hpp"

namespace qsam::testing {

inline circuit::ParamStore random_store(const net::Topology& t, std::mt19937_64& rng) {
  circuit::ParamStore store;
  net::register_parameters(t, store);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  for (double& v : store.values()) v = angle(rng);
  return store;
}

inline net::Sample random_iris_sample(int positions, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> feature(0.0, std::numbers::pi);
  net::Sample s;
  for (int k = 0; k < positions; ++k) s.features.push_back(feature(rng));
  return s;
}

inline data::Vocabulary toy_vocabulary() {
  return data::Vocabulary({"alice", "bob", "cooks", "runs"});
}

inline net::Sample random_text_sample(int positions, const data::Vocabulary& vocab,
                                      std::mt19937_64& rng, bool pad_last = false) {
  std::uniform_int_distribution<int> pick(0, static_cast<int>(vocab.size()) - 1);
  net::Sample s;
  for (int k = 0; k < positions; ++k) s.tokens.push_back(pick(rng));
  if (pad_last) s.tokens.back() = vocab.pad_id();
  return s;
}

// U3 evaluated gate by gate on a MixedState, with the channel after every
// gate (per_gate) or once at the end.
inline MixedState reference_u3(const circuit::BlockCircuit& u3, MixedState rho,
                               const circuit::ParamStore& store,
                               const net::NoiseModel* noise, int measured) {
  for (const auto& op : u3.ops) {
    if (op.kind == circuit::GateKind::CNOT) {
      rho.apply(cnot(), op.targets);
    } else {
      const double a = op.param ? store.get(*op.param) : op.angle;
      rho.apply(GateMatrix(Matrix(circuit::rotation_matrix(op.kind, a))), op.targets);
    }
    if (noise && noise->placement == net::NoisePlacement::PerGate) {
      rho = apply_channel(rho, noise->channel, measured);
    }
  }
  if (noise && noise->placement == net::NoisePlacement::PreMeasurement) {
    rho = apply_channel(rho, noise->channel, measured);
  }
  return rho;
}

// Stage-by-stage reference through run_block, tensor and apply_channel.
inline double reference_staged(const net::Topology& t, const net::Sample& sample,
                               const circuit::ParamStore& store,
                               const net::NoiseModel* noise = nullptr) {
  const int n = t.positions;
  std::vector<MixedState> rows;
  for (int i = 0; i < n; ++i) {
    std::vector<MixedState> units;
    for (int j = 0; j < n; ++j) {
      units.push_back(
          circuit::run_block(net::unit_circuit(t, sample, i, j), PureState(t.unit_width), store));
    }
    rows.push_back(circuit::run_block(t.u2, tensor(units), store));
  }
  circuit::BlockCircuit u3 = t.u3;
  MixedState out = reference_u3(u3, tensor(rows), store, noise, t.measured_qubit);
  return expect_z(partial_trace(out, t.u3.kept), 0);
}

// Central finite difference of <Z> in every slot.
inline std::vector<double> finite_difference(const net::Network& network,
                                             const net::CompiledSample& sample,
                                             std::vector<double> values, double h,
                                             const net::NoiseModel* noise = nullptr) {
  std::vector<double> grad(values.size());
  for (std::size_t k = 0; k < values.size(); ++k) {
    const double v = values[k];
    values[k] = v + h;
    const double plus = network.expect_z(sample, values, noise);
    values[k] = v - h;
    const double minus = network.expect_z(sample, values, noise);
    values[k] = v;
    grad[k] = (plus - minus) / (2.0 * h);
  }
  return grad;
}

}  // namespace qsam::testing
