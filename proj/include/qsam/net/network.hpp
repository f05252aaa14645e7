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

// Staged evaluator for a Topology.
//
// Stage 1 simulates each encoding unit from |0...0> and traces it to its kept
// pair. Stage 2 runs U2 on the product of one row's pairs, stage 3
// runs U3 on the product of the U2 outputs. Discarded qubits are never acted
// on again, so tracing them early gives exactly the monolithic result.
//
// Every stage input is a product state (of encoder registers in stage 1,
// of kept pairs in stages 2 and 3): gates confined to one factor are applied to that factor before the product is formed, and a
// remaining suffix made only of CNOTs is a basis permutation, so the reduced
// output is gathered directly from factor entries without building the
// 2^(2N)-dimensional density matrix. Anything else (rotations after
// entanglers, per-gate noise) falls back to dense simulation.

#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "qsam/circuit/params.hpp"
#include "qsam/core/channel.hpp"
#include "qsam/net/topology.hpp"

namespace qsam::net {

enum class NoisePlacement {
  PreMeasurement,  // once, after U3, on the measured qubit
  PerGate,         // on the measured qubit after every U3 gate
};

struct NoiseModel {
  NoiseChannel channel;
  NoisePlacement placement = NoisePlacement::PreMeasurement;
};

enum class Stage { Unit, Row, Final };

// Addresses one gate occurrence: unit i*N+j, U2 row i, or U3 (instance 0).
struct GateRef {
  Stage stage = Stage::Unit;
  int instance = 0;
  int op = 0;

  auto operator<=>(const GateRef&) const = default;
};

struct Shift {
  GateRef gate;
  double delta = 0.0;
};

struct CompiledOp {
  circuit::GateKind kind = circuit::GateKind::Rx;
  int q0 = 0;
  int q1 = -1;      // CNOT target
  int slot = -1;    // -1: fixed angle
  double angle = 0.0;
};

struct CompiledCircuit {
  int num_qubits = 0;
  std::vector<CompiledOp> ops;
  std::vector<int> kept;
};

// Resolves every ParamId through `layout`; throws InputError when missing.
CompiledCircuit compile(const circuit::BlockCircuit& block,
                        const circuit::ParamStore& layout);

class BlockPlan;

struct CompiledSample {
  std::vector<CompiledCircuit> units;  // index i*N + j
  std::vector<std::shared_ptr<const BlockPlan>> plans;
  int label = 0;
};

class Network {
 public:
  // `layout` fixes the slot of every parameter; value spans passed later must
  // come from a store with the same layout.
  Network(Topology topology, const circuit::ParamStore& layout);
  ~Network();
  Network(const Network&);
  Network& operator=(const Network&);
  Network(Network&&) noexcept;
  Network& operator=(Network&&) noexcept;

  const Topology& topology() const { return topology_; }
  std::size_t num_params() const { return num_params_; }

  CompiledSample compile(const Sample& sample) const;

  double expect_z(const CompiledSample& sample, std::span<const double> values,
                  const NoiseModel* noise = nullptr,
                  const Shift* shift = nullptr) const;

  // Returns <Z> and adds weight * d<Z>/dtheta into `grad` (indexed by slot).
  // Each derivative is the parameter-shift sum over the parameter's gate
  // occurrences, every occurrence shifted alone; unchanged stage outputs are
  // reused, so a shifted evaluation costs a local recomputation plus a
  // contraction with the downstream effective observable.
  double expect_z_gradient(const CompiledSample& sample,
                           std::span<const double> values, const NoiseModel* noise,
                           double weight, std::span<double> grad) const;

  // Every gate occurrence reading `slot`, in evaluation order.
  std::vector<GateRef> occurrences(const CompiledSample& sample,
                                   std::size_t slot) const;
  const CompiledOp& op_at(const CompiledSample& sample, const GateRef& ref) const;

 private:
  const BlockPlan& final_plan(const NoiseModel* noise) const;
  void check_values(std::span<const double> values) const;
  // |0><0| for every encoder of a unit.
  std::vector<Matrix> unit_inputs() const;

  Topology topology_;
  circuit::ParamStore layout_;
  std::size_t num_params_ = 0;
  CompiledCircuit u2_;
  CompiledCircuit u3_;
  std::shared_ptr<const BlockPlan> u2_plan_;
  std::shared_ptr<const BlockPlan> u3_plan_;
  std::shared_ptr<const BlockPlan> u3_noisy_plan_;  // PerGate placement
};

}  // namespace qsam::net
