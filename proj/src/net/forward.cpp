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


#include "qsam/net/forward.hpp"

#include <string>

#include "qsam/core/error.hpp"
#include "qsam/core/state.hpp"

namespace qsam::net {

using circuit::BlockCircuit;
using circuit::GateKind;

ForwardResult forward(const Topology& topology, const Sample& sample,
                      const circuit::ParamStore& store, const NoiseModel* noise) {
  const Network network(topology, store);
  const double z = network.expect_z(network.compile(sample), store.values(), noise);
  return {z, probability_one(z)};
}

namespace {

// Appends `src` with local qubit k mapped to global qubit map[k].
void append_mapped(BlockCircuit& dst, const BlockCircuit& src, const std::vector<int>& map) {
  for (auto op : src.ops) {
    for (int& t : op.targets) t = map.at(static_cast<std::size_t>(t));
    dst.ops.push_back(std::move(op));
  }
}

}  // namespace

double forward_monolithic(const Topology& topology, const Sample& sample,
                          const circuit::ParamStore& store) {
  const int total = topology.total_qubits();
  if (total > kMonolithicQubitLimit) {
    throw InputError("monolithic simulation needs " + std::to_string(total) +
                     " qubits, limit is " + std::to_string(kMonolithicQubitLimit));
  }
  const int n = topology.positions;
  const int w = topology.unit_width;
  BlockCircuit global;
  global.num_qubits = total;

  // Global qubits carrying the kept outputs of each unit and row.
  std::vector<std::vector<int>> unit_kept;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int base = static_cast<int>(topology.unit_index(i, j)) * w;
      circuit::append_block(global, unit_circuit(topology, sample, i, j), base);
      std::vector<int> kept;
      for (int k : topology.u1.kept) kept.push_back(base + k);
      unit_kept.push_back(std::move(kept));
    }
  }
  std::vector<int> u3_map;
  for (int i = 0; i < n; ++i) {
    std::vector<int> map;
    for (int j = 0; j < n; ++j) {
      const auto& kept = unit_kept[topology.unit_index(i, j)];
      map.insert(map.end(), kept.begin(), kept.end());
    }
    append_mapped(global, topology.u2, map);
    for (int k : topology.u2.kept) u3_map.push_back(map[static_cast<std::size_t>(k)]);
  }
  append_mapped(global, topology.u3, u3_map);
  global.kept = {u3_map[static_cast<std::size_t>(topology.measured_qubit)]};
  global.validate();

  PureState psi(total);
  for (const auto& op : global.ops) {
    if (op.kind == GateKind::CNOT) {
      psi.apply(cnot(), op.targets);
    } else {
      const double angle = op.param ? store.get(*op.param) : op.angle;
      psi.apply(circuit::rotation_matrix(op.kind, angle), op.targets[0]);
    }
  }
  return expect_z(psi, global.kept.front());
}

ComplexityReport complexity_report(const Topology& topology) {
  ComplexityReport r;
  r.qubits = topology.total_qubits();
  r.two_qubit_gates = static_cast<int>(
      topology.num_units() * topology.u1.two_qubit_count() +
      topology.positions * topology.u2.two_qubit_count() + topology.u3.two_qubit_count());
  circuit::ParamStore store;
  for (const BlockCircuit* b : {&topology.u1, &topology.u2, &topology.u3}) {
    for (const auto& op : b->ops) {
      if (op.param) store.add(*op.param);
    }
  }
  r.trainable_params = static_cast<int>(store.ansatz_count());
  r.embedding_params_per_word = circuit::embedding_angles_per_word(topology.dataset);
  if (topology.dataset != DatasetKind::Iris) {
    data::Vocabulary probe;
    probe.add("w");
    r.encoder_two_qubit_gates = static_cast<int>(
        circuit::word_encoder_circuit(probe.id("w"), topology.dataset, probe)
            .two_qubit_count());
  }
  return r;
}

ComplexityReport complexity_report(DatasetKind dataset, Variant variant) {
  return complexity_report(build_topology(dataset, variant));
}

}  // namespace qsam::net
