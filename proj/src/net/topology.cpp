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

#include "qsam/net/topology.hpp"

#include <string>

#include "qsam/core/error.hpp"

namespace qsam::net {

using circuit::BlockCircuit;
using circuit::ParamGroup;
using circuit::ParamId;
using circuit::ParamStore;

std::vector<int> Topology::unit_positions(int i, int j) const {
  if (variant == Variant::Basic) return {i, j, j};
  return {i, j};
}

Topology build_topology(DatasetKind dataset, Variant variant, int positions) {
  if (positions < 2 || positions > 4) {
    throw InputError("positions per sample must lie in [2, 4]");
  }
  Topology t;
  t.dataset = dataset;
  t.variant = variant;
  t.positions = positions;
  t.encoder_width = dataset == DatasetKind::Iris ? 1 : 2;
  t.encoders_per_unit = variant == Variant::Basic ? 3 : 2;
  t.unit_width = t.encoders_per_unit * t.encoder_width;
  t.u1 = circuit::build_ansatz_block(t.unit_width, ParamGroup::U1);
  t.u2 = circuit::build_ansatz_block(t.stage_width(), ParamGroup::U2);
  t.u3 = circuit::build_ansatz_block(t.stage_width(), ParamGroup::U3);
  t.measured_qubit = t.u3.kept.front();
  return t;
}

void register_parameters(const Topology& topology, ParamStore& store) {
  for (const BlockCircuit* block : {&topology.u1, &topology.u2, &topology.u3}) {
    for (const auto& op : block->ops) {
      if (op.param) store.add(*op.param);
    }
  }
  if (topology.dataset == DatasetKind::Iris || !topology.vocabulary) return;
  const auto& vocab = *topology.vocabulary;
  for (data::TokenId id = 0; id < static_cast<data::TokenId>(vocab.size()); ++id) {
    circuit::build_word_encoder(id, topology.dataset, vocab, store);
  }
}

void check_parameters(const Topology& topology, const ParamStore& store) {
  auto check_block = [&](const BlockCircuit& b) {
    for (const auto& op : b.ops) {
      if (op.param && !store.contains(*op.param)) {
        throw InputError("topology references missing parameter " +
                         op.param->to_string());
      }
    }
  };
  check_block(topology.u1);
  check_block(topology.u2);
  check_block(topology.u3);
  if (topology.dataset != DatasetKind::Iris && topology.vocabulary) {
    const auto& vocab = *topology.vocabulary;
    for (data::TokenId id = 0; id < static_cast<data::TokenId>(vocab.size()); ++id) {
      check_block(circuit::word_encoder_circuit(id, topology.dataset, vocab));
    }
  }
}

void check_sample(const Topology& topology, const Sample& sample) {
  if (static_cast<int>(sample.size()) != topology.positions) {
    throw InputError("sample has " + std::to_string(sample.size()) +
                     " positions, topology expects " +
                     std::to_string(topology.positions));
  }
  if (topology.dataset == DatasetKind::Iris) {
    if (sample.features.empty()) throw InputError("iris sample without features");
  } else {
    if (sample.tokens.empty()) throw InputError("text sample without tokens");
    if (!topology.vocabulary) {
      throw InputError("text topology has no vocabulary attached");
    }
  }
}

BlockCircuit unit_circuit(const Topology& topology, const Sample& sample, int i,
                          int j) {
  check_sample(topology, sample);
  BlockCircuit unit;
  unit.num_qubits = topology.unit_width;
  int offset = 0;
  for (int pos : topology.unit_positions(i, j)) {
    const auto p = static_cast<std::size_t>(pos);
    const BlockCircuit enc =
        topology.dataset == DatasetKind::Iris
            ? circuit::build_iris_encoder(sample.features[p])
            : circuit::word_encoder_circuit(sample.tokens[p], topology.dataset,
                                            *topology.vocabulary);
    circuit::append_block(unit, enc, offset);
    offset += topology.encoder_width;
  }
  circuit::append_block(unit, topology.u1, 0);
  unit.kept = topology.u1.kept;
  return unit;
}

}  // namespace qsam::net
