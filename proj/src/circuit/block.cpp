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

#include "qsam/circuit/block.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qsam/core/error.hpp"

namespace qsam::circuit {

std::string_view to_string(DatasetKind kind) {
  switch (kind) {
    case DatasetKind::Iris:
      return "iris";
    case DatasetKind::MC:
      return "mc";
    case DatasetKind::RP:
      return "rp";
  }
  return "unknown";
}

std::string_view to_string(Variant variant) {
  return variant == Variant::Basic ? "basic" : "optimized";
}

DatasetKind parse_dataset(std::string_view name) {
  if (name == "iris") return DatasetKind::Iris;
  if (name == "mc") return DatasetKind::MC;
  if (name == "rp") return DatasetKind::RP;
  throw InputError("unsupported dataset '" + std::string(name) + "'");
}

Variant parse_variant(std::string_view name) {
  if (name == "basic") return Variant::Basic;
  if (name == "optimized") return Variant::Optimized;
  throw InputError("unknown variant '" + std::string(name) + "'");
}

GateOp GateOp::rotation(GateKind kind, int qubit, ParamId param) {
  return GateOp{kind, {qubit}, std::move(param), 0.0};
}

GateOp GateOp::fixed_rotation(GateKind kind, int qubit, double angle) {
  return GateOp{kind, {qubit}, std::nullopt, angle};
}

GateOp GateOp::cnot(int control, int target) {
  return GateOp{GateKind::CNOT, {control, target}, std::nullopt, 0.0};
}

std::size_t BlockCircuit::trainable_count() const {
  return static_cast<std::size_t>(std::count_if(
      ops.begin(), ops.end(), [](const GateOp& op) { return op.is_trainable(); }));
}

std::size_t BlockCircuit::two_qubit_count() const {
  return static_cast<std::size_t>(std::count_if(
      ops.begin(), ops.end(), [](const GateOp& op) { return op.targets.size() == 2; }));
}

void BlockCircuit::validate() const {
  if (num_qubits < 1) throw InputError("block needs at least one qubit");
  for (const GateOp& op : ops) {
    const std::size_t arity = op.kind == GateKind::CNOT ? 2 : 1;
    if (op.targets.size() != arity) {
      throw InputError("gate has the wrong number of targets");
    }
    if (op.kind == GateKind::CNOT && op.param) {
      throw InputError("CNOT cannot carry a parameter");
    }
    detail::check_targets(num_qubits, op.targets);
  }
  if (kept.empty()) throw InputError("block keeps no qubits");
  detail::check_targets(num_qubits, kept);
}

BlockCircuit build_ansatz_block(int num_qubits, ParamGroup group) {
  if (num_qubits < 2) throw InputError("ansatz block needs at least 2 qubits");
  if (group == ParamGroup::Embedding) {
    throw InputError("ansatz blocks use the U1, U2 or U3 groups");
  }
  BlockCircuit block;
  block.num_qubits = num_qubits;
  for (int k = 0; k < num_qubits; ++k) {
    block.ops.push_back(GateOp::rotation(GateKind::Rx, k, ParamId::ansatz(group, k)));
  }
  for (int k = 0; k < num_qubits; ++k) {
    block.ops.push_back(GateOp::cnot(k, (k + 1) % num_qubits));
  }
  block.kept = group == ParamGroup::U3 ? std::vector<int>{0} : std::vector<int>{0, 1};
  return block;
}

BlockCircuit build_iris_encoder(double feature) {
  if (!std::isfinite(feature) || feature < 0.0 || feature > std::numbers::pi) {
    throw InputError("iris feature " + std::to_string(feature) +
                     " is outside [0, pi]; scale features first");
  }
  BlockCircuit block;
  block.num_qubits = 1;
  block.ops.push_back(GateOp::fixed_rotation(GateKind::Rx, 0, feature));
  block.kept = {0};
  return block;
}

int embedding_angles_per_word(DatasetKind dataset) {
  switch (dataset) {
    case DatasetKind::Iris:
      return 0;
    case DatasetKind::MC:
      return 6;
    case DatasetKind::RP:
      return 12;
  }
  return 0;
}

BlockCircuit word_encoder_circuit(data::TokenId token, DatasetKind dataset,
                                  const data::Vocabulary& vocab) {
  if (dataset == DatasetKind::Iris) {
    throw InputError("iris has no word encoder");
  }
  if (!vocab.is_known(token)) {
    throw VocabularyError("unknown token id " + std::to_string(token));
  }
  BlockCircuit block;
  block.num_qubits = 2;
  block.kept = {0, 1};
  if (vocab.is_pad(token)) return block;

  const std::string& word = vocab.token(token);
  int next = 0;
  auto layer = [&] {
    for (int q = 0; q < 2; ++q) {
      for (GateKind kind : {GateKind::Rx, GateKind::Ry, GateKind::Rz}) {
        block.ops.push_back(GateOp::rotation(kind, q, ParamId::embedding(word, next++)));
      }
    }
  };
  layer();
  if (dataset == DatasetKind::RP) {
    block.ops.push_back(GateOp::cnot(0, 1));
    layer();
  }
  return block;
}

BlockCircuit build_word_encoder(data::TokenId token, DatasetKind dataset,
                                const data::Vocabulary& vocab, ParamStore& store) {
  BlockCircuit block = word_encoder_circuit(token, dataset, vocab);
  for (const GateOp& op : block.ops) {
    if (op.param) store.add(*op.param);
  }
  return block;
}

void append_block(BlockCircuit& dst, const BlockCircuit& src, int offset) {
  if (offset < 0 || offset + src.num_qubits > dst.num_qubits) {
    throw InputError("appended block does not fit the destination register");
  }
  for (GateOp op : src.ops) {
    for (int& t : op.targets) t += offset;
    dst.ops.push_back(std::move(op));
  }
}

Mat2 rotation_matrix(GateKind kind, double angle) {
  switch (kind) {
    case GateKind::Rx:
      return rx_matrix(angle);
    case GateKind::Ry:
      return ry_matrix(angle);
    case GateKind::Rz:
      return rz_matrix(angle);
    case GateKind::CNOT:
      break;
  }
  throw InputError("CNOT is not a rotation");
}

namespace {

template <typename State>
MixedState run_block_impl(const BlockCircuit& block, State state,
                          const ParamStore& store) {
  block.validate();
  if (state.num_qubits() != block.num_qubits) {
    throw InputError("block input has " + std::to_string(state.num_qubits()) +
                     " qubits, expected " + std::to_string(block.num_qubits));
  }
  static const GateMatrix kCnot = cnot();
  for (const GateOp& op : block.ops) {
    if (op.kind == GateKind::CNOT) {
      state.apply(kCnot, op.targets);
      continue;
    }
    const double angle = op.param ? store.get(*op.param) : op.angle;
    state.apply(GateMatrix(Matrix(rotation_matrix(op.kind, angle))), op.targets);
  }
  return partial_trace(state, block.kept);
}

}  // namespace

MixedState run_block(const BlockCircuit& block, const PureState& input,
                     const ParamStore& store) {
  return run_block_impl(block, input, store);
}

MixedState run_block(const BlockCircuit& block, const MixedState& input,
                     const ParamStore& store) {
  return run_block_impl(block, input, store);
}

}  // namespace qsam::circuit
