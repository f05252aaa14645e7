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

// Gate-level circuit blocks and a reference (unoptimized) executor.

#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "qsam/circuit/params.hpp"
#include "qsam/core/state.hpp"
#include "qsam/data/vocabulary.hpp"

namespace qsam::circuit {

enum class DatasetKind { Iris, MC, RP };
enum class Variant { Basic, Optimized };

std::string_view to_string(DatasetKind kind);
std::string_view to_string(Variant variant);
// "iris" | "mc" | "rp" and "basic" | "optimized"; throw InputError.
DatasetKind parse_dataset(std::string_view name);
Variant parse_variant(std::string_view name);

enum class GateKind { Rx, Ry, Rz, CNOT };

struct GateOp {
  GateKind kind = GateKind::Rx;
  std::vector<int> targets;      // CNOT: {control, target}.
  std::optional<ParamId> param;  // Rotations: trainable angle ...
  double angle = 0.0;            // ... or a fixed one when param is empty.

  static GateOp rotation(GateKind kind, int qubit, ParamId param);
  static GateOp fixed_rotation(GateKind kind, int qubit, double angle);
  static GateOp cnot(int control, int target);

  bool is_rotation() const { return kind != GateKind::CNOT; }
  bool is_trainable() const { return param.has_value(); }
};

struct BlockCircuit {
  int num_qubits = 0;
  std::vector<GateOp> ops;
  std::vector<int> kept;

  std::size_t trainable_count() const;
  std::size_t two_qubit_count() const;
  // Throws InputError on arity or index violations.
  void validate() const;
};

// One Rx(theta_group,k) per qubit, then CNOT(k -> (k+1) mod n) for every k.
// U1/U2 keep local qubits {0, 1}; U3 keeps the measured qubit {0}.
BlockCircuit build_ansatz_block(int num_qubits, ParamGroup group);

// Single fixed Rx(feature); feature must already be scaled into [0, pi].
BlockCircuit build_iris_encoder(double feature);

// Two-qubit word encoder. MC: Rx, Ry, Rz on each qubit (6 angles). RP: two
// such layers around one CNOT(0 -> 1) (12 angles). PAD yields an empty
// (identity) circuit. The angles are registered in `store` when missing.
BlockCircuit build_word_encoder(data::TokenId token, DatasetKind dataset,
                                const data::Vocabulary& vocab, ParamStore& store);
// Same circuit without touching a store.
BlockCircuit word_encoder_circuit(data::TokenId token, DatasetKind dataset,
                                  const data::Vocabulary& vocab);
// Embedding angles per word: 6 (MC), 12 (RP), 0 (Iris).
int embedding_angles_per_word(DatasetKind dataset);

// Appends `src` to `dst` with every local qubit shifted by `offset`. Ignores
// src.kept.
void append_block(BlockCircuit& dst, const BlockCircuit& src, int offset);

// Reference executor: applies ops through the generic state API, then traces
// down to the kept qubits. Throws InputError for unresolved parameters.
MixedState run_block(const BlockCircuit& block, const PureState& input,
                     const ParamStore& store);
MixedState run_block(const BlockCircuit& block, const MixedState& input,
                     const ParamStore& store);

// Unitary 2x2 of a rotation op at `angle`.
Mat2 rotation_matrix(GateKind kind, double angle);

}  // namespace qsam::circuit
