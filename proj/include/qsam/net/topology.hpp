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

// Self-attention wiring. For N positions, encoding unit (i, j) places the
// encoders of x_i and x_j (x_j twice in the basic variant) side by side and
// applies the shared U1 block; it stands for the term Q_i K_j^T V_j. The N
// kept pairs of row i feed the shared U2 block, giving attention vector i,
// and the N attention outputs feed U3, whose qubit 0 is measured.

#pragma once

#include <optional>
#include <vector>

#include "qsam/circuit/block.hpp"
#include "qsam/data/vocabulary.hpp"

namespace qsam::net {

using circuit::DatasetKind;
using circuit::Variant;

inline constexpr int kDefaultPositions = 4;

struct Topology {
  DatasetKind dataset = DatasetKind::Iris;
  Variant variant = Variant::Basic;
  int positions = kDefaultPositions;  // N
  int encoder_width = 1;            // n1: qubits per encoded element
  int encoders_per_unit = 3;        // 3 basic, 2 optimized
  int unit_width = 3;               // encoders_per_unit * encoder_width
  circuit::BlockCircuit u1;         // over unit_width qubits, keeps {0, 1}
  circuit::BlockCircuit u2;         // over 2N qubits, keeps {0, 1}
  circuit::BlockCircuit u3;         // over 2N qubits, keeps {0}
  int measured_qubit = 0;
  // Required for text datasets before samples can be encoded.
  std::optional<data::Vocabulary> vocabulary;

  int num_units() const { return positions * positions; }
  int total_qubits() const { return num_units() * unit_width; }
  int stage_width() const { return 2 * positions; }
  std::size_t unit_index(int i, int j) const {
    return static_cast<std::size_t>(i * positions + j);
  }
  // Sample positions encoded by unit (i, j), in qubit order: {i, j, j} or
  // {i, j}.
  std::vector<int> unit_positions(int i, int j) const;
};

// One data point: Iris uses `features` (angles in [0, pi]), text datasets
// use `tokens` (PAD-padded to N).
struct Sample {
  std::vector<double> features;
  std::vector<data::TokenId> tokens;
  int label = 0;

  std::size_t size() const { return features.empty() ? tokens.size() : features.size(); }
};

// Throws InputError for positions < 2 or > 4 (U2/U3 act on 2N qubits).
Topology build_topology(DatasetKind dataset, Variant variant,
                        int positions = kDefaultPositions);

// Adds theta1/theta2/theta3 and, for text datasets with a vocabulary, the
// embedding angles of every real token.
void register_parameters(const Topology& topology, circuit::ParamStore& store);

// Throws InputError naming the first ParamId the topology would reference
// but `store` lacks.
void check_parameters(const Topology& topology, const circuit::ParamStore& store);

// Encoders of unit (i, j) followed by U1, over unit_width qubits, keeping the
// U1 kept qubits.
circuit::BlockCircuit unit_circuit(const Topology& topology, const Sample& sample,
                                   int i, int j);

// Throws InputError unless the sample has N positions that its dataset can
// encode.
void check_sample(const Topology& topology, const Sample& sample);

}  // namespace qsam::net
