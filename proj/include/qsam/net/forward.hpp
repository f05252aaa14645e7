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

#include "qsam/circuit/params.hpp"
#include "qsam/net/network.hpp"
#include "qsam/net/topology.hpp"

namespace qsam::net {

struct ForwardResult {
  double expect_z = 1.0;
  double p1 = 0.0;  // (1 - <Z>) / 2
};

inline double probability_one(double expect_z) { return 0.5 * (1.0 - expect_z); }

// Staged evaluation; see Network.
ForwardResult forward(const Topology& topology, const Sample& sample,
                      const circuit::ParamStore& store,
                      const NoiseModel* noise = nullptr);

inline constexpr int kMonolithicQubitLimit = 12;

// Simulates the whole wiring as one pure register of total_qubits() qubits
// and returns <Z> of the measured qubit. Throws InputError above
// kMonolithicQubitLimit qubits.
double forward_monolithic(const Topology& topology, const Sample& sample,
                          const circuit::ParamStore& store);

// 1 when p1 > 0.5; ties go to 0.
inline int classify(double p1) { return p1 > 0.5 ? 1 : 0; }

struct ComplexityReport {
  int qubits = 0;
  int two_qubit_gates = 0;           // ansatz blocks only
  int trainable_params = 0;          // |theta1| + |theta2| + |theta3|
  int embedding_params_per_word = 0;
  int encoder_two_qubit_gates = 0;   // per word encoder
};

ComplexityReport complexity_report(const Topology& topology);
ComplexityReport complexity_report(DatasetKind dataset, Variant variant);

}  // namespace qsam::net
