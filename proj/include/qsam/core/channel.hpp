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

#include <string>
#include <string_view>
#include <vector>

#include "qsam/core/state.hpp"

namespace qsam {

enum class NoiseKind { BitFlip, Depolarizing, AmplitudeDamping };

std::string_view to_string(NoiseKind kind);
// Accepts "bitflip", "depolarizing", "ampdamp"; throws InputError otherwise.
NoiseKind parse_noise_kind(std::string_view name);

// Single-qubit channel in Kraus form, rho -> sum_k K_k rho K_k^dag.
class NoiseChannel {
 public:
  // Throws InputError when level is outside [0, 1] or the Kraus set violates
  // sum_k K_k^dag K_k = I by more than 1e-9.
  NoiseChannel(NoiseKind kind, double level, std::vector<Mat2> kraus);

  // K0 = sqrt(1-p) I, K1 = sqrt(p) X.
  static NoiseChannel bit_flip(double p);
  // K0 = sqrt(1-p) I and sqrt(p/3) X, Y, Z. <Z> contracts by 1 - 4p/3.
  static NoiseChannel depolarizing(double p);
  // K0 = diag(1, sqrt(1-g)), K1 = sqrt(g) |0><1|.
  static NoiseChannel amplitude_damping(double gamma);
  static NoiseChannel make(NoiseKind kind, double level);

  NoiseKind kind() const { return kind_; }
  double level() const { return level_; }
  const std::vector<Mat2>& kraus() const { return kraus_; }

  // Largest entry of |sum_k K_k^dag K_k - I|.
  double trace_preservation_error() const;

 private:
  NoiseKind kind_;
  double level_;
  std::vector<Mat2> kraus_;
};

MixedState apply_channel(const MixedState& state, const NoiseChannel& channel,
                         int target);

// In-place channel on a raw density matrix of `num_qubits` qubits.
void apply_channel_inplace(Matrix& rho, int num_qubits,
                           const NoiseChannel& channel, int target);
// Heisenberg-picture (adjoint) channel on an observable: O -> sum K^dag O K.
void apply_channel_adjoint_inplace(Matrix& observable, int num_qubits,
                                   const NoiseChannel& channel, int target);

}  // namespace qsam
