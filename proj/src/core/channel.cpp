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

#include "qsam/core/channel.hpp"

#include <cmath>

#include "qsam/core/error.hpp"

namespace qsam {

std::string_view to_string(NoiseKind kind) {
  switch (kind) {
    case NoiseKind::BitFlip:
      return "bitflip";
    case NoiseKind::Depolarizing:
      return "depolarizing";
    case NoiseKind::AmplitudeDamping:
      return "ampdamp";
  }
  return "unknown";
}

NoiseKind parse_noise_kind(std::string_view name) {
  if (name == "bitflip") return NoiseKind::BitFlip;
  if (name == "depolarizing") return NoiseKind::Depolarizing;
  if (name == "ampdamp") return NoiseKind::AmplitudeDamping;
  throw InputError("unknown noise channel '" + std::string(name) + "'");
}

NoiseChannel::NoiseChannel(NoiseKind kind, double level, std::vector<Mat2> kraus)
    : kind_(kind), level_(level), kraus_(std::move(kraus)) {
  if (!(level >= 0.0 && level <= 1.0)) {
    throw InputError("noise level must lie in [0, 1]");
  }
  if (kraus_.empty()) throw InputError("Kraus set is empty");
  if (trace_preservation_error() > 1e-9) {
    throw InputError("Kraus set is not trace preserving");
  }
}

NoiseChannel NoiseChannel::bit_flip(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("noise level must lie in [0, 1]");
  Mat2 k0 = Mat2::Identity() * std::sqrt(1.0 - p);
  Mat2 k1;
  k1 << 0.0, 1.0, 1.0, 0.0;
  k1 *= std::sqrt(p);
  return NoiseChannel(NoiseKind::BitFlip, p, {k0, k1});
}

NoiseChannel NoiseChannel::depolarizing(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("noise level must lie in [0, 1]");
  const double s = std::sqrt(p / 3.0);
  Mat2 k0 = Mat2::Identity() * std::sqrt(1.0 - p);
  Mat2 x, y, z;
  x << 0.0, 1.0, 1.0, 0.0;
  y << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
  z << 1.0, 0.0, 0.0, -1.0;
  return NoiseChannel(NoiseKind::Depolarizing, p, {k0, s * x, s * y, s * z});
}

NoiseChannel NoiseChannel::amplitude_damping(double gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    throw InputError("damping probability must lie in [0, 1]");
  }
  Mat2 k0, k1;
  k0 << 1.0, 0.0, 0.0, std::sqrt(1.0 - gamma);
  k1 << 0.0, std::sqrt(gamma), 0.0, 0.0;
  return NoiseChannel(NoiseKind::AmplitudeDamping, gamma, {k0, k1});
}

NoiseChannel NoiseChannel::make(NoiseKind kind, double level) {
  switch (kind) {
    case NoiseKind::BitFlip:
      return bit_flip(level);
    case NoiseKind::Depolarizing:
      return depolarizing(level);
    case NoiseKind::AmplitudeDamping:
      return amplitude_damping(level);
  }
  throw InputError("unknown noise kind");
}

double NoiseChannel::trace_preservation_error() const {
  Mat2 sum = Mat2::Zero();
  for (const Mat2& k : kraus_) sum += k.adjoint() * k;
  return (sum - Mat2::Identity()).cwiseAbs().maxCoeff();
}

void apply_channel_inplace(Matrix& rho, int num_qubits,
                           const NoiseChannel& channel, int target) {
  detail::check_targets(num_qubits, {target});
  Matrix acc = Matrix::Zero(rho.rows(), rho.cols());
  Matrix term;
  for (const Mat2& k : channel.kraus()) {
    if (k.isZero(0.0)) continue;
    term = rho;
    kernels::conjugate_1q(term, num_qubits, target, k);
    acc += term;
  }
  rho = std::move(acc);
}

void apply_channel_adjoint_inplace(Matrix& observable, int num_qubits,
                                   const NoiseChannel& channel, int target) {
  detail::check_targets(num_qubits, {target});
  Matrix acc = Matrix::Zero(observable.rows(), observable.cols());
  Matrix term;
  for (const Mat2& k : channel.kraus()) {
    if (k.isZero(0.0)) continue;
    term = observable;
    kernels::conjugate_1q(term, num_qubits, target, k.adjoint());
    acc += term;
  }
  observable = std::move(acc);
}

MixedState apply_channel(const MixedState& state, const NoiseChannel& channel,
                         int target) {
  Matrix rho = state.rho();
  apply_channel_inplace(rho, state.num_qubits(), channel, target);
  return MixedState::adopt(state.num_qubits(), std::move(rho));
}

}  // namespace qsam
