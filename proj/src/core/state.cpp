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

#include "qsam/core/state.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "qsam/core/error.hpp"

namespace qsam {
namespace {

constexpr Complex kI{0.0, 1.0};

void check_angle(double theta) {
  if (!std::isfinite(theta)) {
    throw InputError("rotation angle must be finite");
  }
}

void check_qubit_count(int num_qubits) {
  if (num_qubits < 1 || num_qubits > kMaxDenseQubits) {
    throw InputError("qubit count " + std::to_string(num_qubits) +
                     " outside [1, " + std::to_string(kMaxDenseQubits) + "]");
  }
}

int log2_dim(Eigen::Index dim) {
  const auto d = static_cast<unsigned long long>(dim);
  if (d < 2 || !std::has_single_bit(d)) {
    throw InputError("dimension " + std::to_string(d) +
                     " is not a power of two >= 2");
  }
  return std::countr_zero(d);
}

// Offsets of every basis value of `qubits` inside a full index.
std::vector<std::size_t> subset_offsets(int num_qubits,
                                        const std::vector<int>& qubits) {
  const std::size_t count = std::size_t{1} << qubits.size();
  std::vector<std::size_t> out(count, 0);
  const int k = static_cast<int>(qubits.size());
  for (std::size_t v = 0; v < count; ++v) {
    std::size_t off = 0;
    for (int m = 0; m < k; ++m) {
      if (v & (std::size_t{1} << (k - 1 - m))) {
        off |= kernels::qubit_mask(num_qubits, qubits[m]);
      }
    }
    out[v] = off;
  }
  return out;
}

std::vector<int> complement(int num_qubits, const std::vector<int>& keep) {
  std::vector<int> rest;
  for (int q = 0; q < num_qubits; ++q) {
    if (std::find(keep.begin(), keep.end(), q) == keep.end()) rest.push_back(q);
  }
  return rest;
}

template <typename Apply1, typename Apply2, typename ApplyCnot>
void dispatch_gate(const GateMatrix& gate, const std::vector<int>& targets,
                   Apply1&& one, Apply2&& two, ApplyCnot&& cx) {
  if (gate.arity() == 1) {
    one(Mat2(gate.matrix()), targets[0]);
    return;
  }
  static const Matrix kCnot = cnot().matrix();
  const Matrix& m = gate.matrix();
  if (gate.is_permutation() && m == kCnot) {
    cx(targets[0], targets[1]);
    return;
  }
  two(Mat4(m), targets[0], targets[1]);
}

}  // namespace

GateMatrix::GateMatrix(Matrix matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() == 2 && matrix_.cols() == 2) {
    arity_ = 1;
  } else if (matrix_.rows() == 4 && matrix_.cols() == 4) {
    arity_ = 2;
  } else {
    throw InputError("gate matrix must be 2x2 or 4x4");
  }
  if (!matrix_.allFinite()) throw InputError("gate matrix must be finite");
  const Matrix id = Matrix::Identity(matrix_.rows(), matrix_.cols());
  if ((matrix_.adjoint() * matrix_ - id).cwiseAbs().maxCoeff() > 1e-12) {
    throw InputError("gate matrix is not unitary within 1e-12");
  }
  permutation_ = true;
  for (Eigen::Index r = 0; r < matrix_.rows(); ++r) {
    for (Eigen::Index c = 0; c < matrix_.cols(); ++c) {
      const Complex v = matrix_(r, c);
      if (v != Complex{0.0} && v != Complex{1.0}) permutation_ = false;
    }
  }
}

Mat2 rx_matrix(double theta) {
  check_angle(theta);
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  Mat2 m;
  m << c, -kI * s, -kI * s, c;
  return m;
}

Mat2 ry_matrix(double theta) {
  check_angle(theta);
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  Mat2 m;
  m << c, -s, s, c;
  return m;
}

Mat2 rz_matrix(double theta) {
  check_angle(theta);
  Mat2 m;
  m << std::exp(-kI * (theta / 2)), 0.0, 0.0, std::exp(kI * (theta / 2));
  return m;
}

GateMatrix rx(double theta) { return GateMatrix(Matrix(rx_matrix(theta))); }
GateMatrix ry(double theta) { return GateMatrix(Matrix(ry_matrix(theta))); }
GateMatrix rz(double theta) { return GateMatrix(Matrix(rz_matrix(theta))); }

GateMatrix hadamard() {
  Matrix m(2, 2);
  const double h = 1.0 / std::sqrt(2.0);
  m << h, h, h, -h;
  return GateMatrix(std::move(m));
}

GateMatrix pauli_x() {
  Matrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return GateMatrix(std::move(m));
}

GateMatrix cnot() {
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1.0;
  return GateMatrix(std::move(m));
}

namespace detail {

void check_targets(int num_qubits, const std::vector<int>& targets) {
  for (std::size_t a = 0; a < targets.size(); ++a) {
    if (targets[a] < 0 || targets[a] >= num_qubits) {
      throw InputError("qubit index " + std::to_string(targets[a]) +
                       " out of range for " + std::to_string(num_qubits) +
                       " qubits");
    }
    for (std::size_t b = 0; b < a; ++b) {
      if (targets[a] == targets[b]) {
        throw InputError("duplicate qubit index " + std::to_string(targets[a]));
      }
    }
  }
}

Matrix partial_trace_matrix(const Matrix& rho, int num_qubits,
                            const std::vector<int>& keep) {
  if (keep.empty()) throw InputError("partial trace needs a nonempty keep list");
  check_targets(num_qubits, keep);
  const auto keep_off = subset_offsets(num_qubits, keep);
  const auto rest_off = subset_offsets(num_qubits, complement(num_qubits, keep));
  const auto dk = static_cast<Eigen::Index>(keep_off.size());
  Matrix out = Matrix::Zero(dk, dk);
  for (Eigen::Index b = 0; b < dk; ++b) {
    for (Eigen::Index a = 0; a < dk; ++a) {
      Complex acc = 0.0;
      for (std::size_t r : rest_off) {
        acc += rho(static_cast<Eigen::Index>(keep_off[a] | r),
                   static_cast<Eigen::Index>(keep_off[b] | r));
      }
      out(a, b) = acc;
    }
  }
  return out;
}

Matrix partial_trace_vector(const Vector& psi, int num_qubits,
                            const std::vector<int>& keep) {
  if (keep.empty()) throw InputError("partial trace needs a nonempty keep list");
  check_targets(num_qubits, keep);
  const auto keep_off = subset_offsets(num_qubits, keep);
  const auto rest_off = subset_offsets(num_qubits, complement(num_qubits, keep));
  const auto dk = static_cast<Eigen::Index>(keep_off.size());
  Matrix out = Matrix::Zero(dk, dk);
  for (std::size_t r : rest_off) {
    for (Eigen::Index b = 0; b < dk; ++b) {
      const Complex cb = std::conj(psi(static_cast<Eigen::Index>(keep_off[b] | r)));
      for (Eigen::Index a = 0; a < dk; ++a) {
        out(a, b) += psi(static_cast<Eigen::Index>(keep_off[a] | r)) * cb;
      }
    }
  }
  return out;
}

}  // namespace detail

PureState::PureState(int num_qubits) : num_qubits_(num_qubits) {
  check_qubit_count(num_qubits);
  amps_ = Vector::Zero(Eigen::Index{1} << num_qubits);
  amps_(0) = 1.0;
}

PureState::PureState(int num_qubits, Vector amplitudes)
    : num_qubits_(num_qubits), amps_(std::move(amplitudes)) {}

PureState PureState::from_amplitudes(Vector amplitudes) {
  const int n = log2_dim(amplitudes.size());
  check_qubit_count(n);
  if (!amplitudes.allFinite() ||
      std::abs(amplitudes.squaredNorm() - 1.0) > 1e-10) {
    throw InputError("statevector must be finite with unit norm");
  }
  return PureState(n, std::move(amplitudes));
}

void PureState::apply(const GateMatrix& gate, const std::vector<int>& targets) {
  if (static_cast<int>(targets.size()) != gate.arity()) {
    throw InputError("gate arity does not match target count");
  }
  detail::check_targets(num_qubits_, targets);
  dispatch_gate(
      gate, targets,
      [&](const Mat2& u, int q) {
        kernels::left_1q(amps_.data(), 1, num_qubits_, q, u);
      },
      [&](const Mat4& u, int a, int b) {
        kernels::left_2q(amps_.data(), 1, num_qubits_, a, b, u);
      },
      [&](int c, int t) { kernels::left_cnot(amps_.data(), 1, num_qubits_, c, t); });
}

void PureState::apply(const Mat2& u, int qubit) {
  detail::check_targets(num_qubits_, {qubit});
  kernels::left_1q(amps_.data(), 1, num_qubits_, qubit, u);
}

MixedState::MixedState(int num_qubits) : num_qubits_(num_qubits) {
  check_qubit_count(num_qubits);
  const Eigen::Index dim = Eigen::Index{1} << num_qubits;
  rho_ = Matrix::Zero(dim, dim);
  rho_(0, 0) = 1.0;
}

MixedState::MixedState(const PureState& pure)
    : num_qubits_(pure.num_qubits()),
      rho_(pure.amplitudes() * pure.amplitudes().adjoint()) {}

MixedState::MixedState(int num_qubits, Matrix rho)
    : num_qubits_(num_qubits), rho_(std::move(rho)) {}

MixedState MixedState::from_matrix(Matrix rho) {
  if (rho.rows() != rho.cols()) throw InputError("density matrix must be square");
  const int n = log2_dim(rho.rows());
  check_qubit_count(n);
  MixedState state(n, std::move(rho));
  state.validate();
  return state;
}

MixedState MixedState::adopt(int num_qubits, Matrix rho) {
  check_qubit_count(num_qubits);
  if (rho.rows() != (Eigen::Index{1} << num_qubits) || rho.cols() != rho.rows()) {
    throw InputError("density matrix dimension does not match qubit count");
  }
  return MixedState(num_qubits, std::move(rho));
}

void MixedState::apply(const GateMatrix& gate, const std::vector<int>& targets) {
  if (static_cast<int>(targets.size()) != gate.arity()) {
    throw InputError("gate arity does not match target count");
  }
  detail::check_targets(num_qubits_, targets);
  dispatch_gate(
      gate, targets,
      [&](const Mat2& u, int q) { kernels::conjugate_1q(rho_, num_qubits_, q, u); },
      [&](const Mat4& u, int a, int b) {
        kernels::conjugate_2q(rho_, num_qubits_, a, b, u);
      },
      [&](int c, int t) { kernels::conjugate_cnot(rho_, num_qubits_, c, t); });
}

void MixedState::apply(const Mat2& u, int qubit) {
  detail::check_targets(num_qubits_, {qubit});
  kernels::conjugate_1q(rho_, num_qubits_, qubit, u);
}

double MixedState::purity() const {
  // trace(rho^2) = sum |rho_ij|^2 for Hermitian rho.
  return rho_.cwiseAbs2().sum();
}

void MixedState::validate(double tol) const {
  if (!rho_.allFinite()) throw NumericalError("density matrix is not finite");
  const Complex tr = rho_.trace();
  if (std::abs(tr - Complex{1.0}) > tol) {
    throw NumericalError("density matrix trace " + std::to_string(tr.real()) +
                         " differs from 1");
  }
  if ((rho_ - rho_.adjoint()).cwiseAbs().maxCoeff() > tol) {
    throw NumericalError("density matrix is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> eig(rho_, Eigen::EigenvaluesOnly);
  if (eig.eigenvalues().minCoeff() < -1e-9) {
    throw NumericalError("density matrix has a negative eigenvalue");
  }
}

PureState apply_gate(PureState state, const GateMatrix& gate,
                     const std::vector<int>& targets) {
  state.apply(gate, targets);
  return state;
}

MixedState apply_gate(MixedState state, const GateMatrix& gate,
                      const std::vector<int>& targets) {
  state.apply(gate, targets);
  return state;
}

MixedState partial_trace(const PureState& state, const std::vector<int>& keep) {
  Matrix rho = detail::partial_trace_vector(state.amplitudes(),
                                            state.num_qubits(), keep);
  return MixedState::adopt(static_cast<int>(keep.size()), std::move(rho));
}

MixedState partial_trace(const MixedState& state, const std::vector<int>& keep) {
  Matrix rho = detail::partial_trace_matrix(state.rho(), state.num_qubits(), keep);
  return MixedState::adopt(static_cast<int>(keep.size()), std::move(rho));
}

MixedState tensor(const std::vector<MixedState>& states) {
  if (states.empty()) throw InputError("tensor product of an empty list");
  Matrix acc = states.front().rho();
  int n = states.front().num_qubits();
  for (std::size_t k = 1; k < states.size(); ++k) {
    const Matrix& b = states[k].rho();
    n += states[k].num_qubits();
    check_qubit_count(n);
    Matrix out(acc.rows() * b.rows(), acc.cols() * b.cols());
    for (Eigen::Index i = 0; i < acc.rows(); ++i) {
      for (Eigen::Index j = 0; j < acc.cols(); ++j) {
        out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = acc(i, j) * b;
      }
    }
    acc = std::move(out);
  }
  return MixedState::adopt(n, std::move(acc));
}

double expect_z(const PureState& state, int qubit) {
  detail::check_targets(state.num_qubits(), {qubit});
  const std::size_t mask = kernels::qubit_mask(state.num_qubits(), qubit);
  double acc = 0.0;
  for (std::size_t i = 0; i < state.dim(); ++i) {
    const double p = std::norm(state.amplitudes()(static_cast<Eigen::Index>(i)));
    acc += (i & mask) ? -p : p;
  }
  return std::clamp(acc, -1.0, 1.0);
}

double expect_z(const MixedState& state, int qubit) {
  detail::check_targets(state.num_qubits(), {qubit});
  const std::size_t mask = kernels::qubit_mask(state.num_qubits(), qubit);
  Complex acc = 0.0;
  for (std::size_t i = 0; i < state.dim(); ++i) {
    const auto k = static_cast<Eigen::Index>(i);
    acc += (i & mask) ? -state.rho()(k, k) : state.rho()(k, k);
  }
  if (std::abs(acc.imag()) > 1e-10) {
    throw NumericalError("<Z> has a non-negligible imaginary part");
  }
  return std::clamp(acc.real(), -1.0, 1.0);
}

}  // namespace qsam
