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

// Dense pure and mixed qubit states and the gate/trace/measurement operations
// on them. Qubit 0 is the most significant bit of a basis index.

#pragma once

#include <vector>

#include "qsam/core/kernels.hpp"

namespace qsam {

inline constexpr int kMaxDenseQubits = 12;

// One- or two-qubit unitary.
class GateMatrix {
 public:
  // Throws InputError unless `matrix` is 2x2 or 4x4 and U^dag U = I within
  // 1e-12.
  explicit GateMatrix(Matrix matrix);

  int arity() const { return arity_; }
  const Matrix& matrix() const { return matrix_; }
  // True when the gate only permutes basis states (CNOT, X, ...).
  bool is_permutation() const { return permutation_; }

 private:
  int arity_;
  Matrix matrix_;
  bool permutation_;
};

GateMatrix rx(double theta);
GateMatrix ry(double theta);
GateMatrix rz(double theta);
GateMatrix hadamard();
GateMatrix pauli_x();
GateMatrix cnot();

// Raw 2x2 rotation matrices for hot loops (no validation beyond finiteness).
Mat2 rx_matrix(double theta);
Mat2 ry_matrix(double theta);
Mat2 rz_matrix(double theta);

class PureState {
 public:
  // |0...0> on `num_qubits` qubits.
  explicit PureState(int num_qubits);
  // Throws InputError unless the length is a power of two and the norm is 1
  // within 1e-10.
  static PureState from_amplitudes(Vector amplitudes);

  int num_qubits() const { return num_qubits_; }
  std::size_t dim() const { return static_cast<std::size_t>(amps_.size()); }
  const Vector& amplitudes() const { return amps_; }

  void apply(const GateMatrix& gate, const std::vector<int>& targets);
  void apply(const Mat2& u, int qubit);

 private:
  PureState(int num_qubits, Vector amplitudes);

  int num_qubits_;
  Vector amps_;
};

class MixedState {
 public:
  // |0...0><0...0| on `num_qubits` qubits.
  explicit MixedState(int num_qubits);
  explicit MixedState(const PureState& pure);
  // Runs validate() on the matrix first.
  static MixedState from_matrix(Matrix rho);
  // Adopts `rho` without validation; for callers that construct states from
  // already-valid ones (partial traces, tensor products, channel outputs).
  static MixedState adopt(int num_qubits, Matrix rho);

  int num_qubits() const { return num_qubits_; }
  std::size_t dim() const { return static_cast<std::size_t>(rho_.rows()); }
  const Matrix& rho() const { return rho_; }

  void apply(const GateMatrix& gate, const std::vector<int>& targets);
  void apply(const Mat2& u, int qubit);

  double purity() const;
  // Throws NumericalError unless trace(rho) = 1 and rho = rho^dag within
  // `tol`, and every eigenvalue is >= -1e-9.
  void validate(double tol = 1e-10) const;

 private:
  MixedState(int num_qubits, Matrix rho);

  int num_qubits_;
  Matrix rho_;
};

// psi -> U psi, rho -> U rho U^dag on `targets` (listed in gate order).
PureState apply_gate(PureState state, const GateMatrix& gate,
                     const std::vector<int>& targets);
MixedState apply_gate(MixedState state, const GateMatrix& gate,
                      const std::vector<int>& targets);

// Reduced state on `keep`, whose listed order becomes the qubit order of the
// result.
MixedState partial_trace(const PureState& state, const std::vector<int>& keep);
MixedState partial_trace(const MixedState& state, const std::vector<int>& keep);

// Kronecker product in list order; the first state owns the leading qubits.
MixedState tensor(const std::vector<MixedState>& states);

// <Z> on `qubit`, clamped to [-1, 1].
double expect_z(const PureState& state, int qubit);
double expect_z(const MixedState& state, int qubit);

namespace detail {

// Validates an index list against a register size; throws InputError.
void check_targets(int num_qubits, const std::vector<int>& targets);

// Reduced density matrix of a column-major square matrix.
Matrix partial_trace_matrix(const Matrix& rho, int num_qubits,
                            const std::vector<int>& keep);
// Reduced density matrix of a statevector.
Matrix partial_trace_vector(const Vector& psi, int num_qubits,
                            const std::vector<int>& keep);

}  // namespace detail
}  // namespace qsam
