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

// In-place dense kernels shared by the state types and the staged evaluator.
//
// Layout: a register of n qubits indexes its 2^n basis states with qubit 0 in
// the most significant bit. Matrices are Eigen column-major, so a "left"
// kernel acts on the row index of every column and a "right" kernel acts on
// the column index.

#pragma once

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

namespace qsam {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;

namespace kernels {

// Bit mask of `qubit` inside an index over `num_qubits` qubits.
inline std::size_t qubit_mask(int num_qubits, int qubit) {
  return std::size_t{1} << (num_qubits - 1 - qubit);
}

// rows <- u (x) on the row bit of `qubit`, for `cols` contiguous columns of
// height 2^num_qubits. u need not be unitary (Kraus operators use this too).
void left_1q(Complex* data, std::size_t cols, int num_qubits, int qubit,
             const Mat2& u);

// m <- m u^dagger acting on the column bit of `qubit` (m is square).
void right_1q_adjoint(Complex* data, int num_qubits, int qubit, const Mat2& u);

// Two-qubit variants; u is indexed |a b> with a on qubit_a (MSB of the 4x4).
void left_2q(Complex* data, std::size_t cols, int num_qubits, int qubit_a,
             int qubit_b, const Mat4& u);
void right_2q_adjoint(Complex* data, int num_qubits, int qubit_a, int qubit_b,
                      const Mat4& u);

// CNOT as a row permutation; `cols` columns.
void left_cnot(Complex* data, std::size_t cols, int num_qubits, int control,
               int target);
// CNOT acting on the column index (CNOT is real and self-inverse, so this is
// both m * CNOT^dagger and m * CNOT).
void right_cnot(Complex* data, int num_qubits, int control, int target);

// Convenience wrappers for square density/observable matrices: m <- u m u^dag.
void conjugate_1q(Matrix& m, int num_qubits, int qubit, const Mat2& u);
void conjugate_2q(Matrix& m, int num_qubits, int qubit_a, int qubit_b,
                  const Mat4& u);
void conjugate_cnot(Matrix& m, int num_qubits, int control, int target);

}  // namespace kernels
}  // namespace qsam
