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

#include "qsam/core/kernels.hpp"

#include <algorithm>
#include <utility>

namespace qsam::kernels {

void left_1q(Complex* data, std::size_t cols, int num_qubits, int qubit,
             const Mat2& u) {
  const std::size_t dim = std::size_t{1} << num_qubits;
  const std::size_t mask = qubit_mask(num_qubits, qubit);
  const Complex u00 = u(0, 0), u01 = u(0, 1), u10 = u(1, 0), u11 = u(1, 1);
  for (std::size_t c = 0; c < cols; ++c) {
    Complex* col = data + c * dim;
    for (std::size_t hi = 0; hi < dim; hi += 2 * mask) {
      for (std::size_t lo = 0; lo < mask; ++lo) {
        const std::size_t i0 = hi + lo;
        const std::size_t i1 = i0 + mask;
        const Complex a = col[i0];
        const Complex b = col[i1];
        col[i0] = u00 * a + u01 * b;
        col[i1] = u10 * a + u11 * b;
      }
    }
  }
}

void right_1q_adjoint(Complex* data, int num_qubits, int qubit, const Mat2& u) {
  const std::size_t dim = std::size_t{1} << num_qubits;
  const std::size_t mask = qubit_mask(num_qubits, qubit);
  const Complex c00 = std::conj(u(0, 0)), c01 = std::conj(u(0, 1));
  const Complex c10 = std::conj(u(1, 0)), c11 = std::conj(u(1, 1));
  for (std::size_t hi = 0; hi < dim; hi += 2 * mask) {
    for (std::size_t lo = 0; lo < mask; ++lo) {
      Complex* col0 = data + (hi + lo) * dim;
      Complex* col1 = data + (hi + lo + mask) * dim;
      for (std::size_t r = 0; r < dim; ++r) {
        const Complex a = col0[r];
        const Complex b = col1[r];
        col0[r] = a * c00 + b * c01;
        col1[r] = a * c10 + b * c11;
      }
    }
  }
}

namespace {

// Enumerates base indices with both target bits clear.
template <typename F>
void for_each_pair_base(std::size_t dim, std::size_t ma, std::size_t mb, F&& f) {
  for (std::size_t i = 0; i < dim; ++i) {
    if ((i & ma) || (i & mb)) continue;
    f(i);
  }
}

}  // namespace

void left_2q(Complex* data, std::size_t cols, int num_qubits, int qubit_a,
             int qubit_b, const Mat4& u) {
  const std::size_t dim = std::size_t{1} << num_qubits;
  const std::size_t ma = qubit_mask(num_qubits, qubit_a);
  const std::size_t mb = qubit_mask(num_qubits, qubit_b);
  for (std::size_t c = 0; c < cols; ++c) {
    Complex* col = data + c * dim;
    for_each_pair_base(dim, ma, mb, [&](std::size_t i) {
      const std::size_t idx[4] = {i, i | mb, i | ma, i | ma | mb};
      Complex in[4];
      for (int k = 0; k < 4; ++k) in[k] = col[idx[k]];
      for (int r = 0; r < 4; ++r) {
        Complex acc = 0.0;
        for (int k = 0; k < 4; ++k) acc += u(r, k) * in[k];
        col[idx[r]] = acc;
      }
    });
  }
}

void right_2q_adjoint(Complex* data, int num_qubits, int qubit_a, int qubit_b,
                      const Mat4& u) {
  const std::size_t dim = std::size_t{1} << num_qubits;
  const std::size_t ma = qubit_mask(num_qubits, qubit_a);
  const std::size_t mb = qubit_mask(num_qubits, qubit_b);
  const Mat4 uc = u.conjugate();
  for_each_pair_base(dim, ma, mb, [&](std::size_t i) {
    Complex* col[4] = {data + i * dim, data + (i | mb) * dim,
                       data + (i | ma) * dim, data + (i | ma | mb) * dim};
    for (std::size_t r = 0; r < dim; ++r) {
      Complex in[4];
      for (int k = 0; k < 4; ++k) in[k] = col[k][r];
      for (int c = 0; c < 4; ++c) {
        Complex acc = 0.0;
        for (int k = 0; k < 4; ++k) acc += in[k] * uc(c, k);
        col[c][r] = acc;
      }
    }
  });
}

void left_cnot(Complex* data, std::size_t cols, int num_qubits, int control,
               int target) {
  const std::size_t dim = std::size_t{1} << num_qubits;
  const std::size_t mc = qubit_mask(num_qubits, control);
  const std::size_t mt = qubit_mask(num_qubits, target);
  for (std::size_t c = 0; c < cols; ++c) {
    Complex* col = data + c * dim;
    for (std::size_t i = 0; i < dim; ++i) {
      if ((i & mc) && !(i & mt)) std::swap(col[i], col[i | mt]);
    }
  }
}

void right_cnot(Complex* data, int num_qubits, int control, int target) {
  const std::size_t dim = std::size_t{1} << num_qubits;
  const std::size_t mc = qubit_mask(num_qubits, control);
  const std::size_t mt = qubit_mask(num_qubits, target);
  for (std::size_t i = 0; i < dim; ++i) {
    if ((i & mc) && !(i & mt)) {
      std::swap_ranges(data + i * dim, data + (i + 1) * dim,
                       data + (i | mt) * dim);
    }
  }
}

void conjugate_1q(Matrix& m, int num_qubits, int qubit, const Mat2& u) {
  left_1q(m.data(), static_cast<std::size_t>(m.cols()), num_qubits, qubit, u);
  right_1q_adjoint(m.data(), num_qubits, qubit, u);
}

void conjugate_2q(Matrix& m, int num_qubits, int qubit_a, int qubit_b,
                  const Mat4& u) {
  left_2q(m.data(), static_cast<std::size_t>(m.cols()), num_qubits, qubit_a,
          qubit_b, u);
  right_2q_adjoint(m.data(), num_qubits, qubit_a, qubit_b, u);
}

void conjugate_cnot(Matrix& m, int num_qubits, int control, int target) {
  left_cnot(m.data(), static_cast<std::size_t>(m.cols()), num_qubits, control,
            target);
  right_cnot(m.data(), num_qubits, control, target);
}

}  // namespace qsam::kernels
