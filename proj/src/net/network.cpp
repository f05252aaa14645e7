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

#include "qsam/net/network.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <string>

#include "qsam/core/error.hpp"

namespace qsam::net {
namespace {

using circuit::GateKind;

constexpr double kHalfPi = std::numbers::pi / 2;

// Trace of a * b.
Complex trace_product(const Matrix& a, const Matrix& b) {
  return a.cwiseProduct(b.transpose()).sum();
}

// rot -> rot^dag, CNOT unchanged; m <- G m G^dag on a register whose qubit 0
// sits at global index `offset`.
void conjugate_op(Matrix& m, int num_qubits, const CompiledOp& op, int offset,
                  double angle) {
  if (op.kind == GateKind::CNOT) {
    kernels::conjugate_cnot(m, num_qubits, op.q0 - offset, op.q1 - offset);
  } else {
    kernels::conjugate_1q(m, num_qubits, op.q0 - offset,
                          circuit::rotation_matrix(op.kind, angle));
  }
}

// m <- G^dag m G (Heisenberg picture).
void conjugate_op_adjoint(Matrix& m, int num_qubits, const CompiledOp& op,
                          int offset, double angle) {
  if (op.kind == GateKind::CNOT) {
    kernels::conjugate_cnot(m, num_qubits, op.q0 - offset, op.q1 - offset);
  } else {
    kernels::conjugate_1q(m, num_qubits, op.q0 - offset,
                          circuit::rotation_matrix(op.kind, angle).adjoint());
  }
}

double base_angle(const CompiledOp& op, std::span<const double> values) {
  return op.slot >= 0 ? values[static_cast<std::size_t>(op.slot)] : op.angle;
}

// Shift restricted to one circuit instance: op index and delta, or op = -1.
struct LocalShift {
  int op = -1;
  double delta = 0.0;

  double angle(const CompiledOp& o, int index, std::span<const double> values) const {
    return base_angle(o, values) + (index == op ? delta : 0.0);
  }
};

LocalShift local_shift(const Shift* shift, Stage stage, int instance) {
  if (shift && shift->gate.stage == stage && shift->gate.instance == instance) {
    return {shift->gate.op, shift->delta};
  }
  return {};
}

Matrix kron(const std::vector<Matrix>& factors) {
  Matrix acc = factors.front();
  for (std::size_t k = 1; k < factors.size(); ++k) {
    const Matrix& b = factors[k];
    Matrix out(acc.rows() * b.rows(), acc.cols() * b.cols());
    for (Eigen::Index i = 0; i < acc.rows(); ++i) {
      for (Eigen::Index j = 0; j < acc.cols(); ++j) {
        out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = acc(i, j) * b;
      }
    }
    acc = std::move(out);
  }
  return acc;
}

std::vector<std::size_t> subset_offsets(int n, const std::vector<int>& qubits) {
  const std::size_t count = std::size_t{1} << qubits.size();
  const int k = static_cast<int>(qubits.size());
  std::vector<std::size_t> out(count, 0);
  for (std::size_t v = 0; v < count; ++v) {
    for (int m = 0; m < k; ++m) {
      if (v & (std::size_t{1} << (k - 1 - m))) out[v] |= kernels::qubit_mask(n, qubits[m]);
    }
  }
  return out;
}

using ShiftSink = std::function<void(int op, double plus, double minus)>;

}  // namespace

// Evaluation plan for one block acting on a product of density matrices.
class BlockPlan {
 public:
  struct Step {
    bool channel = false;
    int op = -1;  // op index for gate steps
  };

  struct Cache {
    std::vector<std::vector<Matrix>> prefix_states;  // per factor, before each prefix op
    std::vector<Matrix> factors;                     // after prefix gates
    std::vector<std::optional<Matrix>> before;  // dense path, per suffix step
  };

  BlockPlan(const CompiledCircuit& c, const std::vector<int>& factor_widths,
            bool channel_after_each_gate, int channel_qubit)
      : n_(c.num_qubits), kept_(c.kept), channel_qubit_(channel_qubit) {
    int off = 0;
    for (int w : factor_widths) {
      offset_.push_back(off);
      width_.push_back(w);
      off += w;
    }
    if (off != n_) throw InputError("factor widths do not cover the block register");
    factor_of_.resize(static_cast<std::size_t>(n_));
    for (std::size_t f = 0; f < width_.size(); ++f) {
      for (int q = 0; q < width_[f]; ++q) {
        factor_of_[static_cast<std::size_t>(offset_[f] + q)] = static_cast<int>(f);
      }
    }
    prefix_.resize(width_.size());

    std::vector<bool> touched(static_cast<std::size_t>(n_), false);
    for (std::size_t k = 0; k < c.ops.size(); ++k) {
      const CompiledOp& op = c.ops[k];
      std::vector<int> qs{op.q0};
      if (op.q1 >= 0) qs.push_back(op.q1);
      const int f = factor_of_[static_cast<std::size_t>(op.q0)];
      bool local = true;
      for (int q : qs) {
        if (factor_of_[static_cast<std::size_t>(q)] != f || touched[static_cast<std::size_t>(q)]) {
          local = false;
        }
      }
      if (local) {
        prefix_[static_cast<std::size_t>(f)].push_back(static_cast<int>(k));
      } else {
        suffix_.push_back({false, static_cast<int>(k)});
        for (int q : qs) touched[static_cast<std::size_t>(q)] = true;
      }
      if (channel_after_each_gate) {
        suffix_.push_back({true, -1});
        touched[static_cast<std::size_t>(channel_qubit)] = true;
      }
    }

    permutation_ = std::all_of(suffix_.begin(), suffix_.end(), [&](const Step& s) {
      return !s.channel && c.ops[static_cast<std::size_t>(s.op)].kind == GateKind::CNOT;
    });
    const std::size_t dim = std::size_t{1} << n_;
    if (permutation_) {
      inverse_.resize(dim);
      for (std::size_t x = 0; x < dim; ++x) {
        std::size_t y = x;
        for (const Step& s : suffix_) {
          const CompiledOp& op = c.ops[static_cast<std::size_t>(s.op)];
          if (y & kernels::qubit_mask(n_, op.q0)) y ^= kernels::qubit_mask(n_, op.q1);
        }
        inverse_[y] = static_cast<std::uint32_t>(x);
      }
    }
    keep_off_ = subset_offsets(n_, kept_);
    std::vector<int> rest;
    for (int q = 0; q < n_; ++q) {
      if (std::find(kept_.begin(), kept_.end(), q) == kept_.end()) rest.push_back(q);
    }
    rest_off_ = subset_offsets(n_, rest);
  }

  bool is_permutation() const { return permutation_; }
  std::size_t num_factors() const { return width_.size(); }

  Matrix forward(const CompiledCircuit& c, std::vector<Matrix> inputs,
                 std::span<const double> values, LocalShift shift,
                 const NoiseChannel* channel, Cache* cache) const {
    if (inputs.size() != width_.size()) throw InputError("wrong number of block inputs");
    std::vector<Matrix> factors = std::move(inputs);
    if (cache) cache->prefix_states.assign(factors.size(), {});
    for (std::size_t f = 0; f < factors.size(); ++f) {
      for (int k : prefix_[f]) {
        const auto& op = c.ops[static_cast<std::size_t>(k)];
        if (cache) cache->prefix_states[f].push_back(factors[f]);
        conjugate_op(factors[f], width_[f], op, offset_[f], shift.angle(op, k, values));
      }
    }
    Matrix out;
    if (permutation_) {
      out = gather(factors);
      if (cache) cache->before.clear();
    } else {
      Matrix rho = kron(factors);
      if (cache) cache->before.assign(suffix_.size(), std::nullopt);
      for (std::size_t s = 0; s < suffix_.size(); ++s) {
        const Step& step = suffix_[s];
        if (step.channel) {
          if (!channel) throw InputError("block plan expects a noise channel");
          apply_channel_inplace(rho, n_, *channel, channel_qubit_);
          continue;
        }
        const auto& op = c.ops[static_cast<std::size_t>(step.op)];
        if (cache && op.slot >= 0) cache->before[s] = rho;
        conjugate_op(rho, n_, op, 0, shift.angle(op, step.op, values));
      }
      out = detail::partial_trace_matrix(rho, n_, kept_);
    }
    if (cache) cache->factors = std::move(factors);
    return out;
  }

  // Reports the parameter-shift pair of every trainable op in the block for
  // the linear functional rho_out -> tr(observable rho_out), and returns the
  // effective observable of each input factor.
  std::vector<Matrix> backward(const CompiledCircuit& c, const Cache& cache,
                               const Matrix& observable,
                               std::span<const double> values,
                               const NoiseChannel* channel,
                               const ShiftSink& sink) const {
    std::vector<Matrix> eff;
    if (permutation_) {
      eff = scatter_permutation(cache.factors, observable);
    } else {
      eff = backward_dense(c, cache, observable, values, channel, sink);
    }
    // Sweep each factor's prefix backwards; eff[f] is the factor observable
    // after the op being visited.
    for (std::size_t f = 0; f < eff.size(); ++f) {
      const auto& ops = prefix_[f];
      for (std::size_t p = ops.size(); p-- > 0;) {
        const auto& op = c.ops[static_cast<std::size_t>(ops[p])];
        const double angle = base_angle(op, values);
        if (op.slot >= 0) {
          double fs[2];
          for (int sgn = 0; sgn < 2; ++sgn) {
            Matrix m = cache.prefix_states[f][p];
            conjugate_op(m, width_[f], op, offset_[f], angle + (sgn == 0 ? kHalfPi : -kHalfPi));
            fs[sgn] = trace_product(eff[f], m).real();
          }
          sink(ops[p], fs[0], fs[1]);
        }
        conjugate_op_adjoint(eff[f], width_[f], op, offset_[f], angle);
      }
    }
    return eff;
  }

 private:
  std::size_t digit(std::size_t index, std::size_t f) const {
    const int shift = n_ - offset_[f] - width_[f];
    return (index >> shift) & ((std::size_t{1} << width_[f]) - 1);
  }

  Matrix gather(const std::vector<Matrix>& factors) const {
    const auto kd = static_cast<Eigen::Index>(keep_off_.size());
    Matrix out(kd, kd);
    for (Eigen::Index b = 0; b < kd; ++b) {
      for (Eigen::Index a = 0; a < kd; ++a) {
        Complex acc = 0.0;
        for (std::size_t r : rest_off_) {
          const std::size_t A = inverse_[keep_off_[static_cast<std::size_t>(a)] | r];
          const std::size_t B = inverse_[keep_off_[static_cast<std::size_t>(b)] | r];
          Complex prod = 1.0;
          for (std::size_t f = 0; f < factors.size(); ++f) {
            prod *= factors[f](static_cast<Eigen::Index>(digit(A, f)),
                               static_cast<Eigen::Index>(digit(B, f)));
          }
          acc += prod;
        }
        out(a, b) = acc;
      }
    }
    return out;
  }

  // Adds h * prod_{k != f} factor_k(B_k, A_k) into eff_f(A_f, B_f) for all f.
  void accumulate(std::vector<Matrix>& eff, const std::vector<Matrix>& factors,
                  std::size_t A, std::size_t B, Complex h) const {
    const std::size_t nf = factors.size();
    Complex vals[16];
    for (std::size_t f = 0; f < nf; ++f) {
      vals[f] = factors[f](static_cast<Eigen::Index>(digit(B, f)),
                           static_cast<Eigen::Index>(digit(A, f)));
    }
    for (std::size_t f = 0; f < nf; ++f) {
      Complex prod = h;
      for (std::size_t k = 0; k < nf; ++k) {
        if (k != f) prod *= vals[k];
      }
      eff[f](static_cast<Eigen::Index>(digit(A, f)),
             static_cast<Eigen::Index>(digit(B, f))) += prod;
    }
  }

  std::vector<Matrix> zero_effective() const {
    std::vector<Matrix> eff;
    for (int w : width_) {
      const Eigen::Index d = Eigen::Index{1} << w;
      eff.push_back(Matrix::Zero(d, d));
    }
    return eff;
  }

  std::vector<Matrix> scatter_permutation(const std::vector<Matrix>& factors,
                                          const Matrix& observable) const {
    std::vector<Matrix> eff = zero_effective();
    const auto kd = static_cast<Eigen::Index>(keep_off_.size());
    for (std::size_t r : rest_off_) {
      for (Eigen::Index b = 0; b < kd; ++b) {
        for (Eigen::Index a = 0; a < kd; ++a) {
          const Complex h = observable(a, b);
          if (h == Complex{0.0}) continue;
          const std::size_t A = inverse_[keep_off_[static_cast<std::size_t>(a)] | r];
          const std::size_t B = inverse_[keep_off_[static_cast<std::size_t>(b)] | r];
          accumulate(eff, factors, A, B, h);
        }
      }
    }
    return eff;
  }

  std::vector<Matrix> backward_dense(const CompiledCircuit& c, const Cache& cache,
                                     const Matrix& observable,
                                     std::span<const double> values,
                                     const NoiseChannel* channel,
                                     const ShiftSink& sink) const {
    const Eigen::Index dim = Eigen::Index{1} << n_;
    Matrix h = Matrix::Zero(dim, dim);
    const auto kd = static_cast<Eigen::Index>(keep_off_.size());
    for (std::size_t r : rest_off_) {
      for (Eigen::Index b = 0; b < kd; ++b) {
        for (Eigen::Index a = 0; a < kd; ++a) {
          h(static_cast<Eigen::Index>(keep_off_[static_cast<std::size_t>(a)] | r),
            static_cast<Eigen::Index>(keep_off_[static_cast<std::size_t>(b)] | r)) =
              observable(a, b);
        }
      }
    }
    for (std::size_t s = suffix_.size(); s-- > 0;) {
      const Step& step = suffix_[s];
      if (step.channel) {
        apply_channel_adjoint_inplace(h, n_, *channel, channel_qubit_);
        continue;
      }
      const auto& op = c.ops[static_cast<std::size_t>(step.op)];
      const double angle = base_angle(op, values);
      if (op.slot >= 0) {
        double fs[2];
        for (int sgn = 0; sgn < 2; ++sgn) {
          Matrix m = *cache.before[s];
          conjugate_op(m, n_, op, 0, angle + (sgn == 0 ? kHalfPi : -kHalfPi));
          fs[sgn] = trace_product(h, m).real();
        }
        sink(step.op, fs[0], fs[1]);
      }
      conjugate_op_adjoint(h, n_, op, 0, angle);
    }
    std::vector<Matrix> eff = zero_effective();
    for (Eigen::Index B = 0; B < dim; ++B) {
      for (Eigen::Index A = 0; A < dim; ++A) {
        const Complex v = h(A, B);
        if (v == Complex{0.0}) continue;
        accumulate(eff, cache.factors, static_cast<std::size_t>(A),
                   static_cast<std::size_t>(B), v);
      }
    }
    return eff;
  }

  int n_;
  std::vector<int> kept_;
  int channel_qubit_;
  std::vector<int> offset_, width_, factor_of_;
  std::vector<std::vector<int>> prefix_;
  std::vector<Step> suffix_;
  bool permutation_ = false;
  std::vector<std::uint32_t> inverse_;
  std::vector<std::size_t> keep_off_, rest_off_;
};

CompiledCircuit compile(const circuit::BlockCircuit& block,
                        const circuit::ParamStore& layout) {
  block.validate();
  CompiledCircuit c;
  c.num_qubits = block.num_qubits;
  c.kept = block.kept;
  for (const auto& op : block.ops) {
    CompiledOp o;
    o.kind = op.kind;
    o.q0 = op.targets[0];
    if (op.kind == GateKind::CNOT) o.q1 = op.targets[1];
    if (op.param) {
      o.slot = static_cast<int>(layout.slot(*op.param));
    } else {
      o.angle = op.angle;
    }
    c.ops.push_back(o);
  }
  return c;
}

Network::Network(Topology topology, const circuit::ParamStore& layout)
    : topology_(std::move(topology)), layout_(layout), num_params_(layout.size()) {
  check_parameters(topology_, layout_);
  u2_ = net::compile(topology_.u2, layout_);
  u3_ = net::compile(topology_.u3, layout_);
  if (u3_.kept.size() != 1 || u3_.kept.front() != topology_.measured_qubit) {
    throw InputError("U3 must keep exactly the measured qubit");
  }
  const std::vector<int> pairs(static_cast<std::size_t>(topology_.positions), 2);
  u2_plan_ = std::make_shared<BlockPlan>(u2_, pairs, false, 0);
  u3_plan_ = std::make_shared<BlockPlan>(u3_, pairs, false, 0);
  u3_noisy_plan_ = std::make_shared<BlockPlan>(u3_, pairs, true, topology_.measured_qubit);
}

Network::~Network() = default;
Network::Network(const Network&) = default;
Network& Network::operator=(const Network&) = default;
Network::Network(Network&&) noexcept = default;
Network& Network::operator=(Network&&) noexcept = default;

CompiledSample Network::compile(const Sample& sample) const {
  check_sample(topology_, sample);
  CompiledSample out;
  out.label = sample.label;
  const std::vector<int> widths(static_cast<std::size_t>(topology_.encoders_per_unit),
                                topology_.encoder_width);
  for (int i = 0; i < topology_.positions; ++i) {
    for (int j = 0; j < topology_.positions; ++j) {
      out.units.push_back(net::compile(unit_circuit(topology_, sample, i, j), layout_));
      out.plans.push_back(std::make_shared<BlockPlan>(out.units.back(), widths, false, 0));
    }
  }
  return out;
}

void Network::check_values(std::span<const double> values) const {
  if (values.size() != num_params_) {
    throw InputError("parameter vector has " + std::to_string(values.size()) +
                     " entries, network expects " + std::to_string(num_params_));
  }
}

std::vector<Matrix> Network::unit_inputs() const {
  const Eigen::Index d = Eigen::Index{1} << topology_.encoder_width;
  Matrix zero = Matrix::Zero(d, d);
  zero(0, 0) = 1.0;
  return std::vector<Matrix>(static_cast<std::size_t>(topology_.encoders_per_unit), zero);
}

const BlockPlan& Network::final_plan(const NoiseModel* noise) const {
  if (noise && noise->placement == NoisePlacement::PerGate) return *u3_noisy_plan_;
  return *u3_plan_;
}

namespace {

double z_of(const Matrix& out) {
  const Complex z = out(0, 0) - out(1, 1);
  if (!std::isfinite(z.real())) throw NumericalError("<Z> is not finite");
  return std::clamp(z.real(), -1.0, 1.0);
}

Matrix pauli_z() {
  Matrix z = Matrix::Zero(2, 2);
  z(0, 0) = 1.0;
  z(1, 1) = -1.0;
  return z;
}

}  // namespace

double Network::expect_z(const CompiledSample& sample, std::span<const double> values,
                         const NoiseModel* noise, const Shift* shift) const {
  check_values(values);
  const int n = topology_.positions;
  std::vector<Matrix> unit_out;
  for (std::size_t u = 0; u < sample.units.size(); ++u) {
    unit_out.push_back(sample.plans[u]->forward(
        sample.units[u], unit_inputs(), values,
        local_shift(shift, Stage::Unit, static_cast<int>(u)), nullptr, nullptr));
  }
  std::vector<Matrix> rows;
  for (int i = 0; i < n; ++i) {
    std::vector<Matrix> in(unit_out.begin() + i * n, unit_out.begin() + (i + 1) * n);
    rows.push_back(u2_plan_->forward(u2_, std::move(in), values,
                                     local_shift(shift, Stage::Row, i), nullptr, nullptr));
  }
  const NoiseChannel* channel = noise ? &noise->channel : nullptr;
  Matrix out = final_plan(noise).forward(u3_, std::move(rows), values,
                                         local_shift(shift, Stage::Final, 0), channel,
                                         nullptr);
  if (noise && noise->placement == NoisePlacement::PreMeasurement) {
    apply_channel_inplace(out, 1, noise->channel, 0);
  }
  return z_of(out);
}

double Network::expect_z_gradient(const CompiledSample& sample,
                                  std::span<const double> values,
                                  const NoiseModel* noise, double weight,
                                  std::span<double> grad) const {
  check_values(values);
  if (grad.size() != num_params_) throw InputError("gradient buffer has the wrong size");
  const int n = topology_.positions;
  const NoiseChannel* channel = noise ? &noise->channel : nullptr;

  std::vector<BlockPlan::Cache> unit_cache(sample.units.size());
  std::vector<Matrix> unit_out;
  for (std::size_t u = 0; u < sample.units.size(); ++u) {
    unit_out.push_back(sample.plans[u]->forward(sample.units[u], unit_inputs(), values, {},
                                                nullptr, &unit_cache[u]));
  }
  std::vector<BlockPlan::Cache> row_cache(static_cast<std::size_t>(n));
  std::vector<Matrix> rows;
  for (int i = 0; i < n; ++i) {
    std::vector<Matrix> in(unit_out.begin() + i * n, unit_out.begin() + (i + 1) * n);
    rows.push_back(u2_plan_->forward(u2_, std::move(in), values, {}, nullptr,
                                     &row_cache[static_cast<std::size_t>(i)]));
  }
  BlockPlan::Cache final_cache;
  const BlockPlan& fplan = final_plan(noise);
  Matrix out = fplan.forward(u3_, rows, values, {}, channel, &final_cache);
  Matrix observable = pauli_z();
  if (noise && noise->placement == NoisePlacement::PreMeasurement) {
    apply_channel_inplace(out, 1, noise->channel, 0);
    apply_channel_adjoint_inplace(observable, 1, noise->channel, 0);
  }
  const double z = z_of(out);

  auto sink_for = [&](const CompiledCircuit& c) {
    return [&grad, &c, weight](int op, double plus, double minus) {
      grad[static_cast<std::size_t>(c.ops[static_cast<std::size_t>(op)].slot)] +=
          weight * 0.5 * (plus - minus);
    };
  };

  const std::vector<Matrix> row_obs =
      fplan.backward(u3_, final_cache, observable, values, channel, sink_for(u3_));
  for (int i = 0; i < n; ++i) {
    const std::vector<Matrix> unit_obs =
        u2_plan_->backward(u2_, row_cache[static_cast<std::size_t>(i)],
                           row_obs[static_cast<std::size_t>(i)], values, nullptr,
                           sink_for(u2_));
    for (int j = 0; j < n; ++j) {
      const std::size_t u = topology_.unit_index(i, j);
      const CompiledCircuit& c = sample.units[u];
      sample.plans[u]->backward(c, unit_cache[u], unit_obs[static_cast<std::size_t>(j)], values,
                                nullptr, sink_for(c));
    }
  }
  return z;
}

std::vector<GateRef> Network::occurrences(const CompiledSample& sample,
                                          std::size_t slot) const {
  std::vector<GateRef> out;
  auto scan = [&](const CompiledCircuit& c, Stage stage, int instance) {
    for (std::size_t k = 0; k < c.ops.size(); ++k) {
      if (c.ops[k].slot == static_cast<int>(slot)) {
        out.push_back({stage, instance, static_cast<int>(k)});
      }
    }
  };
  for (std::size_t u = 0; u < sample.units.size(); ++u) {
    scan(sample.units[u], Stage::Unit, static_cast<int>(u));
  }
  for (int i = 0; i < topology_.positions; ++i) scan(u2_, Stage::Row, i);
  scan(u3_, Stage::Final, 0);
  return out;
}

const CompiledOp& Network::op_at(const CompiledSample& sample, const GateRef& ref) const {
  const CompiledCircuit* c = nullptr;
  switch (ref.stage) {
    case Stage::Unit:
      c = &sample.units.at(static_cast<std::size_t>(ref.instance));
      break;
    case Stage::Row:
      c = &u2_;
      break;
    case Stage::Final:
      c = &u3_;
      break;
  }
  return c->ops.at(static_cast<std::size_t>(ref.op));
}

}  // namespace qsam::net
