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


#include "qsam/learn/train.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <ostream>
#include <random>
#include <string>

#include "qsam/core/error.hpp"
#include "qsam/core/format.hpp"
#include "qsam/net/forward.hpp"

namespace qsam::learn {

void TrainConfig::validate() const {
  optimizer.validate();
  if (epochs < 0) throw InputError("epochs must be non-negative");
  if (gradient.mode == GradientMode::FiniteDifference && !(gradient.fd_step > 0.0)) {
    throw InputError("finite-difference step must be positive");
  }
}

int default_epochs(net::DatasetKind dataset) {
  return dataset == net::DatasetKind::Iris ? 100 : 200;
}

void initialize_parameters(circuit::ParamStore& store, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ansatz(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> embedding(-0.1, 0.1);
  auto values = store.values();
  for (std::size_t k = 0; k < values.size(); ++k) {
    values[k] = store.ids()[k].is_embedding() ? embedding(rng) : ansatz(rng);
  }
}

double accuracy(const std::vector<double>& p1, const std::vector<net::CompiledSample>& samples) {
  if (samples.empty()) return 0.0;
  std::size_t hits = 0;
  for (std::size_t k = 0; k < samples.size(); ++k) {
    if (net::classify(p1[k]) == samples[k].label) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(samples.size());
}

namespace {

void check_finite(double loss, int epoch, const char* split) {
  if (!std::isfinite(loss)) {
    throw NumericalError(std::string(split) + " loss became non-finite at epoch " +
                         std::to_string(epoch) + "; lower the learning rate");
  }
}

std::vector<net::CompiledSample> compile_all(const net::Network& network,
                                             const std::vector<net::Sample>& samples) {
  std::vector<net::CompiledSample> out;
  out.reserve(samples.size());
  for (const auto& s : samples) out.push_back(network.compile(s));
  return out;
}

void step(std::vector<double>& values, const std::vector<double>& grad, AdamState& adam,
          const OptimizerConfig& config) {
  if (config.kind == OptimizerKind::Adam) {
    adam_step(values, grad, adam, config);
  } else {
    gd_step(values, grad, config.learning_rate);
  }
}

}  // namespace

TrainResult train(const net::Topology& topology, const std::vector<net::Sample>& train_set,
                  const std::vector<net::Sample>& dev_set, const TrainConfig& config) {
  config.validate();
  if (train_set.empty()) throw InputError("training split is empty");

  circuit::ParamStore store;
  net::register_parameters(topology, store);
  initialize_parameters(store, config.seed);
  const net::Network network(topology, store);
  const auto train_samples = compile_all(network, train_set);
  const auto dev_samples = compile_all(network, dev_set);

  std::vector<double> values(store.values().begin(), store.values().end());
  AdamState adam(values.size());
  const bool full_batch =
      config.batch_size == 0 || config.batch_size >= train_samples.size();
  std::mt19937_64 batch_rng(config.seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<std::size_t> order(train_samples.size());
  std::iota(order.begin(), order.end(), 0);

  TrainResult result;
  std::vector<double> best_values = values;
  std::optional<std::pair<double, double>> best;  // (dev accuracy, dev loss)

  for (int epoch = 0; epoch <= config.epochs; ++epoch) {
    const bool fused = full_batch && epoch < config.epochs;
    BatchEvaluation eval =
        evaluate_batch(network, train_samples, values, nullptr, fused, config.gradient);
    check_finite(eval.loss.total, epoch, "training");

    EpochRecord rec;
    rec.epoch = epoch;
    rec.train_loss = eval.loss.total;
    rec.train_accuracy = accuracy(eval.p1, train_samples);
    if (!dev_samples.empty()) {
      const BatchEvaluation dev = evaluate_batch(network, dev_samples, values, nullptr, false);
      check_finite(dev.loss.total, epoch, "dev");
      rec.dev_loss = dev.loss.total;
      rec.dev_accuracy = accuracy(dev.p1, dev_samples);
      const std::pair<double, double> score{*rec.dev_accuracy, *rec.dev_loss};
      if (!best || score.first > best->first ||
          (score.first == best->first && score.second < best->second)) {
        best = score;
        best_values = values;
        result.selected_epoch = epoch;
      }
    }
    result.curve.push_back(rec);
    if (epoch == config.epochs) break;

    if (fused) {
      step(values, eval.gradient, adam, config.optimizer);
      continue;
    }
    std::shuffle(order.begin(), order.end(), batch_rng);
    for (std::size_t begin = 0; begin < order.size(); begin += config.batch_size) {
      const std::size_t end = std::min(order.size(), begin + config.batch_size);
      std::vector<net::CompiledSample> batch;
      for (std::size_t k = begin; k < end; ++k) batch.push_back(train_samples[order[k]]);
      const BatchEvaluation b =
          evaluate_batch(network, batch, values, nullptr, true, config.gradient);
      check_finite(b.loss.total, epoch, "training");
      step(values, b.gradient, adam, config.optimizer);
    }
  }

  if (dev_samples.empty()) {
    best_values = values;
    result.selected_epoch = config.epochs;
  }
  std::copy(best_values.begin(), best_values.end(), store.values().begin());
  result.store = std::move(store);
  return result;
}

void write_loss_curve(std::ostream& out, const std::vector<EpochRecord>& curve) {
  out << "epoch,train_loss,train_acc,dev_loss,dev_acc\n";
  for (const auto& r : curve) {
    out << r.epoch << ',' << format_double(r.train_loss) << ','
        << format_double(r.train_accuracy) << ',';
    if (r.dev_loss) out << format_double(*r.dev_loss);
    out << ',';
    if (r.dev_accuracy) out << format_double(*r.dev_accuracy);
    out << '\n';
  }
}

}  // namespace qsam::learn
