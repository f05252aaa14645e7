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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "qsam/circuit/params.hpp"
#include "qsam/learn/gradient.hpp"
#include "qsam/learn/optimizer.hpp"
#include "qsam/net/topology.hpp"

namespace qsam::learn {

struct TrainConfig {
  OptimizerConfig optimizer;
  int epochs = 100;
  std::size_t batch_size = 0;  // 0: full batch
  std::uint64_t seed = 0;
  GradientOptions gradient;

  // Throws InputError on invalid settings.
  void validate() const;
};

// 100 for Iris, 200 for the text datasets.
int default_epochs(net::DatasetKind dataset);

// Ansatz angles uniform in [0, 2pi), embedding angles uniform in
// [-0.1, 0.1], drawn in slot order from `seed`.
void initialize_parameters(circuit::ParamStore& store, std::uint64_t seed);

struct EpochRecord {
  int epoch = 0;
  double train_loss = 0.0;  // summed over samples
  double train_accuracy = 0.0;
  std::optional<double> dev_loss;
  std::optional<double> dev_accuracy;
};

struct TrainResult {
  circuit::ParamStore store;     // final, or the selected dev checkpoint
  std::vector<EpochRecord> curve;  // epochs + 1 rows; row 0 is the initial state
  int selected_epoch = 0;
};

// Fraction of samples with classify(p1) == label.
double accuracy(const std::vector<double>& p1, const std::vector<net::CompiledSample>& samples);

// Trains a freshly initialized store. With a dev split the returned store is
// the checkpoint with the best dev accuracy (ties: lowest dev loss, then the
// earliest epoch). Throws NumericalError when the loss becomes non-finite.
TrainResult train(const net::Topology& topology, const std::vector<net::Sample>& train_set,
                  const std::vector<net::Sample>& dev_set, const TrainConfig& config);

// "epoch,train_loss,train_acc,dev_loss,dev_acc"; dev cells empty when absent.
void write_loss_curve(std::ostream& out, const std::vector<EpochRecord>& curve);

}  // namespace qsam::learn
