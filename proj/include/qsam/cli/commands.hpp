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


// The four CLI commands as library calls. The tool parses flags into these
// option structs; tests drive the same entry points in-process.

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qsam/core/channel.hpp"
#include "qsam/core/error.hpp"
#include "qsam/learn/train.hpp"
#include "qsam/net/network.hpp"

namespace qsam::cli {

// Semantically invalid flags; the tool exits with status 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

enum class OutputFormat { Text, Json, Csv };

OutputFormat parse_format(std::string_view name);
// "pre" or "pergate".
net::NoisePlacement parse_placement(std::string_view name);
std::string_view to_string(net::NoisePlacement placement);

// Noise flags as given; `channel == "none"` or an absent channel means
// noiseless.
struct NoiseFlags {
  std::string channel = "none";
  double level = 0.0;
  net::NoisePlacement placement = net::NoisePlacement::PreMeasurement;

  std::optional<net::NoiseModel> model() const;
};

struct TrainOptions {
  net::DatasetKind dataset = net::DatasetKind::Iris;
  net::Variant variant = net::Variant::Optimized;
  std::optional<int> epochs;  // dataset default when absent
  double learning_rate = 0.05;
  std::uint64_t seed = 0;
  learn::OptimizerKind optimizer = learn::OptimizerKind::Adam;
  learn::GradientMode gradient = learn::GradientMode::ParameterShift;
  std::size_t batch_size = 0;
  std::optional<std::filesystem::path> data_dir;
  std::filesystem::path out = "run";
  OutputFormat format = OutputFormat::Text;
  bool plot_script = false;
};

struct TrainSummary {
  std::filesystem::path params;
  std::filesystem::path loss_curve;
  std::filesystem::path manifest;
  std::optional<std::filesystem::path> plot_script;
  double train_accuracy = 0.0;
  std::optional<double> dev_accuracy;
  double test_accuracy = 0.0;
  int selected_epoch = 0;
};

// Trains, then writes params.json, loss.csv and (last, via rename)
// manifest.json under `out`. Prints a summary to `log`.
TrainSummary cmd_train(const TrainOptions& options, std::ostream& log);

enum class SplitKind { Train, Dev, Test };
SplitKind parse_split(std::string_view name);

struct EvalOptions {
  std::filesystem::path params;
  // When given, must match the dataset/variant recorded in the file.
  std::optional<net::DatasetKind> dataset;
  std::optional<net::Variant> variant;
  SplitKind split = SplitKind::Test;
  NoiseFlags noise;
  std::optional<std::filesystem::path> data_dir;
  std::optional<std::filesystem::path> out;
  OutputFormat format = OutputFormat::Text;
};

struct Prediction {
  std::size_t index = 0;  // position within the split
  int label = 0;
  double p1 = 0.0;
  int predicted = 0;
};

struct EvalReport {
  net::DatasetKind dataset = net::DatasetKind::Iris;
  net::Variant variant = net::Variant::Optimized;
  SplitKind split = SplitKind::Test;
  double accuracy = 0.0;  // fraction
  std::vector<Prediction> predictions;
};

EvalReport cmd_eval(const EvalOptions& options, std::ostream& out);
void write_eval_report(std::ostream& out, const EvalReport& report, OutputFormat format);

struct SweepOptions {
  std::vector<std::filesystem::path> params;  // one trained model per dataset
  std::vector<std::string> channels = {"bitflip", "depolarizing", "ampdamp"};
  std::vector<double> levels = {0.001, 0.005, 0.01};
  net::NoisePlacement placement = net::NoisePlacement::PreMeasurement;
  std::optional<std::filesystem::path> data_dir;
  std::optional<std::filesystem::path> out;  // stdout when absent
};

struct SweepRow {
  std::string channel;
  double level = 0.0;
  std::string dataset;
  double accuracy = 0.0;
};

// Zero-noise row first for every model, then channel x ascending level on
// the test split. Throws UsageError for an empty channel list.
std::vector<SweepRow> cmd_sweep(const SweepOptions& options, std::ostream& out);
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

struct ComplexityOptions {
  // Every combination when absent.
  std::optional<net::DatasetKind> dataset;
  std::optional<net::Variant> variant;
  OutputFormat format = OutputFormat::Text;
};

void cmd_complexity(const ComplexityOptions& options, std::ostream& out);

// Accuracy of `store` on `samples` under an optional noise model.
EvalReport evaluate_model(const net::Topology& topology, const circuit::ParamStore& store,
                          const std::vector<net::Sample>& samples,
                          const net::NoiseModel* noise);

// "93.33" for 0.93333...
std::string format_percent(double fraction);

}  // namespace qsam::cli
