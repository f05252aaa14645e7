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


// qsam command-line tool.
//
// Exit status: 0 success, 1 runtime failure, 2 usage error. Options may also
// come from a key=value file given with --config (subcommand options under a
// [train], [eval], ... section); flags on the command line win.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qsam/circuit/block.hpp"
#include "qsam/cli/commands.hpp"

namespace {

using namespace qsam;

const std::vector<std::string> kDatasets = {"iris", "mc", "rp"};
const std::vector<std::string> kVariants = {"basic", "optimized"};
const std::vector<std::string> kFormats = {"text", "json", "csv"};
const std::vector<std::string> kNoise = {"none", "bitflip", "depolarizing", "ampdamp"};
const std::vector<std::string> kPlacements = {"pre", "pergate"};

struct Flags {
  std::string dataset;
  std::string variant;
  std::optional<int> epochs;
  double lr = 0.05;
  std::uint64_t seed = 0;
  std::string optimizer = "adam";
  std::string gradient = "shift";
  std::size_t batch_size = 0;
  std::string noise = "none";
  double level = 0.0;
  std::string placement = "pre";
  std::optional<std::string> data_dir;
  std::optional<std::string> out;
  std::string format = "text";
  bool plot_script = false;
  std::string params;
  std::vector<std::string> param_files;
  std::string split = "test";
  std::vector<std::string> channels = {"bitflip", "depolarizing", "ampdamp"};
  std::vector<double> levels = {0.001, 0.005, 0.01};
};

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_option("--data-dir", f.data_dir, "dataset directory (default: $QSAM_DATA_DIR, then the bundled data/)");
  cmd->add_option("--format", f.format, "output format")->check(CLI::IsMember(kFormats));
}

void add_noise(CLI::App* cmd, Flags& f) {
  cmd->add_option("--noise", f.noise, "noise channel for evaluation")->check(CLI::IsMember(kNoise));
  cmd->add_option("--level", f.level, "noise level p or gamma")->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--placement", f.placement,
                  "pre: once before measurement; pergate: after every U3 gate")
      ->check(CLI::IsMember(kPlacements));
}

std::optional<std::filesystem::path> as_path(const std::optional<std::string>& s) {
  if (!s) return std::nullopt;
  return std::filesystem::path(*s);
}

int run(CLI::App& app, const Flags& f) {
  auto dataset = [&] { return circuit::parse_dataset(f.dataset); };
  auto variant = [&] { return circuit::parse_variant(f.variant); };
  const cli::OutputFormat format = cli::parse_format(f.format);

  if (app.got_subcommand("train")) {
    cli::TrainOptions o;
    o.dataset = dataset();
    o.variant = variant();
    o.epochs = f.epochs;
    o.learning_rate = f.lr;
    o.seed = f.seed;
    o.optimizer = f.optimizer == "gd" ? learn::OptimizerKind::GradientDescent
                                      : learn::OptimizerKind::Adam;
    o.gradient = f.gradient == "fd" ? learn::GradientMode::FiniteDifference
                                    : learn::GradientMode::ParameterShift;
    o.batch_size = f.batch_size;
    o.data_dir = as_path(f.data_dir);
    o.out = f.out.value_or("run");
    o.format = format;
    o.plot_script = f.plot_script;
    cli::cmd_train(o, std::cout);
  } else if (app.got_subcommand("eval")) {
    cli::EvalOptions o;
    o.params = f.params;
    if (!f.dataset.empty()) o.dataset = dataset();
    if (!f.variant.empty()) o.variant = variant();
    o.split = cli::parse_split(f.split);
    o.noise = {f.noise, f.level, cli::parse_placement(f.placement)};
    o.data_dir = as_path(f.data_dir);
    o.out = as_path(f.out);
    o.format = format;
    cli::cmd_eval(o, std::cout);
  } else if (app.got_subcommand("sweep")) {
    cli::SweepOptions o;
    for (const auto& p : f.param_files) o.params.emplace_back(p);
    o.channels = f.channels;
    o.levels = f.levels;
    o.placement = cli::parse_placement(f.placement);
    o.data_dir = as_path(f.data_dir);
    o.out = as_path(f.out);
    cli::cmd_sweep(o, std::cout);
  } else if (app.got_subcommand("complexity")) {
    cli::ComplexityOptions o;
    if (!f.dataset.empty()) o.dataset = dataset();
    if (!f.variant.empty()) o.variant = variant();
    o.format = format;
    cli::cmd_complexity(o, std::cout);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum self-attention classifier toolkit"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value configuration file");
  Flags f;

  CLI::App* train = app.add_subcommand("train", "train a model and write its artifacts");
  train->add_option("--dataset", f.dataset)->required()->check(CLI::IsMember(kDatasets));
  train->add_option("--variant", f.variant)->required()->check(CLI::IsMember(kVariants));
  train->add_option("--epochs", f.epochs, "default: 100 for iris, 200 for mc and rp")
      ->check(CLI::NonNegativeNumber);
  train->add_option("--lr", f.lr, "learning rate")->check(CLI::PositiveNumber);
  train->add_option("--seed", f.seed, "run seed (also fixes the data split)");
  train->add_option("--optimizer", f.optimizer)->check(CLI::IsMember({"adam", "gd"}));
  train->add_option("--gradient", f.gradient)->check(CLI::IsMember({"shift", "fd"}));
  train->add_option("--batch-size", f.batch_size, "0 for full batch");
  train->add_option("--out", f.out, "output directory (default: run)");
  train->add_flag("--plot-script", f.plot_script, "also write plot_loss.py");
  add_common(train, f);

  CLI::App* eval = app.add_subcommand("eval", "evaluate a parameter file");
  eval->add_option("--params", f.params, "parameter file from train")->required();
  eval->add_option("--dataset", f.dataset, "must match the file")->check(CLI::IsMember(kDatasets));
  eval->add_option("--variant", f.variant, "must match the file")->check(CLI::IsMember(kVariants));
  eval->add_option("--split", f.split)->check(CLI::IsMember({"train", "dev", "test"}));
  eval->add_option("--out", f.out, "also write the report to this file");
  add_noise(eval, f);
  add_common(eval, f);

  CLI::App* sweep = app.add_subcommand("sweep", "test accuracy over noise channels and levels");
  sweep->add_option("--params", f.param_files, "parameter files, one per dataset")->required();
  sweep->add_option("--channels", f.channels)->delimiter(',');
  sweep->add_option("--levels", f.levels)->delimiter(',')->check(CLI::Range(0.0, 1.0));
  sweep->add_option("--placement", f.placement)->check(CLI::IsMember(kPlacements));
  sweep->add_option("--out", f.out, "CSV file (default: stdout)");
  sweep->add_option("--data-dir", f.data_dir);

  CLI::App* complexity = app.add_subcommand("complexity", "circuit size report");
  complexity->add_option("--dataset", f.dataset)->check(CLI::IsMember(kDatasets));
  complexity->add_option("--variant", f.variant)->check(CLI::IsMember(kVariants));
  complexity->add_option("--format", f.format)->check(CLI::IsMember(kFormats));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  try {
    return run(app, f);
  } catch (const cli::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
