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


#include "qsam/cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qsam/cli/experiment.hpp"
#include "qsam/core/format.hpp"
#include "qsam/net/forward.hpp"

namespace qsam::cli {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  out.close();
  if (!out) throw Error("cannot write " + path.string());
}

// Write to a sibling temporary, then rename over the target.
void write_file_atomic(const fs::path& path, const std::string& text) {
  fs::path tmp = path;
  tmp += ".tmp";
  write_file(tmp, text);
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) throw Error("cannot rename " + tmp.string() + ": " + ec.message());
}

std::string_view to_string(learn::OptimizerKind kind) {
  return kind == learn::OptimizerKind::Adam ? "adam" : "gd";
}

std::string_view to_string(learn::GradientMode mode) {
  return mode == learn::GradientMode::ParameterShift ? "shift" : "fd";
}

std::string_view to_string(SplitKind split) {
  switch (split) {
    case SplitKind::Train: return "train";
    case SplitKind::Dev: return "dev";
    case SplitKind::Test: return "test";
  }
  return "test";
}

const std::vector<net::Sample>& pick(const Experiment& e, SplitKind split) {
  switch (split) {
    case SplitKind::Train: return e.train;
    case SplitKind::Dev: return e.dev;
    case SplitKind::Test: return e.test;
  }
  return e.test;
}

ordered_json complexity_json(net::DatasetKind d, net::Variant v) {
  const net::ComplexityReport r = net::complexity_report(d, v);
  ordered_json j;
  j["dataset"] = circuit::to_string(d);
  j["variant"] = circuit::to_string(v);
  j["qubits"] = r.qubits;
  j["two_qubit_gates"] = r.two_qubit_gates;
  j["trainable_params"] = r.trainable_params;
  j["embedding_params_per_word"] = r.embedding_params_per_word;
  return j;
}

const char kPlotScript[] = R"(# Plots the loss curve written next to this file.
import csv
import sys

import matplotlib.pyplot as plt

path = sys.argv[1] if len(sys.argv) > 1 else "loss.csv"
with open(path) as f:
    rows = list(csv.DictReader(f))
epochs = [int(r["epoch"]) for r in rows]
plt.plot(epochs, [float(r["train_loss"]) for r in rows], label="train")
if rows and rows[0]["dev_loss"]:
    plt.plot(epochs, [float(r["dev_loss"]) for r in rows], label="dev")
plt.xlabel("epoch")
plt.ylabel("loss")
plt.legend()
plt.savefig(path.rsplit(".", 1)[0] + ".png", dpi=150)
)";

}  // namespace

OutputFormat parse_format(std::string_view name) {
  if (name == "text") return OutputFormat::Text;
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  throw UsageError("unknown format '" + std::string(name) + "' (text, json, csv)");
}

net::NoisePlacement parse_placement(std::string_view name) {
  if (name == "pre") return net::NoisePlacement::PreMeasurement;
  if (name == "pergate") return net::NoisePlacement::PerGate;
  throw UsageError("unknown noise placement '" + std::string(name) + "' (pre, pergate)");
}

std::string_view to_string(net::NoisePlacement placement) {
  return placement == net::NoisePlacement::PreMeasurement ? "pre" : "pergate";
}

SplitKind parse_split(std::string_view name) {
  if (name == "train") return SplitKind::Train;
  if (name == "dev") return SplitKind::Dev;
  if (name == "test") return SplitKind::Test;
  throw UsageError("unknown split '" + std::string(name) + "' (train, dev, test)");
}

std::optional<net::NoiseModel> NoiseFlags::model() const {
  if (channel.empty() || channel == "none") return std::nullopt;
  NoiseKind kind;
  try {
    kind = parse_noise_kind(channel);
  } catch (const InputError& e) {
    throw UsageError(e.what());
  }
  if (!(level >= 0.0 && level <= 1.0)) throw UsageError("noise level must lie in [0, 1]");
  return net::NoiseModel{NoiseChannel::make(kind, level), placement};
}

std::string format_percent(double fraction) { return format_fixed(100.0 * fraction, 2); }

EvalReport evaluate_model(const net::Topology& topology, const circuit::ParamStore& store,
                          const std::vector<net::Sample>& samples,
                          const net::NoiseModel* noise) {
  net::check_parameters(topology, store);
  const net::Network network(topology, store);
  EvalReport report;
  report.dataset = topology.dataset;
  report.variant = topology.variant;
  std::size_t correct = 0;
  for (std::size_t k = 0; k < samples.size(); ++k) {
    const double z = network.expect_z(network.compile(samples[k]), store.values(), noise);
    Prediction p{k, samples[k].label, net::probability_one(z), 0};
    p.predicted = net::classify(p.p1);
    correct += p.predicted == p.label;
    report.predictions.push_back(p);
  }
  report.accuracy = samples.empty() ? 0.0
                                    : static_cast<double>(correct) /
                                          static_cast<double>(samples.size());
  return report;
}

TrainSummary cmd_train(const TrainOptions& options, std::ostream& log) {
  const std::string started = utc_now();
  const fs::path data_dir = resolve_data_dir(options.data_dir);
  const Experiment e = load_experiment(options.dataset, options.variant, data_dir, options.seed);

  learn::TrainConfig config;
  config.optimizer.kind = options.optimizer;
  config.optimizer.learning_rate = options.learning_rate;
  config.epochs = options.epochs.value_or(learn::default_epochs(options.dataset));
  config.batch_size = options.batch_size;
  config.seed = options.seed;
  config.gradient.mode = options.gradient;
  try {
    config.validate();
  } catch (const InputError& err) {
    throw UsageError(err.what());
  }

  const learn::TrainResult result = learn::train(e.topology, e.train, e.dev, config);
  const EvalReport test = evaluate_model(e.topology, result.store, e.test, nullptr);
  const learn::EpochRecord& selected =
      result.curve[static_cast<std::size_t>(result.selected_epoch)];

  fs::create_directories(options.out);
  TrainSummary s;
  s.params = options.out / "params.json";
  s.loss_curve = options.out / "loss.csv";
  s.manifest = options.out / "manifest.json";
  s.train_accuracy = selected.train_accuracy;
  s.dev_accuracy = selected.dev_accuracy;
  s.test_accuracy = test.accuracy;
  s.selected_epoch = result.selected_epoch;

  const circuit::ParamMetadata meta{std::string(circuit::to_string(options.dataset)),
                                    std::string(circuit::to_string(options.variant)),
                                    options.seed};
  circuit::save_params(s.params, result.store, meta);
  std::ostringstream curve;
  learn::write_loss_curve(curve, result.curve);
  write_file(s.loss_curve, curve.str());
  if (options.plot_script) {
    s.plot_script = options.out / "plot_loss.py";
    write_file(*s.plot_script, kPlotScript);
  }

  ordered_json m;
  m["dataset"] = meta.dataset;
  m["variant"] = meta.variant;
  m["seed"] = options.seed;
  m["config"] = {{"epochs", config.epochs},
                 {"learning_rate", config.optimizer.learning_rate},
                 {"optimizer", to_string(config.optimizer.kind)},
                 {"beta1", config.optimizer.beta1},
                 {"beta2", config.optimizer.beta2},
                 {"eps", config.optimizer.eps},
                 {"gradient", to_string(config.gradient.mode)},
                 {"batch_size", config.batch_size},
                 {"data_dir", data_dir.string()}};
  ordered_json c = complexity_json(options.dataset, options.variant);
  c.erase("dataset");
  c.erase("variant");
  m["complexity"] = c;
  m["metrics"] = {{"selected_epoch", s.selected_epoch},
                  {"train_loss", selected.train_loss},
                  {"train_accuracy", s.train_accuracy},
                  {"dev_accuracy", s.dev_accuracy ? ordered_json(*s.dev_accuracy) : ordered_json()},
                  {"test_accuracy", s.test_accuracy},
                  {"test_accuracy_percent", format_percent(s.test_accuracy)}};
  m["split_sizes"] = {{"train", e.train.size()}, {"dev", e.dev.size()}, {"test", e.test.size()}};
  m["outputs"] = {{"params", s.params.string()}, {"loss_curve", s.loss_curve.string()}};
  if (s.plot_script) m["outputs"]["plot_script"] = s.plot_script->string();
  m["timestamps"] = {{"started", started}, {"finished", utc_now()}};
  write_file_atomic(s.manifest, m.dump(2) + "\n");

  if (options.format == OutputFormat::Json) {
    log << m.dump(2) << "\n";
  } else {
    log << "dataset " << meta.dataset << ", variant " << meta.variant << ", seed "
        << options.seed << "\n"
        << "selected epoch " << s.selected_epoch << " of " << config.epochs << "\n"
        << "train accuracy " << format_percent(s.train_accuracy) << "\n";
    if (s.dev_accuracy) log << "dev accuracy " << format_percent(*s.dev_accuracy) << "\n";
    log << "test accuracy " << format_percent(s.test_accuracy) << "\n"
        << "wrote " << s.manifest.string() << "\n";
  }
  return s;
}

void write_eval_report(std::ostream& out, const EvalReport& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::Json: {
      ordered_json j;
      j["dataset"] = circuit::to_string(report.dataset);
      j["variant"] = circuit::to_string(report.variant);
      j["split"] = to_string(report.split);
      j["accuracy_percent"] = format_percent(report.accuracy);
      j["predictions"] = ordered_json::array();
      for (const auto& p : report.predictions) {
        j["predictions"].push_back(
            {{"index", p.index}, {"label", p.label}, {"p1", p.p1}, {"predicted", p.predicted}});
      }
      out << j.dump(2) << "\n";
      return;
    }
    case OutputFormat::Csv:
      out << "index,label,p1,predicted\n";
      for (const auto& p : report.predictions) {
        out << p.index << ',' << p.label << ',' << format_double(p.p1) << ',' << p.predicted
            << '\n';
      }
      return;
    case OutputFormat::Text:
      out << "accuracy " << format_percent(report.accuracy) << " ("
          << circuit::to_string(report.dataset) << ", " << circuit::to_string(report.variant)
          << ", " << to_string(report.split) << ", " << report.predictions.size()
          << " samples)\n";
      for (const auto& p : report.predictions) {
        out << p.index << " label " << p.label << " p1 " << format_fixed(p.p1, 6)
            << " predicted " << p.predicted << (p.predicted == p.label ? "" : "  *") << "\n";
      }
      return;
  }
}

EvalReport cmd_eval(const EvalOptions& options, std::ostream& out) {
  const auto noise = options.noise.model();
  auto [store, meta] = circuit::load_params(options.params);
  const net::DatasetKind dataset = circuit::parse_dataset(meta.dataset);
  const net::Variant variant = circuit::parse_variant(meta.variant);
  if (options.dataset && *options.dataset != dataset) {
    throw Error("parameter file " + options.params.string() + " was trained on " +
                meta.dataset + ", not " + std::string(circuit::to_string(*options.dataset)));
  }
  if (options.variant && *options.variant != variant) {
    throw Error("parameter file " + options.params.string() + " holds the " + meta.variant +
                " variant, not " + std::string(circuit::to_string(*options.variant)));
  }
  const Experiment e =
      load_experiment(dataset, variant, resolve_data_dir(options.data_dir), meta.seed);
  const auto& samples = pick(e, options.split);
  if (samples.empty()) {
    throw UsageError("the " + std::string(to_string(options.split)) + " split of " +
                     meta.dataset + " is empty");
  }
  EvalReport report = evaluate_model(e.topology, store, samples, noise ? &*noise : nullptr);
  report.split = options.split;
  write_eval_report(out, report, options.format);
  if (options.out) {
    std::ostringstream text;
    write_eval_report(text, report, options.format);
    write_file(*options.out, text.str());
  }
  return report;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "channel,level,dataset,accuracy\n";
  for (const auto& r : rows) {
    out << r.channel << ',' << format_double(r.level) << ',' << r.dataset << ','
        << format_percent(r.accuracy) << '\n';
  }
}

std::vector<SweepRow> cmd_sweep(const SweepOptions& options, std::ostream& out) {
  std::vector<std::string> channels;
  for (const auto& c : options.channels) {
    if (!c.empty()) channels.push_back(c);
  }
  if (channels.empty()) throw UsageError("sweep needs at least one noise channel");
  if (options.params.empty()) throw UsageError("sweep needs at least one parameter file");
  std::vector<NoiseKind> kinds;
  for (const auto& c : channels) {
    try {
      kinds.push_back(parse_noise_kind(c));
    } catch (const InputError& e) {
      throw UsageError(e.what());
    }
  }
  std::vector<double> levels = options.levels;
  for (double l : levels) {
    if (!(l >= 0.0 && l <= 1.0)) throw UsageError("noise levels must lie in [0, 1]");
  }
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  std::vector<SweepRow> rows;
  for (const auto& path : options.params) {
    if (!fs::exists(path)) throw Error("missing parameter file " + path.string());
    const auto [store, meta] = circuit::load_params(path);
    const net::DatasetKind dataset = circuit::parse_dataset(meta.dataset);
    const Experiment e = load_experiment(dataset, circuit::parse_variant(meta.variant),
                                         resolve_data_dir(options.data_dir), meta.seed);
    rows.push_back({"none", 0.0, meta.dataset,
                    evaluate_model(e.topology, store, e.test, nullptr).accuracy});
    for (NoiseKind kind : kinds) {
      for (double level : levels) {
        const net::NoiseModel noise{NoiseChannel::make(kind, level), options.placement};
        rows.push_back({std::string(qsam::to_string(kind)), level, meta.dataset,
                        evaluate_model(e.topology, store, e.test, &noise).accuracy});
      }
    }
  }
  if (options.out) {
    std::ostringstream csv;
    write_sweep_csv(csv, rows);
    write_file(*options.out, csv.str());
  } else {
    write_sweep_csv(out, rows);
  }
  return rows;
}

void cmd_complexity(const ComplexityOptions& options, std::ostream& out) {
  std::vector<std::pair<net::DatasetKind, net::Variant>> rows;
  for (auto d : {net::DatasetKind::Iris, net::DatasetKind::MC, net::DatasetKind::RP}) {
    if (options.dataset && *options.dataset != d) continue;
    for (auto v : {net::Variant::Basic, net::Variant::Optimized}) {
      if (options.variant && *options.variant != v) continue;
      rows.emplace_back(d, v);
    }
  }
  if (options.format == OutputFormat::Json) {
    ordered_json j = ordered_json::array();
    for (auto [d, v] : rows) j.push_back(complexity_json(d, v));
    out << (rows.size() == 1 ? j[0] : j).dump(2) << "\n";
    return;
  }
  const char* columns[] = {"dataset", "variant", "qubits", "two_qubit_gates", "trainable_params",
                           "embedding_params_per_word"};
  const bool csv = options.format == OutputFormat::Csv;
  for (int k = 0; k < 6; ++k) {
    if (csv) {
      out << (k ? "," : "") << columns[k];
    } else {
      out << std::left << std::setw(k < 2 ? 10 : 0) << columns[k] << (k < 5 ? "  " : "");
    }
  }
  out << "\n";
  for (auto [d, v] : rows) {
    const net::ComplexityReport r = net::complexity_report(d, v);
    const std::string cells[] = {std::string(circuit::to_string(d)),
                                 std::string(circuit::to_string(v)),
                                 std::to_string(r.qubits),
                                 std::to_string(r.two_qubit_gates),
                                 std::to_string(r.trainable_params),
                                 std::to_string(r.embedding_params_per_word)};
    for (int k = 0; k < 6; ++k) {
      if (csv) {
        out << (k ? "," : "") << cells[k];
      } else {
        const int width = static_cast<int>(std::string_view(columns[k]).size());
        out << std::left << std::setw(k < 2 ? 10 : k < 5 ? width : 0) << cells[k]
            << (k < 5 ? "  " : "");
      }
    }
    out << "\n";
  }
}

}  // namespace qsam::cli
