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


#include "qsam/cli/experiment.hpp"

#include <cstdlib>

#include "qsam/data/iris.hpp"
#include "qsam/data/text.hpp"

namespace qsam::cli {

using net::DatasetKind;

std::filesystem::path resolve_data_dir(const std::optional<std::filesystem::path>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv(kDataDirEnv); env && *env) return env;
  return QSAM_DEFAULT_DATA_DIR;
}

std::filesystem::path dataset_file(const std::filesystem::path& data_dir, DatasetKind dataset) {
  switch (dataset) {
    case DatasetKind::Iris:
      return data_dir / "iris.csv";
    case DatasetKind::MC:
      return data_dir / "mc.txt";
    case DatasetKind::RP:
      return data_dir / "rp.txt";
  }
  return {};
}

data::SplitSpec default_split(DatasetKind dataset, std::uint64_t seed) {
  switch (dataset) {
    case DatasetKind::Iris:
      return {80, 0, 20, true, seed};
    case DatasetKind::MC:
      return {70, 30, 30, false, seed};
    case DatasetKind::RP:
      return {74, 0, 31, false, seed};
  }
  return {};
}

namespace {

template <typename Make>
std::vector<net::Sample> gather(const std::vector<std::size_t>& idx, Make make) {
  std::vector<net::Sample> out;
  out.reserve(idx.size());
  for (std::size_t k : idx) out.push_back(make(k));
  return out;
}

}  // namespace

Experiment load_experiment(DatasetKind dataset, net::Variant variant,
                           const std::filesystem::path& data_dir, std::uint64_t seed) {
  Experiment ex;
  ex.topology = net::build_topology(dataset, variant);
  const auto path = dataset_file(data_dir, dataset);
  const data::SplitSpec spec = default_split(dataset, seed);

  if (dataset == DatasetKind::Iris) {
    const auto records = data::load_iris(path);
    std::vector<int> labels;
    for (const auto& r : records) labels.push_back(r.label);
    const auto parts = data::split(labels, spec);
    std::vector<data::IrisRecord> train_records;
    for (std::size_t k : parts.train) train_records.push_back(records[k]);
    const auto scaled = data::scale_features(records, data::fit_min_max(train_records));
    auto make = [&](std::size_t k) {
      net::Sample s;
      s.features.assign(scaled[k].begin(), scaled[k].end());
      s.label = records[k].label;
      return s;
    };
    ex.train = gather(parts.train, make);
    ex.dev = gather(parts.dev, make);
    ex.test = gather(parts.test, make);
    return ex;
  }

  const std::size_t expected = dataset == DatasetKind::MC ? 17 : 115;
  const auto text = data::load_text(path, expected);
  ex.topology.vocabulary = text.vocabulary;
  std::vector<int> labels;
  for (const auto& r : text.records) labels.push_back(r.label);
  const auto parts = data::split(labels, spec);
  auto make = [&](std::size_t k) {
    net::Sample s;
    s.tokens = data::encode_tokens(text.records[k], text.vocabulary, ex.topology.positions);
    s.label = text.records[k].label;
    return s;
  };
  ex.train = gather(parts.train, make);
  ex.dev = gather(parts.dev, make);
  ex.test = gather(parts.test, make);
  return ex;
}

}  // namespace qsam::cli
