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


// Dataset files to train/dev/test samples for one (dataset, variant, seed).

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include "qsam/data/split.hpp"
#include "qsam/net/topology.hpp"

namespace qsam::cli {

inline constexpr const char* kDataDirEnv = "QSAM_DATA_DIR";

// --data-dir, else $QSAM_DATA_DIR, else the repository data/ directory.
std::filesystem::path resolve_data_dir(const std::optional<std::filesystem::path>& flag);

std::filesystem::path dataset_file(const std::filesystem::path& data_dir,
                                   net::DatasetKind dataset);

// Iris 80/0/20 stratified, MC 70/30/30, RP 74/0/31; all seeded.
data::SplitSpec default_split(net::DatasetKind dataset, std::uint64_t seed);

struct Experiment {
  net::Topology topology;  // vocabulary attached for text datasets
  std::vector<net::Sample> train;
  std::vector<net::Sample> dev;
  std::vector<net::Sample> test;
};

// Loads `dataset` from `data_dir`, splits it with default_split(seed) and,
// for Iris, scales features with training-split statistics.
Experiment load_experiment(net::DatasetKind dataset, net::Variant variant,
                           const std::filesystem::path& data_dir, std::uint64_t seed);

}  // namespace qsam::cli
