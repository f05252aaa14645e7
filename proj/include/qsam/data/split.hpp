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
#include <vector>

namespace qsam::data {

struct SplitSpec {
  std::size_t train = 0;
  std::size_t dev = 0;
  std::size_t test = 0;
  bool stratified = false;
  std::uint64_t seed = 0;
};

struct SplitIndices {
  std::vector<std::size_t> train;
  std::vector<std::size_t> dev;
  std::vector<std::size_t> test;
};

// Seeded partition of record indices 0..labels.size()-1. Stratified splits
// give every part each label's share of the records (largest remainder,
// ties to the smaller label) and shuffle within the part. Throws InputError
// unless the counts sum to the record count.
SplitIndices split(const std::vector<int>& labels, const SplitSpec& spec);

}  // namespace qsam::data
