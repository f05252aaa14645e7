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


#include "qsam/data/split.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <random>
#include <string>

#include "qsam/core/error.hpp"

namespace qsam::data {
namespace {

// Per-label counts for a part of `size` records drawn from `remaining`,
// proportional to the label shares of `totals`.
std::map<int, std::size_t> quotas(std::size_t size, const std::map<int, std::size_t>& totals,
                                  const std::map<int, std::size_t>& remaining, std::size_t n) {
  std::map<int, std::size_t> q;
  std::vector<std::pair<double, int>> frac;
  std::size_t taken = 0;
  for (const auto& [label, count] : totals) {
    const double ideal = static_cast<double>(size) * static_cast<double>(count) /
                         static_cast<double>(n);
    const auto base = std::min(static_cast<std::size_t>(std::floor(ideal)), remaining.at(label));
    q[label] = base;
    taken += base;
    frac.emplace_back(-(ideal - std::floor(ideal)), label);
  }
  std::sort(frac.begin(), frac.end());
  while (taken < size) {
    bool progressed = false;
    for (const auto& [f, label] : frac) {
      if (taken == size) break;
      if (q[label] < remaining.at(label)) {
        ++q[label];
        ++taken;
        progressed = true;
      }
    }
    if (!progressed) break;
  }
  return q;
}

}  // namespace

SplitIndices split(const std::vector<int>& labels, const SplitSpec& spec) {
  const std::size_t n = labels.size();
  if (spec.train + spec.dev + spec.test != n) {
    throw InputError("split sizes " + std::to_string(spec.train) + "/" +
                     std::to_string(spec.dev) + "/" + std::to_string(spec.test) +
                     " do not sum to " + std::to_string(n) + " records");
  }
  std::mt19937_64 rng(spec.seed);
  SplitIndices out;
  const std::array<std::vector<std::size_t>*, 3> parts{&out.train, &out.dev, &out.test};
  const std::array<std::size_t, 3> sizes{spec.train, spec.dev, spec.test};

  if (!spec.stratified) {
    std::vector<std::size_t> idx(n);
    for (std::size_t k = 0; k < n; ++k) idx[k] = k;
    std::shuffle(idx.begin(), idx.end(), rng);
    std::size_t at = 0;
    for (std::size_t p = 0; p < 3; ++p) {
      parts[p]->assign(idx.begin() + static_cast<std::ptrdiff_t>(at),
                       idx.begin() + static_cast<std::ptrdiff_t>(at + sizes[p]));
      at += sizes[p];
    }
    return out;
  }

  std::map<int, std::vector<std::size_t>> by_label;
  for (std::size_t k = 0; k < n; ++k) by_label[labels[k]].push_back(k);
  std::map<int, std::size_t> totals, remaining;
  for (auto& [label, idx] : by_label) {
    std::shuffle(idx.begin(), idx.end(), rng);
    totals[label] = remaining[label] = idx.size();
  }
  std::map<int, std::size_t> cursor;
  for (std::size_t p = 0; p < 3; ++p) {
    const auto q = quotas(sizes[p], totals, remaining, n);
    for (const auto& [label, count] : q) {
      auto& idx = by_label[label];
      std::size_t& c = cursor[label];
      parts[p]->insert(parts[p]->end(), idx.begin() + static_cast<std::ptrdiff_t>(c),
                       idx.begin() + static_cast<std::ptrdiff_t>(c + count));
      c += count;
      remaining[label] -= count;
    }
    std::shuffle(parts[p]->begin(), parts[p]->end(), rng);
  }
  return out;
}

}  // namespace qsam::data
