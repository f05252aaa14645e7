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


#include "qsam/data/iris.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "qsam/core/error.hpp"
#include "qsam/core/log.hpp"

namespace qsam::data {
namespace {

constexpr std::array<std::string_view, kIrisFeatures> kColumns = {
    "sepal_length", "sepal_width", "petal_length", "petal_width"};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) cells.push_back(trim(cell));
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

[[noreturn]] void fail(const std::string& source, int row, std::string_view column,
                       const std::string& what) {
  throw ParseError(source + ": row " + std::to_string(row) + ", column " +
                   std::string(column) + ": " + what);
}

// 0 setosa, 1 versicolour, 2 virginica.
int parse_label(const std::string& cell, const std::string& source, int row) {
  std::string name = cell;
  std::transform(name.begin(), name.end(), name.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (name.rfind("iris-", 0) == 0) name = name.substr(5);
  if (name == "setosa" || name == "0") return 0;
  if (name == "versicolor" || name == "versicolour" || name == "1") return 1;
  if (name == "virginica" || name == "2") return 2;
  fail(source, row, "label", "unknown class '" + cell + "'");
}

}  // namespace

std::vector<IrisRecord> parse_iris(std::istream& in, const std::string& source,
                                   bool require_canonical) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError(source + ": empty file");
  if (trim(line) != kIrisHeader) {
    throw ParseError(source + ": header must be '" + std::string(kIrisHeader) + "'");
  }
  std::vector<IrisRecord> out;
  int row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (trim(line).empty()) continue;
    const auto cells = split_csv(line);
    IrisRecord r;
    for (int k = 0; k < kIrisFeatures; ++k) {
      const auto col = kColumns[static_cast<std::size_t>(k)];
      if (static_cast<int>(cells.size()) <= k || cells[static_cast<std::size_t>(k)].empty()) {
        fail(source, row, col, "missing value");
      }
      const std::string& c = cells[static_cast<std::size_t>(k)];
      double v = 0.0;
      const auto res = std::from_chars(c.data(), c.data() + c.size(), v);
      if (res.ec != std::errc{} || res.ptr != c.data() + c.size()) {
        fail(source, row, col, "not a number: '" + c + "'");
      }
      if (!std::isfinite(v) || v <= 0.0) fail(source, row, col, "must be finite and positive");
      r.features[static_cast<std::size_t>(k)] = v;
    }
    if (cells.size() <= kIrisFeatures || cells[kIrisFeatures].empty()) {
      fail(source, row, "label", "missing value");
    }
    if (cells.size() > kIrisFeatures + 1) fail(source, row, "label", "too many columns");
    const int label = parse_label(cells[kIrisFeatures], source, row);
    if (label == 2) continue;
    r.label = label;
    out.push_back(r);
  }
  if (require_canonical) {
    const auto ones = std::count_if(out.begin(), out.end(), [](auto& r) { return r.label == 1; });
    if (out.size() != 100 || ones != 50) {
      throw InputError(source + ": expected 50 setosa and 50 versicolour records, found " +
                       std::to_string(out.size() - static_cast<std::size_t>(ones)) + " and " +
                       std::to_string(ones));
    }
  }
  return out;
}

std::vector<IrisRecord> load_iris(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  return parse_iris(in, path.string());
}

MinMaxStats fit_min_max(const std::vector<IrisRecord>& records) {
  if (records.empty()) throw InputError("cannot fit scaling statistics to no records");
  MinMaxStats s;
  s.min = s.max = records.front().features;
  for (const auto& r : records) {
    for (std::size_t k = 0; k < kIrisFeatures; ++k) {
      s.min[k] = std::min(s.min[k], r.features[k]);
      s.max[k] = std::max(s.max[k], r.features[k]);
    }
  }
  return s;
}

std::vector<std::array<double, kIrisFeatures>> scale_features(
    const std::vector<IrisRecord>& records, const std::optional<MinMaxStats>& stats) {
  const MinMaxStats s = stats ? *stats : fit_min_max(records);
  std::array<bool, kIrisFeatures> degenerate{};
  for (std::size_t k = 0; k < kIrisFeatures; ++k) {
    degenerate[k] = !(s.max[k] > s.min[k]);
    if (degenerate[k]) {
      warn("feature " + std::string(kColumns[k]) + " has no spread; mapping it to pi/2");
    }
  }
  std::vector<std::array<double, kIrisFeatures>> out;
  out.reserve(records.size());
  for (const auto& r : records) {
    std::array<double, kIrisFeatures> a{};
    for (std::size_t k = 0; k < kIrisFeatures; ++k) {
      if (degenerate[k]) {
        a[k] = std::numbers::pi / 2;
        continue;
      }
      const double u = (r.features[k] - s.min[k]) / (s.max[k] - s.min[k]);
      a[k] = std::clamp(u, 0.0, 1.0) * std::numbers::pi;
    }
    out.push_back(a);
  }
  return out;
}

}  // namespace qsam::data
