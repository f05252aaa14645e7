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

#include <array>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace qsam::data {

inline constexpr int kIrisFeatures = 4;
inline constexpr std::string_view kIrisHeader =
    "sepal_length,sepal_width,petal_length,petal_width,label";

struct IrisRecord {
  std::array<double, kIrisFeatures> features{};  // cm, schema order
  int label = 0;                                 // 0 setosa, 1 versicolour
};

// Parses the documented CSV. Labels are class names (optionally "Iris-"
// prefixed) or 0/1/2; virginica rows are dropped. Throws ParseError naming
// the row and column of malformed cells. With `require_canonical`, anything
// other than 50 + 50 records is an InputError.
std::vector<IrisRecord> parse_iris(std::istream& in, const std::string& source,
                                   bool require_canonical = true);
std::vector<IrisRecord> load_iris(const std::filesystem::path& path);

struct MinMaxStats {
  std::array<double, kIrisFeatures> min{};
  std::array<double, kIrisFeatures> max{};
};

MinMaxStats fit_min_max(const std::vector<IrisRecord>& records);

// Maps each feature to [0, pi] by min-max with `stats` (fitted on `records`
// when absent), clamping values outside the fitted range. A degenerate
// feature maps to pi/2 with a warning.
std::vector<std::array<double, kIrisFeatures>> scale_features(
    const std::vector<IrisRecord>& records, const std::optional<MinMaxStats>& stats = {});

}  // namespace qsam::data
