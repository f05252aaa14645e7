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

#include <vector>

namespace qsam::learn {

inline constexpr double kProbabilityClamp = 1e-12;

// -[y ln p1 + (1 - y) ln(1 - p1)] with p1 clamped to [1e-12, 1 - 1e-12].
double bce_loss(double p1, int label);
// dL/dp1 at the clamped probability.
double bce_derivative(double p1, int label);

struct LossValue {
  double total = 0.0;
  std::vector<double> per_sample;
};

LossValue bce_loss(const std::vector<double>& p1, const std::vector<int>& labels);

}  // namespace qsam::learn
