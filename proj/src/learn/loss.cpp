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


#include "qsam/learn/loss.hpp"

#include <algorithm>
#include <cmath>

#include "qsam/core/error.hpp"

namespace qsam::learn {
namespace {

double clamp_probability(double p1) {
  return std::clamp(p1, kProbabilityClamp, 1.0 - kProbabilityClamp);
}

void check_label(int label) {
  if (label != 0 && label != 1) throw InputError("labels must be 0 or 1");
}

}  // namespace

double bce_loss(double p1, int label) {
  check_label(label);
  const double p = clamp_probability(p1);
  return label == 1 ? -std::log(p) : -std::log1p(-p);
}

double bce_derivative(double p1, int label) {
  check_label(label);
  const double p = clamp_probability(p1);
  return label == 1 ? -1.0 / p : 1.0 / (1.0 - p);
}

LossValue bce_loss(const std::vector<double>& p1, const std::vector<int>& labels) {
  if (p1.size() != labels.size()) throw InputError("probability and label counts differ");
  LossValue out;
  out.per_sample.reserve(p1.size());
  for (std::size_t k = 0; k < p1.size(); ++k) {
    out.per_sample.push_back(bce_loss(p1[k], labels[k]));
    out.total += out.per_sample.back();
  }
  return out;
}

}  // namespace qsam::learn
