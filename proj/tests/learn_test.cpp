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


#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qsam/cli/experiment.hpp"
#include "qsam/core/error.hpp"
#include "qsam/learn/train.hpp"
#include "qsam/net/forward.hpp"

namespace qsam::learn {
namespace {

using circuit::ParamGroup;
using circuit::ParamId;
using circuit::ParamStore;
using net::CompiledSample;
using net::DatasetKind;
using net::Network;
using net::Topology;
using net::Variant;

Topology mc_topology(int positions) {
  Topology t = net::build_topology(DatasetKind::MC, Variant::Optimized, positions);
  t.vocabulary = testing::toy_vocabulary();
  return t;
}

TEST(LossTest, KnownValues) {
  EXPECT_NEAR(bce_loss(0.5, 1), std::log(2.0), 1e-15);
  EXPECT_NEAR(bce_loss(0.25, 0), -std::log(0.75), 1e-15);
  EXPECT_NEAR(bce_loss(0.25, 1), -std::log(0.25), 1e-15);
  EXPECT_TRUE(std::isfinite(bce_loss(0.0, 1)));
  EXPECT_TRUE(std::isfinite(bce_loss(1.0, 0)));
  EXPECT_THROW(bce_loss(0.5, 2), InputError);
  const LossValue v = bce_loss(std::vector<double>{0.5, 0.25}, std::vector<int>{1, 0});
  EXPECT_NEAR(v.total, std::log(2.0) - std::log(0.75), 1e-15);
  EXPECT_EQ(v.per_sample.size(), 2u);
}

TEST(LossTest, DerivativeMatchesCentralDifference) {
  const double h = 1e-6;
  for (double p : {0.1, 0.3, 0.5, 0.8, 0.95}) {
    for (int y : {0, 1}) {
      const double numeric = (bce_loss(p + h, y) - bce_loss(p - h, y)) / (2 * h);
      EXPECT_NEAR(bce_derivative(p, y), numeric, 1e-7 * std::max(1.0, std::abs(numeric)));
    }
  }
}

// Ry(theta)|0> has <Z> = cos theta; the shift rule gives exactly -sin theta.
TEST(ShiftRuleTest, SingleRotation) {
  for (double theta : {0.0, 0.4, 1.3, 2.9, -0.7}) {
    auto z = [](double a) {
      return expect_z(apply_gate(PureState(1), ry(a), {0}), 0);
    };
    const double shift = 0.5 * (z(theta + std::numbers::pi / 2) - z(theta - std::numbers::pi / 2));
    EXPECT_NEAR(shift, -std::sin(theta), 1e-14);
  }
}

struct Fixture {
  Topology topology = mc_topology(2);
  ParamStore store;
  std::vector<CompiledSample> batch;
  std::unique_ptr<Network> net;

  explicit Fixture(std::uint64_t seed, int samples = 3) {
    std::mt19937_64 rng(seed);
    store = testing::random_store(topology, rng);
    net = std::make_unique<Network>(topology, store);
    for (int k = 0; k < samples; ++k) {
      net::Sample s = testing::random_text_sample(2, *topology.vocabulary, rng);
      s.label = k % 2;
      batch.push_back(net->compile(s));
    }
  }
};

TEST(GradientTest, ThreeRoutesAgree) {
  Fixture f(11);
  const auto values = f.store.values();
  const BatchEvaluation shift = evaluate_batch(*f.net, f.batch, values, nullptr, true);
  const BatchEvaluation fd = evaluate_batch(*f.net, f.batch, values, nullptr, true,
                                            {GradientMode::FiniteDifference, 1e-6});
  ASSERT_EQ(shift.gradient.size(), f.store.size());
  for (std::size_t slot = 0; slot < f.store.size(); ++slot) {
    const ParamId& id = f.store.ids()[slot];
    const double naive = grad_parameter_shift(*f.net, f.batch, f.store, id);
    EXPECT_NEAR(shift.gradient[slot], naive, 1e-11) << id.to_string();
    EXPECT_NEAR(shift.gradient[slot], fd.gradient[slot], 1e-6) << id.to_string();
  }
  EXPECT_NEAR(shift.loss.total, fd.loss.total, 1e-15);
}

TEST(GradientTest, NoisyRoutesAgree) {
  Fixture f(12, 2);
  const net::NoiseModel noise{NoiseChannel::amplitude_damping(0.05),
                              net::NoisePlacement::PerGate};
  const auto values = f.store.values();
  const BatchEvaluation shift = evaluate_batch(*f.net, f.batch, values, &noise, true);
  for (std::size_t slot = 0; slot < f.store.size(); ++slot) {
    const ParamId& id = f.store.ids()[slot];
    EXPECT_NEAR(shift.gradient[slot], grad_parameter_shift(*f.net, f.batch, f.store, id, &noise),
                1e-11);
  }
}

TEST(GradientTest, RepeatedSampleDoublesGradient) {
  Fixture f(13, 1);
  const auto values = f.store.values();
  const BatchEvaluation once = evaluate_batch(*f.net, f.batch, values, nullptr, true);
  std::vector<CompiledSample> twice{f.batch[0], f.batch[0]};
  const BatchEvaluation both = evaluate_batch(*f.net, twice, values, nullptr, true);
  for (std::size_t slot = 0; slot < f.store.size(); ++slot) {
    EXPECT_NEAR(both.gradient[slot], 2 * once.gradient[slot], 1e-13);
  }
}

// A word in both positions of a sample reads its embedding angles in several
// units; the gradient must collect every occurrence.
TEST(GradientTest, SharedEmbeddingCollectsAllOccurrences) {
  Fixture f(14, 0);
  const data::TokenId bob = f.topology.vocabulary->id("bob");
  net::Sample s;
  s.tokens = {bob, bob};
  s.label = 1;
  f.batch.push_back(f.net->compile(s));
  const ParamId id = ParamId::embedding("bob", 0);
  const std::size_t slot = f.store.slot(id);
  // Four units, each encoding the word twice.
  EXPECT_EQ(f.net->occurrences(f.batch[0], slot).size(), 8u);
  const auto values = f.store.values();
  const BatchEvaluation shift = evaluate_batch(*f.net, f.batch, values, nullptr, true);
  const BatchEvaluation fd = evaluate_batch(*f.net, f.batch, values, nullptr, true,
                                            {GradientMode::FiniteDifference, 1e-6});
  EXPECT_NEAR(shift.gradient[slot], fd.gradient[slot], 1e-7);
}

TEST(OptimizerTest, GradientDescentStep) {
  std::vector<double> v{1.0, -2.0};
  gd_step(v, std::vector<double>{1.0, -4.0}, 0.05);
  EXPECT_NEAR(v[0], 0.95, 1e-15);
  EXPECT_NEAR(v[1], -1.8, 1e-15);
}

TEST(OptimizerTest, AdamFirstStepIsSignTimesRate) {
  OptimizerConfig config;
  std::vector<double> v{0.0, 0.0, 0.0};
  AdamState state(3);
  adam_step(v, std::vector<double>{3.0, -1e-3, 0.0}, state, config);
  EXPECT_NEAR(v[0], -0.05, 1e-9);
  EXPECT_NEAR(v[1], 0.05, 1e-6);
  EXPECT_EQ(v[2], 0.0);
  EXPECT_EQ(state.step, 1u);
}

TEST(OptimizerTest, AdamMatchesHandComputation) {
  OptimizerConfig config;
  config.learning_rate = 0.1;
  std::vector<double> v{1.0};
  AdamState state(1);
  double m = 0, s = 0, x = 1.0;
  for (int t = 1; t <= 5; ++t) {
    const double g = 2 * x;
    m = 0.9 * m + 0.1 * g;
    s = 0.999 * s + 0.001 * g * g;
    const double mh = m / (1 - std::pow(0.9, t));
    const double vh = s / (1 - std::pow(0.999, t));
    x -= 0.1 * mh / (std::sqrt(vh) + 1e-8);
    adam_step(v, std::vector<double>{2 * v[0]}, state, config);
    EXPECT_NEAR(v[0], x, 1e-14);
  }
}

TEST(OptimizerTest, ZeroGradientKeepsParameters) {
  std::vector<double> v{0.3, 0.7};
  const std::vector<double> zero{0.0, 0.0};
  AdamState state(2);
  adam_step(v, zero, state, {});
  gd_step(v, zero, 0.5);
  EXPECT_EQ(v, (std::vector<double>{0.3, 0.7}));
}

TEST(OptimizerTest, ConfigValidation) {
  OptimizerConfig c;
  c.learning_rate = 0.0;
  EXPECT_THROW(c.validate(), InputError);
  c = {};
  c.beta1 = 1.0;
  EXPECT_THROW(c.validate(), InputError);
  c = {};
  c.eps = -1;
  EXPECT_THROW(c.validate(), InputError);
  TrainConfig t;
  t.epochs = -1;
  EXPECT_THROW(t.validate(), InputError);
}

TEST(InitTest, RangesAndDeterminism) {
  Topology t = mc_topology(4);
  ParamStore a, b;
  net::register_parameters(t, a);
  net::register_parameters(t, b);
  initialize_parameters(a, 3);
  initialize_parameters(b, 3);
  auto same = [](const ParamStore& x, const ParamStore& y) {
    return std::equal(x.values().begin(), x.values().end(), y.values().begin(), y.values().end());
  };
  EXPECT_TRUE(same(a, b));
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double v = a.values()[k];
    if (a.ids()[k].group == ParamGroup::Embedding) {
      EXPECT_LE(std::abs(v), 0.1);
    } else {
      EXPECT_GE(v, 0.0);
      EXPECT_LT(v, 2 * std::numbers::pi);
    }
  }
  initialize_parameters(b, 4);
  EXPECT_FALSE(same(a, b));
}

struct Small {
  cli::Experiment e;
  Small() {
    e = cli::load_experiment(DatasetKind::MC, Variant::Optimized,
                             cli::resolve_data_dir(std::nullopt), 2);
    e.train.resize(12);
    e.dev.resize(6);
  }
};

TEST(TrainTest, DeterministicCurveAndParameters) {
  Small s;
  TrainConfig config;
  config.epochs = 4;
  config.seed = 9;
  const TrainResult a = train(s.e.topology, s.e.train, s.e.dev, config);
  const TrainResult b = train(s.e.topology, s.e.train, s.e.dev, config);
  std::ostringstream ca, cb;
  write_loss_curve(ca, a.curve);
  write_loss_curve(cb, b.curve);
  EXPECT_EQ(ca.str(), cb.str());
  EXPECT_TRUE(std::ranges::equal(a.store.values(), b.store.values()));
  EXPECT_EQ(a.selected_epoch, b.selected_epoch);

  // Header plus epochs + 1 rows.
  std::istringstream lines(ca.str());
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "epoch,train_loss,train_acc,dev_loss,dev_acc");
  int rows = 0;
  while (std::getline(lines, line)) ++rows;
  EXPECT_EQ(rows, 5);
}

TEST(TrainTest, InitialLossNearChance) {
  Small s;
  TrainConfig config;
  config.epochs = 0;
  const TrainResult r = train(s.e.topology, s.e.train, {}, config);
  ASSERT_EQ(r.curve.size(), 1u);
  const double chance = static_cast<double>(s.e.train.size()) * std::log(2.0);
  EXPECT_NEAR(r.curve[0].train_loss, chance, 0.3 * chance);
  EXPECT_FALSE(r.curve[0].dev_loss.has_value());
}

TEST(TrainTest, LossDecreasesOnTextData) {
  Small s;
  TrainConfig config;
  config.epochs = 25;
  config.seed = 1;
  const TrainResult r = train(s.e.topology, s.e.train, {}, config);
  EXPECT_LT(r.curve.back().train_loss, r.curve.front().train_loss);
}

TEST(TrainTest, DevSelectionPicksBestRecordedEpoch) {
  Small s;
  TrainConfig config;
  config.epochs = 6;
  const TrainResult r = train(s.e.topology, s.e.train, s.e.dev, config);
  const auto& sel = r.curve[static_cast<std::size_t>(r.selected_epoch)];
  for (const auto& rec : r.curve) {
    EXPECT_LE(*rec.dev_accuracy, *sel.dev_accuracy);
    if (*rec.dev_accuracy == *sel.dev_accuracy) {
      EXPECT_GE(*rec.dev_loss, *sel.dev_loss);
    }
  }
  // The returned checkpoint reproduces the selected dev loss.
  const Network net(s.e.topology, r.store);
  std::vector<CompiledSample> dev;
  for (const auto& d : s.e.dev) dev.push_back(net.compile(d));
  const auto eval = evaluate_batch(net, dev, r.store.values(), nullptr, false);
  EXPECT_NEAR(eval.loss.total, *sel.dev_loss, 1e-12);
}

TEST(TrainTest, IrisLossMostlyNonIncreasing) {
  const cli::Experiment e = cli::load_experiment(DatasetKind::Iris, Variant::Optimized,
                                                 cli::resolve_data_dir(std::nullopt), 0);
  TrainConfig config;
  config.epochs = default_epochs(DatasetKind::Iris);
  const TrainResult r = train(e.topology, e.train, e.dev, config);
  int steps = 0;
  for (std::size_t k = 1; k < r.curve.size(); ++k) {
    steps += r.curve[k].train_loss <= r.curve[k - 1].train_loss;
  }
  EXPECT_GE(steps, 80) << "of " << config.epochs << " epochs";
}

TEST(TrainTest, MinibatchesAreSeeded) {
  Small s;
  TrainConfig config;
  config.epochs = 3;
  config.batch_size = 5;
  const TrainResult a = train(s.e.topology, s.e.train, {}, config);
  const TrainResult b = train(s.e.topology, s.e.train, {}, config);
  EXPECT_TRUE(std::ranges::equal(a.store.values(), b.store.values()));
}

TEST(TrainTest, GradientDescentOptimizer) {
  Small s;
  TrainConfig config;
  config.epochs = 2;
  config.optimizer.kind = OptimizerKind::GradientDescent;
  const TrainResult r = train(s.e.topology, s.e.train, {}, config);
  EXPECT_EQ(r.curve.size(), 3u);
}

TEST(TrainTest, NonFiniteFeatureIsRejected) {
  Topology t = net::build_topology(DatasetKind::Iris, Variant::Optimized, 2);
  net::Sample bad;
  bad.features = {0.3, std::numeric_limits<double>::quiet_NaN()};
  TrainConfig config;
  config.epochs = 1;
  EXPECT_THROW(train(t, {bad}, {}, config), InputError);
}

}  // namespace
}  // namespace qsam::learn
