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


#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "qsam/circuit/block.hpp"
#include "qsam/circuit/params.hpp"
#include "qsam/core/error.hpp"

namespace qsam::circuit {
namespace {

using std::numbers::pi;

TEST(ParamIdTest, RoundTrip) {
  for (const ParamId& id :
       {ParamId::ansatz(ParamGroup::U1, 0), ParamId::ansatz(ParamGroup::U3, 7),
        ParamId::embedding("alice", 3), ParamId::embedding("a.b", 11)}) {
    EXPECT_EQ(ParamId::parse(id.to_string()), id);
  }
  EXPECT_EQ(ParamId::ansatz(ParamGroup::U2, 4).to_string(), "U2.4");
  EXPECT_EQ(ParamId::embedding("bob", 2).to_string(), "EMB.bob.2");
}

TEST(ParamIdTest, ParseErrors) {
  for (const char* bad : {"U1", "U4.0", "U1.x", "U1.-1", "EMB.3", "U1.0.1", ""}) {
    EXPECT_THROW(ParamId::parse(bad), ParseError) << bad;
  }
}

TEST(ParamStoreTest, SlotsAndSharing) {
  ParamStore s;
  const ParamId a = ParamId::ansatz(ParamGroup::U1, 0);
  EXPECT_EQ(s.add(a, 0.5), 0u);
  EXPECT_EQ(s.add(ParamId::embedding("w", 0), 0.1), 1u);
  EXPECT_EQ(s.add(a, 9.0), 0u);
  EXPECT_EQ(s.get(a), 0.5);
  s.set(a, 1.25);
  EXPECT_EQ(s.values()[0], 1.25);
  EXPECT_EQ(s.ansatz_count(), 1u);
  EXPECT_EQ(s.embedding_count(), 1u);
  EXPECT_THROW(s.slot(ParamId::ansatz(ParamGroup::U2, 0)), InputError);
  EXPECT_FALSE(s.find(ParamId::ansatz(ParamGroup::U2, 0)).has_value());
}

TEST(ParamSerializationTest, LosslessRoundTrip) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  ParamStore s;
  for (int k = 0; k < 8; ++k) s.add(ParamId::ansatz(ParamGroup::U2, k), u(rng));
  for (int k = 0; k < 6; ++k) s.add(ParamId::embedding("dinner", k), u(rng));
  s.add(ParamId::ansatz(ParamGroup::U1, 0), 1e-300);
  const ParamMetadata meta{"mc", "optimized", 42};
  const std::string text = serialize_params(s, meta);
  const auto [back, meta_back] = parse_params(text);
  EXPECT_EQ(meta_back, meta);
  ASSERT_EQ(back.size(), s.size());
  for (const ParamId& id : s.ids()) EXPECT_EQ(back.get(id), s.get(id)) << id.to_string();
  EXPECT_EQ(serialize_params(back, meta_back), text);
}

TEST(ParamSerializationTest, Malformed) {
  EXPECT_THROW(parse_params("not json"), ParseError);
  EXPECT_THROW(parse_params(R"({"metadata": {}, "parameters": {}})"), ParseError);
  EXPECT_THROW(
      parse_params(
          R"({"metadata": {"dataset": "iris", "variant": "basic", "seed": 1}, "parameters": {"U9.0": 1.0}})"),
      ParseError);
  EXPECT_THROW(
      parse_params(
          R"({"metadata": {"dataset": "iris", "variant": "basic", "seed": 1}, "parameters": {"U1.0": "x"}})"),
      ParseError);
}

TEST(AnsatzTest, CountsForAllWidths) {
  for (int n = 2; n <= 8; ++n) {
    const BlockCircuit b = build_ansatz_block(n, ParamGroup::U2);
    EXPECT_EQ(b.trainable_count(), static_cast<std::size_t>(n));
    EXPECT_EQ(b.two_qubit_count(), static_cast<std::size_t>(n));
    EXPECT_EQ(b.kept, (std::vector<int>{0, 1}));
    b.validate();
  }
  EXPECT_EQ(build_ansatz_block(8, ParamGroup::U3).kept, (std::vector<int>{0}));
  EXPECT_THROW(build_ansatz_block(1, ParamGroup::U1), InputError);
  EXPECT_THROW(build_ansatz_block(3, ParamGroup::Embedding), InputError);
}

TEST(AnsatzTest, TwoQubitRingHasBothDirections) {
  const BlockCircuit b = build_ansatz_block(2, ParamGroup::U1);
  std::vector<std::vector<int>> cnots;
  for (const auto& op : b.ops) {
    if (op.kind == GateKind::CNOT) cnots.push_back(op.targets);
  }
  EXPECT_EQ(cnots, (std::vector<std::vector<int>>{{0, 1}, {1, 0}}));
}

TEST(AnsatzTest, TableArithmetic) {
  // 16 U1 instances and 4 + 1 eight-qubit blocks.
  auto total = [](int unit) {
    return 16 * static_cast<int>(build_ansatz_block(unit, ParamGroup::U1).two_qubit_count()) +
           5 * static_cast<int>(build_ansatz_block(8, ParamGroup::U2).two_qubit_count());
  };
  EXPECT_EQ(total(3), 88);
  EXPECT_EQ(total(2), 72);
  EXPECT_EQ(total(6), 136);
  EXPECT_EQ(total(4), 104);
}

TEST(IrisEncoderTest, Behaviour) {
  const ParamStore empty;
  const BlockCircuit zero = build_iris_encoder(0.0);
  EXPECT_EQ(zero.trainable_count(), 0u);
  EXPECT_EQ(zero.two_qubit_count(), 0u);
  EXPECT_NEAR(expect_z(run_block(zero, PureState(1), empty), 0), 1.0, 1e-15);
  EXPECT_NEAR(expect_z(run_block(build_iris_encoder(pi), PureState(1), empty), 0), -1.0, 1e-15);
  EXPECT_THROW(build_iris_encoder(-0.01), InputError);
  EXPECT_THROW(build_iris_encoder(3.2), InputError);
  EXPECT_THROW(build_iris_encoder(std::nan("")), InputError);
}

TEST(WordEncoderTest, ParameterCounts) {
  const data::Vocabulary vocab({"alice", "cooks"});
  ParamStore mc;
  const BlockCircuit m = build_word_encoder(vocab.id("alice"), DatasetKind::MC, vocab, mc);
  EXPECT_EQ(mc.embedding_count(), 6u);
  EXPECT_EQ(m.two_qubit_count(), 0u);
  EXPECT_EQ(m.num_qubits, 2);
  ParamStore rp;
  const BlockCircuit r = build_word_encoder(vocab.id("cooks"), DatasetKind::RP, vocab, rp);
  EXPECT_EQ(rp.embedding_count(), 12u);
  EXPECT_EQ(r.two_qubit_count(), 1u);
  // Same word twice shares its angles.
  build_word_encoder(vocab.id("cooks"), DatasetKind::RP, vocab, rp);
  EXPECT_EQ(rp.embedding_count(), 12u);
}

TEST(WordEncoderTest, PadIsIdentity) {
  const data::Vocabulary vocab({"alice"});
  ParamStore s;
  const BlockCircuit pad = build_word_encoder(vocab.pad_id(), DatasetKind::RP, vocab, s);
  EXPECT_TRUE(pad.ops.empty());
  EXPECT_EQ(s.size(), 0u);
  EXPECT_THROW(word_encoder_circuit(7, DatasetKind::MC, vocab), VocabularyError);
  EXPECT_THROW(word_encoder_circuit(0, DatasetKind::Iris, vocab), InputError);
}

TEST(RunBlockTest, ZeroAnglesFixVacuum) {
  const BlockCircuit b = build_ansatz_block(5, ParamGroup::U2);
  ParamStore s;
  for (const auto& op : b.ops) {
    if (op.param) s.add(*op.param, 0.0);
  }
  const MixedState out = run_block(b, PureState(5), s);
  EXPECT_EQ(out.num_qubits(), 2);
  EXPECT_NEAR(out.rho()(0, 0).real(), 1.0, 1e-15);
  EXPECT_NEAR(expect_z(out, 0), 1.0, 1e-15);
  EXPECT_NEAR(expect_z(out, 1), 1.0, 1e-15);
}

TEST(RunBlockTest, SingleRotation) {
  BlockCircuit b;
  b.num_qubits = 1;
  b.kept = {0};
  b.ops.push_back(GateOp::rotation(GateKind::Rx, 0, ParamId::ansatz(ParamGroup::U1, 0)));
  ParamStore s;
  s.add(ParamId::ansatz(ParamGroup::U1, 0), 0.8);
  EXPECT_NEAR(expect_z(run_block(b, PureState(1), s), 0), std::cos(0.8), 1e-14);
  EXPECT_THROW(run_block(b, PureState(1), ParamStore{}), InputError);
  EXPECT_THROW(run_block(b, PureState(2), s), InputError);
}

TEST(RunBlockTest, KeepAllIsPure) {
  const data::Vocabulary vocab({"w"});
  ParamStore s;
  BlockCircuit b = build_word_encoder(0, DatasetKind::RP, vocab, s);
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.0, 2 * pi);
  for (double& v : s.values()) v = u(rng);
  EXPECT_NEAR(run_block(b, PureState(2), s).purity(), 1.0, 1e-10);
}

TEST(RunBlockTest, Deterministic) {
  const BlockCircuit b = build_ansatz_block(4, ParamGroup::U1);
  ParamStore s;
  for (int k = 0; k < 4; ++k) s.add(ParamId::ansatz(ParamGroup::U1, k), 0.3 * k + 0.1);
  const Matrix a = run_block(b, PureState(4), s).rho();
  const Matrix c = run_block(b, PureState(4), s).rho();
  EXPECT_TRUE(a == c);
}

TEST(BlockTest, ValidateRejectsBadOps) {
  BlockCircuit b;
  b.num_qubits = 2;
  b.kept = {0};
  b.ops.push_back(GateOp::cnot(0, 0));
  EXPECT_THROW(b.validate(), InputError);
  b.ops = {GateOp::fixed_rotation(GateKind::Rx, 2, 0.1)};
  EXPECT_THROW(b.validate(), InputError);
  b.ops.clear();
  b.kept.clear();
  EXPECT_THROW(b.validate(), InputError);
}

TEST(BlockTest, Names) {
  EXPECT_EQ(parse_dataset("rp"), DatasetKind::RP);
  EXPECT_EQ(parse_variant("optimized"), Variant::Optimized);
  EXPECT_THROW(parse_dataset("mnist"), InputError);
  EXPECT_THROW(parse_variant("fast"), InputError);
  EXPECT_EQ(to_string(DatasetKind::MC), "mc");
  EXPECT_EQ(to_string(Variant::Basic), "basic");
}

}  // namespace
}  // namespace qsam::circuit
