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
#include <numbers>
#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "qsam/cli/experiment.hpp"
#include "qsam/core/error.hpp"
#include "qsam/core/log.hpp"
#include "qsam/data/iris.hpp"
#include "qsam/data/split.hpp"
#include "qsam/data/text.hpp"
#include "qsam/data/vocabulary.hpp"

namespace qsam::data {
namespace {

using std::numbers::pi;

// Collects warnings for the lifetime of the object.
class WarningCapture {
 public:
  WarningCapture()
      : previous_(set_warning_handler([this](std::string_view m) { messages.emplace_back(m); })) {}
  ~WarningCapture() { set_warning_handler(previous_); }
  std::vector<std::string> messages;

 private:
  WarningHandler previous_;
};

std::filesystem::path data_dir() { return cli::resolve_data_dir(std::nullopt); }

TEST(VocabularyTest, IdsAndPad) {
  Vocabulary v;
  EXPECT_EQ(v.add("alice"), 0);
  EXPECT_EQ(v.add("bob"), 1);
  EXPECT_EQ(v.add("alice"), 0);
  EXPECT_EQ(v.pad_id(), 2);
  EXPECT_TRUE(v.is_pad(2));
  EXPECT_FALSE(v.is_known(3));
  EXPECT_EQ(v.id(Vocabulary::kPadToken), v.pad_id());
  EXPECT_THROW(v.add(std::string(Vocabulary::kPadToken)), VocabularyError);
  EXPECT_THROW(v.id("carol"), VocabularyError);
  EXPECT_THROW(v.token(5), VocabularyError);
}

TEST(IrisTest, CanonicalFile) {
  const auto records = load_iris(data_dir() / "iris.csv");
  EXPECT_EQ(records.size(), 100u);
  EXPECT_EQ(std::count_if(records.begin(), records.end(), [](auto& r) { return r.label == 0; }),
            50);
}

TEST(IrisTest, VirginicaFiltered) {
  std::istringstream in(std::string(kIrisHeader) +
                        "\n5.1,3.5,1.4,0.2,setosa\n6.3,3.3,6.0,2.5,virginica\n"
                        "7.0,3.2,4.7,1.4,Iris-versicolor\n5.0,3.0,1.6,0.2,0\n");
  const auto r = parse_iris(in, "t.csv", false);
  ASSERT_EQ(r.size(), 3u);
  EXPECT_EQ(r[1].label, 1);
  EXPECT_EQ(r[1].features[2], 4.7);
}

TEST(IrisTest, MissingColumnNamesRowAndColumn) {
  std::istringstream in(std::string(kIrisHeader) + "\n5.1,3.5,1.4,0.2,setosa\n5.1,3.5,,0.2,setosa\n");
  try {
    parse_iris(in, "t.csv", false);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    const std::string what = e.what();
    EXPECT_NE(what.find("row 3"), std::string::npos) << what;
    EXPECT_NE(what.find("petal_length"), std::string::npos) << what;
  }
}

TEST(IrisTest, Errors) {
  std::istringstream bad_header("a,b,c,d,e\n");
  EXPECT_THROW(parse_iris(bad_header, "t", false), ParseError);
  std::istringstream bad_label(std::string(kIrisHeader) + "\n5,3,1,0.2,rose\n");
  EXPECT_THROW(parse_iris(bad_label, "t", false), ParseError);
  std::istringstream negative(std::string(kIrisHeader) + "\n5,-3,1,0.2,setosa\n");
  EXPECT_THROW(parse_iris(negative, "t", false), ParseError);
  std::istringstream few(std::string(kIrisHeader) + "\n5,3,1,0.2,setosa\n");
  EXPECT_THROW(parse_iris(few, "t", true), InputError);
}

TEST(ScaleTest, MinMaxToAngles) {
  std::vector<IrisRecord> r(3);
  r[0].features = {1, 2, 3, 4};
  r[1].features = {3, 4, 5, 6};
  r[2].features = {2, 3, 4, 5};
  const auto s = scale_features(r);
  EXPECT_EQ(s[0][0], 0.0);
  EXPECT_EQ(s[1][0], pi);
  EXPECT_NEAR(s[2][0], pi / 2, 1e-15);
  // Idempotent given fixed statistics.
  const MinMaxStats stats = fit_min_max(r);
  EXPECT_EQ(scale_features(r, stats), s);
}

TEST(ScaleTest, ClampsOutsideTrainingRange) {
  std::vector<IrisRecord> train(2);
  train[0].features = {1, 1, 1, 1};
  train[1].features = {2, 2, 2, 2};
  std::vector<IrisRecord> test(1);
  test[0].features = {0.5, 3, 1.5, 2};
  const auto s = scale_features(test, fit_min_max(train));
  EXPECT_EQ(s[0][0], 0.0);
  EXPECT_EQ(s[0][1], pi);
  for (double v : s[0]) {
    EXPECT_GE(v, 0.0);
    EXPECT_LE(v, pi);
  }
}

TEST(ScaleTest, DegenerateFeatureWarns) {
  WarningCapture capture;
  std::vector<IrisRecord> r(2);
  r[0].features = {1, 1, 1, 1};
  r[1].features = {2, 1, 2, 2};
  const auto s = scale_features(r);
  EXPECT_NEAR(s[0][1], pi / 2, 1e-15);
  EXPECT_EQ(capture.messages.size(), 1u);
}

TEST(TextTest, McFile) {
  WarningCapture capture;
  const TextDataset d = load_text(data_dir() / "mc.txt", 17);
  EXPECT_EQ(d.records.size(), 130u);
  EXPECT_EQ(d.vocabulary.size(), 17u);
  EXPECT_TRUE(capture.messages.empty());
}

TEST(TextTest, RpFile) {
  WarningCapture capture;
  const TextDataset d = load_text(data_dir() / "rp.txt", 115);
  EXPECT_EQ(d.records.size(), 105u);
  EXPECT_EQ(d.vocabulary.size(), 115u);
  EXPECT_TRUE(capture.messages.empty());
  for (const auto& r : d.records) EXPECT_EQ(r.tokens.size(), 4u);
}

TEST(TextTest, PaddingAndIds) {
  std::istringstream in("1\tchef cooks meal\n0\twoman prepares tasty sauce\n");
  const TextDataset d = parse_text(in, "t");
  EXPECT_EQ(d.vocabulary.id("chef"), 0);
  EXPECT_EQ(d.vocabulary.id("sauce"), 6);
  const auto ids = encode_tokens(d.records[0], d.vocabulary);
  EXPECT_EQ(ids, (std::vector<TokenId>{0, 1, 2, d.vocabulary.pad_id()}));
  std::istringstream again("1\tchef cooks meal\n0\twoman prepares tasty sauce\n");
  EXPECT_EQ(parse_text(again, "t").vocabulary.tokens(), d.vocabulary.tokens());
}

TEST(TextTest, VocabularyMismatchWarns) {
  WarningCapture capture;
  std::istringstream in("1\ta b c\n");
  EXPECT_EQ(parse_text(in, "t", 7).vocabulary.size(), 3u);
  EXPECT_EQ(capture.messages.size(), 1u);
}

TEST(TextTest, Errors) {
  std::istringstream bad_label("2\ta b c\n");
  EXPECT_THROW(parse_text(bad_label, "t"), ParseError);
  std::istringstream empty("1\t   \n");
  EXPECT_THROW(parse_text(empty, "t"), ParseError);
  std::istringstream no_tab("1 a b c\n");
  EXPECT_THROW(parse_text(no_tab, "t"), ParseError);
  std::istringstream long_line("1\ta b c d e\n");
  EXPECT_THROW(parse_text(long_line, "t"), ParseError);
}

void expect_partition(const SplitIndices& s, std::size_t n) {
  std::set<std::size_t> all;
  for (const auto* part : {&s.train, &s.dev, &s.test}) {
    for (std::size_t k : *part) EXPECT_TRUE(all.insert(k).second) << "duplicate " << k;
  }
  EXPECT_EQ(all.size(), n);
}

TEST(SplitTest, IrisStratified) {
  std::vector<int> labels(100);
  for (int k = 0; k < 100; ++k) labels[static_cast<std::size_t>(k)] = k < 50 ? 0 : 1;
  const auto s = split(labels, {80, 0, 20, true, 5});
  EXPECT_EQ(s.train.size(), 80u);
  EXPECT_EQ(s.test.size(), 20u);
  expect_partition(s, 100);
  const auto ones = std::count_if(s.test.begin(), s.test.end(),
                                  [&](std::size_t k) { return labels[k] == 1; });
  EXPECT_EQ(ones, 10);
}

TEST(SplitTest, SeededAndExact) {
  std::vector<int> labels(130, 0);
  const auto a = split(labels, {70, 30, 30, false, 3});
  const auto b = split(labels, {70, 30, 30, false, 3});
  const auto c = split(labels, {70, 30, 30, false, 4});
  EXPECT_EQ(a.train, b.train);
  EXPECT_EQ(a.dev, b.dev);
  EXPECT_NE(a.train, c.train);
  EXPECT_EQ(a.dev.size(), 30u);
  expect_partition(a, 130);
  EXPECT_THROW(split(labels, {70, 30, 31, false, 3}), InputError);
}

TEST(ExperimentTest, LoadsEveryDataset) {
  WarningCapture capture;
  const auto iris = cli::load_experiment(net::DatasetKind::Iris, net::Variant::Basic, data_dir(), 1);
  EXPECT_EQ(iris.train.size(), 80u);
  EXPECT_EQ(iris.test.size(), 20u);
  for (const auto& s : iris.test) {
    for (double f : s.features) {
      EXPECT_GE(f, 0.0);
      EXPECT_LE(f, pi);
    }
  }
  const auto mc = cli::load_experiment(net::DatasetKind::MC, net::Variant::Optimized, data_dir(), 1);
  EXPECT_EQ(mc.dev.size(), 30u);
  EXPECT_EQ(mc.topology.vocabulary->size(), 17u);
  const auto rp = cli::load_experiment(net::DatasetKind::RP, net::Variant::Optimized, data_dir(), 1);
  EXPECT_EQ(rp.train.size(), 74u);
  EXPECT_EQ(rp.test.size(), 31u);
}

}  // namespace
}  // namespace qsam::data
