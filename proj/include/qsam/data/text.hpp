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

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qsam/data/vocabulary.hpp"

namespace qsam::data {

inline constexpr int kMaxSentenceLength = 4;

struct TextRecord {
  std::vector<std::string> tokens;
  int label = 0;
};

struct TextDataset {
  std::vector<TextRecord> records;
  Vocabulary vocabulary;  // first-appearance order
};

// Lines are "LABEL<TAB>token token ..." with LABEL 0 or 1 and 1 to 4 tokens.
// Throws ParseError naming the line. When `expected_vocabulary` is set, a
// different vocabulary size is reported through warn().
TextDataset parse_text(std::istream& in, const std::string& source,
                       std::optional<std::size_t> expected_vocabulary = {});
TextDataset load_text(const std::filesystem::path& path,
                      std::optional<std::size_t> expected_vocabulary = {});

// Token ids padded with PAD at the end to `positions`.
std::vector<TokenId> encode_tokens(const TextRecord& record, const Vocabulary& vocab,
                                   int positions = kMaxSentenceLength);

}  // namespace qsam::data
