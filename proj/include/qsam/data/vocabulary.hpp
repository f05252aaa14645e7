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

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace qsam::data {

using TokenId = int;

// Token table with ids in order of first insertion. The padding token is
// reserved and always takes the id after the last real token, so it never
// collides with one.
class Vocabulary {
 public:
  static constexpr std::string_view kPadToken = "<pad>";

  Vocabulary() = default;
  explicit Vocabulary(const std::vector<std::string>& tokens);

  // Returns the id of `token`, inserting it if new. Throws VocabularyError
  // for the reserved padding spelling.
  TokenId add(const std::string& token);

  bool contains(std::string_view token) const;
  // Throws VocabularyError for unknown tokens.
  TokenId id(std::string_view token) const;
  // Throws VocabularyError for ids that are neither real tokens nor PAD.
  const std::string& token(TokenId id) const;

  TokenId pad_id() const { return static_cast<TokenId>(tokens_.size()); }
  bool is_pad(TokenId id) const { return id == pad_id(); }
  bool is_known(TokenId id) const { return id >= 0 && id <= pad_id(); }

  // Real tokens only (PAD excluded).
  std::size_t size() const { return tokens_.size(); }
  const std::vector<std::string>& tokens() const { return tokens_; }

 private:
  std::vector<std::string> tokens_;
  std::map<std::string, TokenId, std::less<>> index_;
};

}  // namespace qsam::data
