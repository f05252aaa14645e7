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

#include "qsam/data/vocabulary.hpp"

#include "qsam/core/error.hpp"

namespace qsam::data {

Vocabulary::Vocabulary(const std::vector<std::string>& tokens) {
  for (const auto& t : tokens) add(t);
}

TokenId Vocabulary::add(const std::string& token) {
  if (token == kPadToken) {
    throw VocabularyError("token '" + token + "' is reserved for padding");
  }
  if (token.empty()) throw VocabularyError("empty token");
  if (auto it = index_.find(token); it != index_.end()) return it->second;
  const auto id = static_cast<TokenId>(tokens_.size());
  tokens_.push_back(token);
  index_.emplace(token, id);
  return id;
}

bool Vocabulary::contains(std::string_view token) const {
  return index_.find(token) != index_.end();
}

TokenId Vocabulary::id(std::string_view token) const {
  if (token == kPadToken) return pad_id();
  auto it = index_.find(token);
  if (it == index_.end()) {
    throw VocabularyError("unknown token '" + std::string(token) + "'");
  }
  return it->second;
}

const std::string& Vocabulary::token(TokenId id) const {
  static const std::string pad(kPadToken);
  if (id == pad_id()) return pad;
  if (id < 0 || id > pad_id()) {
    throw VocabularyError("unknown token id " + std::to_string(id));
  }
  return tokens_[static_cast<std::size_t>(id)];
}

}  // namespace qsam::data
