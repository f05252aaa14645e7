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


#include "qsam/data/text.hpp"

#include <fstream>
#include <sstream>

#include "qsam/core/error.hpp"
#include "qsam/core/log.hpp"

namespace qsam::data {

TextDataset parse_text(std::istream& in, const std::string& source,
                       std::optional<std::size_t> expected_vocabulary) {
  TextDataset out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::string where = source + ": line " + std::to_string(number);
    const auto tab = line.find('\t');
    if (tab == std::string::npos) throw ParseError(where + ": expected LABEL<TAB>sentence");
    const std::string label = line.substr(0, tab);
    TextRecord r;
    if (label == "0") {
      r.label = 0;
    } else if (label == "1") {
      r.label = 1;
    } else {
      throw ParseError(where + ": bad label '" + label + "'");
    }
    std::istringstream words(line.substr(tab + 1));
    for (std::string w; words >> w;) r.tokens.push_back(w);
    if (r.tokens.empty()) throw ParseError(where + ": empty sentence");
    if (r.tokens.size() > static_cast<std::size_t>(kMaxSentenceLength)) {
      throw ParseError(where + ": more than " + std::to_string(kMaxSentenceLength) + " tokens");
    }
    for (const auto& w : r.tokens) {
      if (w == Vocabulary::kPadToken) throw ParseError(where + ": reserved token " + w);
      out.vocabulary.add(w);
    }
    out.records.push_back(std::move(r));
  }
  if (out.records.empty()) throw ParseError(source + ": no records");
  if (expected_vocabulary && out.vocabulary.size() != *expected_vocabulary) {
    warn(source + ": vocabulary has " + std::to_string(out.vocabulary.size()) +
         " tokens, expected " + std::to_string(*expected_vocabulary));
  }
  return out;
}

TextDataset load_text(const std::filesystem::path& path,
                      std::optional<std::size_t> expected_vocabulary) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  return parse_text(in, path.string(), expected_vocabulary);
}

std::vector<TokenId> encode_tokens(const TextRecord& record, const Vocabulary& vocab,
                                   int positions) {
  if (record.tokens.size() > static_cast<std::size_t>(positions)) {
    throw InputError("sentence longer than " + std::to_string(positions) + " positions");
  }
  std::vector<TokenId> ids;
  for (const auto& w : record.tokens) ids.push_back(vocab.id(w));
  ids.resize(static_cast<std::size_t>(positions), vocab.pad_id());
  return ids;
}

}  // namespace qsam::data
