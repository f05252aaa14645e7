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

#include "qsam/circuit/params.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qsam/core/error.hpp"

namespace qsam::circuit {
namespace {

std::string_view group_prefix(ParamGroup g) {
  switch (g) {
    case ParamGroup::U1:
      return "U1";
    case ParamGroup::U2:
      return "U2";
    case ParamGroup::U3:
      return "U3";
    case ParamGroup::Embedding:
      return "EMB";
  }
  return "?";
}

int parse_index(std::string_view text, std::string_view whole) {
  int value = -1;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value < 0) {
    throw ParseError("bad parameter index in '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

ParamId ParamId::ansatz(ParamGroup group, int index) {
  return ParamId{group, index, {}};
}

ParamId ParamId::embedding(std::string token, int index) {
  return ParamId{ParamGroup::Embedding, index, std::move(token)};
}

ParamId ParamId::parse(std::string_view text) {
  const auto first = text.find('.');
  const auto last = text.rfind('.');
  if (first == std::string_view::npos) {
    throw ParseError("parameter key '" + std::string(text) + "' has no '.'");
  }
  const auto head = text.substr(0, first);
  const int index = parse_index(text.substr(last + 1), text);
  if (head == "EMB") {
    if (last == first || last == first + 1) {
      throw ParseError("embedding key '" + std::string(text) + "' has no token");
    }
    return embedding(std::string(text.substr(first + 1, last - first - 1)), index);
  }
  if (first != last) {
    throw ParseError("ansatz key '" + std::string(text) + "' has extra fields");
  }
  for (ParamGroup g : {ParamGroup::U1, ParamGroup::U2, ParamGroup::U3}) {
    if (head == group_prefix(g)) return ansatz(g, index);
  }
  throw ParseError("unknown parameter group in '" + std::string(text) + "'");
}

std::string ParamId::to_string() const {
  std::string out(group_prefix(group));
  out += '.';
  if (group == ParamGroup::Embedding) {
    out += token;
    out += '.';
  }
  out += std::to_string(index);
  return out;
}

std::size_t ParamStore::add(const ParamId& id, double value) {
  if (auto it = index_.find(id); it != index_.end()) return it->second;
  const std::size_t slot = ids_.size();
  ids_.push_back(id);
  values_.push_back(value);
  index_.emplace(id, slot);
  return slot;
}

std::optional<std::size_t> ParamStore::find(const ParamId& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t ParamStore::slot(const ParamId& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) {
    throw InputError("unresolved parameter " + id.to_string());
  }
  return it->second;
}

std::size_t ParamStore::ansatz_count() const {
  return static_cast<std::size_t>(std::count_if(
      ids_.begin(), ids_.end(), [](const ParamId& p) { return !p.is_embedding(); }));
}

std::size_t ParamStore::embedding_count() const { return size() - ansatz_count(); }

std::string serialize_params(const ParamStore& store, const ParamMetadata& meta) {
  nlohmann::json doc;
  doc["metadata"] = {
      {"dataset", meta.dataset}, {"variant", meta.variant}, {"seed", meta.seed}};
  nlohmann::json params = nlohmann::json::object();
  for (std::size_t s = 0; s < store.size(); ++s) {
    params[store.ids()[s].to_string()] = store.values()[s];
  }
  doc["parameters"] = std::move(params);
  return doc.dump(2) + "\n";
}

std::pair<ParamStore, ParamMetadata> parse_params(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("parameter file is not valid JSON: ") + e.what());
  }
  ParamMetadata meta;
  ParamStore store;
  try {
    const auto& m = doc.at("metadata");
    meta.dataset = m.at("dataset").get<std::string>();
    meta.variant = m.at("variant").get<std::string>();
    meta.seed = m.at("seed").get<std::uint64_t>();
    for (const auto& [key, value] : doc.at("parameters").items()) {
      const double v = value.get<double>();
      if (!std::isfinite(v)) throw ParseError("non-finite value for " + key);
      store.add(ParamId::parse(key), v);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed parameter file: ") + e.what());
  }
  return {std::move(store), std::move(meta)};
}

void save_params(const std::filesystem::path& path, const ParamStore& store,
                 const ParamMetadata& meta) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out << serialize_params(store, meta);
  if (!out) throw Error("failed writing " + path.string());
}

std::pair<ParamStore, ParamMetadata> load_params(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open parameter file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_params(buf.str());
}

}  // namespace qsam::circuit
