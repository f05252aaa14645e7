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

#include <compare>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qsam::circuit {

enum class ParamGroup { U1, U2, U3, Embedding };

// Names a trainable angle. Ansatz angles are "U1.3"; embedding angles carry
// the word they embed, "EMB.<token>.3".
struct ParamId {
  ParamGroup group = ParamGroup::U1;
  int index = 0;
  std::string token;  // Embedding only.

  static ParamId ansatz(ParamGroup group, int index);
  static ParamId embedding(std::string token, int index);
  // Inverse of to_string(); throws ParseError.
  static ParamId parse(std::string_view text);

  std::string to_string() const;
  bool is_embedding() const { return group == ParamGroup::Embedding; }

  auto operator<=>(const ParamId&) const = default;
};

// Parameter values addressed by ParamId, stored densely by slot so hot loops
// can index a flat vector. Slots are assigned in insertion order and never
// move.
class ParamStore {
 public:
  // Registers `id` with `value` if absent; returns its slot either way (an
  // existing value is left untouched).
  std::size_t add(const ParamId& id, double value = 0.0);

  bool contains(const ParamId& id) const { return index_.contains(id); }
  std::optional<std::size_t> find(const ParamId& id) const;
  // Throws InputError for unknown ids.
  std::size_t slot(const ParamId& id) const;

  double get(const ParamId& id) const { return values_[slot(id)]; }
  void set(const ParamId& id, double value) { values_[slot(id)] = value; }

  std::size_t size() const { return ids_.size(); }
  const std::vector<ParamId>& ids() const { return ids_; }
  std::span<const double> values() const { return values_; }
  std::span<double> values() { return values_; }

  // |theta1| + |theta2| + |theta3|; embeddings are excluded.
  std::size_t ansatz_count() const;
  std::size_t embedding_count() const;

 private:
  std::vector<ParamId> ids_;
  std::vector<double> values_;
  std::map<ParamId, std::size_t> index_;
};

struct ParamMetadata {
  std::string dataset;
  std::string variant;
  std::uint64_t seed = 0;

  bool operator==(const ParamMetadata&) const = default;
};

// JSON document {"metadata": {...}, "parameters": {"U1.0": ..., ...}} with
// keys sorted and doubles printed in shortest round-trip form.
std::string serialize_params(const ParamStore& store, const ParamMetadata& meta);
// Throws ParseError on malformed documents.
std::pair<ParamStore, ParamMetadata> parse_params(std::string_view text);

void save_params(const std::filesystem::path& path, const ParamStore& store,
                 const ParamMetadata& meta);
std::pair<ParamStore, ParamMetadata> load_params(const std::filesystem::path& path);

}  // namespace qsam::circuit
