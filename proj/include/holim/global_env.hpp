// Copyright 2026 The holim Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HOLIM_GLOBAL_ENV_HPP
#define HOLIM_GLOBAL_ENV_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "holim/term.hpp"
#include "holim/value.hpp"

namespace holim {

struct GlobalEntry {
  std::string name;
  Term type_term;
  std::optional<Term> body_term;
  Value type;
  std::optional<Value> value;  // absent for axioms
  SourceSpan span;

  bool is_axiom() const { return !body_term.has_value(); }
};

/// Checked declarations in dependency order. Append-only; copying is cheap
/// enough to take snapshots since entries share their values.
class GlobalEnv {
 public:
  /// Throws E-DUPLICATE if the name is taken.
  void add(GlobalEntry entry);

  std::optional<std::size_t> slot(std::string_view name) const;
  const GlobalEntry *find(std::string_view name) const;
  const GlobalEntry &at(std::size_t slot) const { return entries_[slot]; }
  std::size_t size() const { return entries_.size(); }
  const std::vector<GlobalEntry> &entries() const { return entries_; }

 private:
  std::vector<GlobalEntry> entries_;
  std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace holim

#endif  // HOLIM_GLOBAL_ENV_HPP
