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

#ifndef HOLIM_EVALUATOR_HPP
#define HOLIM_EVALUATOR_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "holim/global_env.hpp"
#include "holim/term.hpp"
#include "holim/value.hpp"

namespace holim {

struct MetaEntry {
  Value type;
  std::optional<Value> solution;
  std::uint32_t depth;  // binder depth at creation; solutions live below it
  SourceSpan span;
  std::string origin;   // what the meta stands for, for error messages
};

/// Metavariables of one declaration. Solutions are write-once.
class MetaContext {
 public:
  std::uint32_t fresh(Value type, std::uint32_t depth, SourceSpan span,
                      std::string origin);
  const MetaEntry &at(std::uint32_t id) const { return metas_[id]; }
  void solve(std::uint32_t id, Value solution);
  std::size_t size() const { return metas_.size(); }
  std::size_t solved_count() const { return solved_; }

 private:
  std::vector<MetaEntry> metas_;
  std::size_t solved_ = 0;
};

/// Normalization by evaluation over a fixed global environment. With a
/// MetaContext attached, solved metas evaluate to their solutions.
class Evaluator {
 public:
  explicit Evaluator(const GlobalEnv &globals,
                     const MetaContext *metas = nullptr)
      : globals_(globals), metas_(metas) {}

  Value eval(const Env &env, const Term &t) const;
  Value instantiate(const Closure &c, Value arg) const;

  Value apply(const Value &fn, Value arg) const;
  Value fst(const Value &p) const;
  Value snd(const Value &p) const;
  Value j(Value motive, Value base, Value lhs, Value rhs,
          const Value &path) const;
  Value natrec(Value motive, Value zero_case, Value succ_case,
               const Value &n) const;
  Value unitrec(Value motive, Value star_case, const Value &u) const;
  Value emptyrec(Value motive, const Value &e) const;
  Value boolrec(Value motive, Value true_case, Value false_case,
                const Value &b) const;
  Value apply_frame(const Value &v, const Frame &frame) const;

  /// Replaces solved meta heads by their solutions.
  Value force_metas(const Value &v) const;
  /// Replaces solved metas and unfolds defined globals until the head is
  /// rigid: the weak head normal form.
  Value force(const Value &v) const;
  /// One step of global unfolding; `v` must be a neutral with a definition.
  Value unfold(const Value &v) const;

  /// Reads a value back to a beta/iota-normal term at binder depth `depth`.
  /// Defined globals stay folded unless `unfold_globals` is set.
  Term quote(const Value &v, std::uint32_t depth,
             bool unfold_globals = false) const;

  /// Definitional equality: structural, with eta for functions and pairs.
  bool convert(const Value &a, const Value &b, std::uint32_t depth) const;

  /// `convert`, plus universe cumulativity in covariant positions: a type
  /// in Type i is accepted where Type j with i <= j is expected.
  bool subsumes(const Value &expected, const Value &actual,
                std::uint32_t depth) const;

  const GlobalEnv &globals() const { return globals_; }
  const MetaContext *metas() const { return metas_; }

 private:
  bool convert_spine(const std::vector<Frame> &a, const std::vector<Frame> &b,
                     std::uint32_t depth) const;

  const GlobalEnv &globals_;
  const MetaContext *metas_;
};

/// Free-function forms of the core operations over an empty meta context.
Value eval(const GlobalEnv &globals, const Env &env, const Term &t);
Term quote(const GlobalEnv &globals, const Value &v, std::uint32_t depth,
           bool unfold_globals = false);
bool convert(const GlobalEnv &globals, const Value &a, const Value &b,
             std::uint32_t depth);

}  // namespace holim

#endif  // HOLIM_EVALUATOR_HPP
