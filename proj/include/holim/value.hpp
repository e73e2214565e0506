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

#ifndef HOLIM_VALUE_HPP
#define HOLIM_VALUE_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "holim/term.hpp"

namespace holim {

struct ValueNode;
/// Values are immutable and shared; a null Value never escapes the
/// evaluator.
using Value = std::shared_ptr<const ValueNode>;

/// Persistent evaluation environment. Index 0 is the innermost binder.
class Env {
 public:
  Env() = default;

  Env extend(Value v) const;
  const Value &lookup(std::uint32_t index) const;
  std::uint32_t size() const { return size_; }

 private:
  struct Cell {
    Value value;
    std::shared_ptr<const Cell> next;
  };
  std::shared_ptr<const Cell> head_;
  std::uint32_t size_ = 0;
};

/// A term body waiting for one more variable.
struct Closure {
  Env env;
  Term body;
};

enum class ValueKind : std::uint8_t {
  kPi,
  kLam,
  kSigma,
  kPair,
  kUniverse,
  kId,
  kRefl,
  kNat,
  kZero,
  kSucc,
  kUnit,
  kStar,
  kEmpty,
  kBool,
  kTrue,
  kFalse,
  kNeutral,
};

enum class HeadKind : std::uint8_t { kLocal, kGlobal, kMeta };

/// The blocked head of a neutral value: a bound variable (as a de Bruijn
/// level), an axiom, or an unsolved metavariable.
struct Head {
  HeadKind kind;
  std::uint32_t id;  // level, global slot, or meta id
  bool operator==(const Head &) const = default;
};

enum class FrameKind : std::uint8_t {
  kApp,       // argument
  kFst,
  kSnd,
  kJ,         // motive, base, lhs, rhs
  kNatRec,    // motive, zero case, succ case
  kUnitRec,   // motive, star case
  kEmptyRec,  // motive
  kBoolRec,   // motive, true case, false case
};

/// One pending elimination on a neutral head.
struct Frame {
  FrameKind kind;
  std::vector<Value> args;
};

struct ValueNode {
  ValueKind kind;
  std::uint32_t level = 0;  // universe level
  bool implicit = false;    // Pi binder flavour
  std::string name;         // binder name, for readback
  // Pi/Sigma: domain; Pair: both halves; Id: type, lhs, rhs;
  // Refl: type, point; Succ: predecessor.
  std::vector<Value> parts;
  std::optional<Closure> closure;  // Pi/Sigma codomain, Lam body
  Head head{HeadKind::kLocal, 0};
  std::vector<Frame> spine;
  // Global heads with a body: the body's value, unfolded only on demand,
  // and the cached result of running the spine on it.
  Value definition;
  mutable Value unfolded;
};

namespace val {

Value pi(std::string name, Value domain, Closure codomain, bool implicit);
Value lam(std::string name, Closure body);
Value sigma(std::string name, Value first, Closure second);
Value pair(Value first, Value second);
Value universe(std::uint32_t level);
Value id(Value type, Value lhs, Value rhs);
Value refl(Value type, Value point);
Value nat();
Value zero();
Value succ(Value n);
Value unit();
Value star();
Value empty();
Value boolean();
Value true_();
Value false_();
Value neutral(Head head, std::vector<Frame> spine = {});
/// A defined global applied to `spine`; `definition` is its body's value.
Value glued(Head head, Value definition, std::vector<Frame> spine = {});
/// The neutral for the bound variable at de Bruijn level `level`.
Value local(std::uint32_t level);
/// Wraps an already-evaluated value in a constant closure.
Closure constant(Value v);

}  // namespace val

}  // namespace holim

#endif  // HOLIM_VALUE_HPP
