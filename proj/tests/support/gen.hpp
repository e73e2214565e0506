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

#ifndef HOLIM_TESTS_SUPPORT_GEN_HPP
#define HOLIM_TESTS_SUPPORT_GEN_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <vector>

#include "holim/global_env.hpp"
#include "holim/kernel.hpp"
#include "holim/term.hpp"

namespace holim::testing {

/// The small type language the generator draws from.
enum class GTy : std::uint8_t { kNat, kBool, kUnit, kFun, kPair };

/// Core syntax of a generator type: Nat, Bool, Unit, Nat -> Nat, Nat * Bool.
Term type_term(GTy ty);

/// A typing context of generator types; the last entry is Var 0.
using GCtx = std::vector<GTy>;

Context kernel_context(const GlobalEnv &globals, const GCtx &ctx);

/// Random well-typed terms, built by construction from the expected type.
class TermGen {
 public:
  explicit TermGen(std::uint64_t seed) : rng_(seed) {}

  /// A term of type `ty` in `ctx`, at most `depth` constructors deep.
  Term gen(GTy ty, const GCtx &ctx, int depth);
  GTy random_type();
  /// A term convertible to `t` but syntactically different: a beta redex,
  /// an eta expansion or an eliminator on a constructor.
  Term variant(const Term &t, GTy ty, const GCtx &ctx);
  std::mt19937_64 &rng() { return rng_; }

 private:
  int pick(int n);
  std::optional<Term> variable(GTy ty, const GCtx &ctx);
  Term leaf(GTy ty, const GCtx &ctx);

  std::mt19937_64 rng_;
};

/// Big-step interpreter for closed generated terms, written directly over
/// syntax and sharing nothing with the evaluator.
struct OValue;
using OPtr = std::shared_ptr<const OValue>;

struct OValue {
  GTy kind;
  std::uint64_t nat = 0;
  bool boolean = false;
  std::optional<Term> body;  // kFun
  std::vector<OPtr> env;     // kFun, innermost last
  OPtr first, second;        // kPair
};

OPtr interpret(const Term &t, const std::vector<OPtr> &env = {});

/// Equality of first-order results (Nat, Bool, Unit, and pairs of them).
bool same_result(const OPtr &a, const OPtr &b);

}  // namespace holim::testing

#endif  // HOLIM_TESTS_SUPPORT_GEN_HPP
