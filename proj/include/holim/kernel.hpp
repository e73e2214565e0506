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

#ifndef HOLIM_KERNEL_HPP
#define HOLIM_KERNEL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "holim/evaluator.hpp"
#include "holim/global_env.hpp"
#include "holim/term.hpp"
#include "holim/value.hpp"

namespace holim {

struct KernelOptions {
  /// Highest universe that may be mentioned; `Type n : Type (n+1)` needs
  /// n + 1 <= max_universe.
  std::uint32_t max_universe = 3;
};

/// Local typing context: one entry per enclosing binder.
class Context {
 public:
  Context bind(std::string name, Value type) const;

  std::uint32_t depth() const { return static_cast<std::uint32_t>(types_.size()); }
  const Env &env() const { return env_; }
  const Value &type_of_index(std::uint32_t index) const;
  const std::vector<std::string> &names() const { return names_; }

 private:
  std::vector<std::string> names_;
  std::vector<Value> types_;
  Env env_;
};

/// The trusted checker. Terms are expected to be Meta-free; every judgment
/// is recomputed from scratch, independent of the elaborator.
class Kernel {
 public:
  explicit Kernel(const GlobalEnv &globals, KernelOptions options = {})
      : globals_(globals), options_(options), ev_(globals) {}

  Value infer(const Context &ctx, const Term &t) const;
  void check(const Context &ctx, const Term &t, const Value &expected) const;
  /// Infers the type of `t`, which must be a universe; returns its level.
  std::uint32_t infer_universe(const Context &ctx, const Term &t) const;

  const Evaluator &evaluator() const { return ev_; }

 private:
  Value infer_eliminator_motive(const Context &ctx, const Term &motive,
                                const Term &domain) const;
  std::string show(const Context &ctx, const Value &v) const;
  [[noreturn]] void mismatch(const Context &ctx, const Value &expected,
                             const Value &actual, const Term &t) const;

  const GlobalEnv &globals_;
  KernelOptions options_;
  Evaluator ev_;
};

/// Checks `decl` against `env` and appends it. Errors name the declaration
/// and carry its span.
void check_decl_into(GlobalEnv &env, const Declaration &decl,
                     KernelOptions options = {});

/// Value-returning form: returns `env` extended by `decl`.
GlobalEnv check_decl(const GlobalEnv &env, const Declaration &decl,
                     KernelOptions options = {});

}  // namespace holim

#endif  // HOLIM_KERNEL_HPP
