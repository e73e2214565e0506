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

#ifndef HOLIM_ELABORATOR_HPP
#define HOLIM_ELABORATOR_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "holim/evaluator.hpp"
#include "holim/global_env.hpp"
#include "holim/kernel.hpp"
#include "holim/surface.hpp"
#include "holim/term.hpp"
#include "holim/value.hpp"

namespace holim {

/// Turns surface syntax into core terms against a fixed global environment.
///
/// A metavariable is a closed function over the local context it was
/// created in; each occurrence is `Meta(id)` applied to the variables of
/// that context, so solutions survive substitution and weakening.
class Elaborator {
 public:
  explicit Elaborator(const GlobalEnv &globals, KernelOptions options = {});
  Elaborator(const Elaborator &) = delete;
  Elaborator &operator=(const Elaborator &) = delete;

  /// Elaborates and zonks one declaration with a fresh meta context. The
  /// result still has to pass the kernel.
  Declaration elaborate_decl(const SurfaceDecl &decl);

  /// Checks `s` against `expected`, or infers its type. The returned term is
  /// zonked; the type may mention solved metas.
  std::pair<Term, Value> elaborate(const Context &ctx, const SurfaceTerm &s,
                                   const std::optional<Value> &expected = {});

  /// Makes `a` and `b` definitionally equal by solving metas. Throws E-UNIFY
  /// or E-OCCURS.
  void unify(const Context &ctx, const Value &a, const Value &b);

  /// Replaces solved metas by their solutions. Throws E-UNSOLVED.
  Term zonk(const Term &t, std::uint32_t depth = 0) const;

  /// A fresh meta of type `type` in `ctx`, applied to the context.
  std::pair<Term, Value> fresh_meta(const Context &ctx, const Value &type,
                                    const SourceSpan &span, std::string origin);

  MetaContext &metas() { return metas_; }
  const Evaluator &evaluator() const { return ev_; }

 private:
  Term check(const Context &ctx, const SurfaceTerm &s, const Value &expected);
  std::pair<Term, Value> infer(const Context &ctx, const SurfaceTerm &s);
  std::pair<Term, Value> infer_inserted(const Context &ctx, const SurfaceTerm &s);
  std::pair<Term, std::uint32_t> check_type(const Context &ctx,
                                            const SurfaceTerm &s);

  Term check_node(const Context &ctx, const SurfaceTerm &s, const Value &expected);
  std::pair<Term, Value> infer_node(const Context &ctx, const SurfaceTerm &s);
  std::pair<Term, Value> infer_prim(const Context &ctx, const SurfaceTerm &s);
  Term check_motive(const Context &ctx, const SurfaceTerm &s, const Term &domain);
  std::pair<Term, Value> insert_implicits(const Context &ctx, Term t, Value type,
                                          const SourceSpan &span);

  std::uint32_t level_of(const Context &ctx, const Value &type) const;
  Value type_of_neutral(const Context &ctx, const Value &v) const;

  void unify_sub(const Context &ctx, const Value &expected, const Value &actual);
  void unify_values(const Value &a, const Value &b, std::uint32_t depth);
  void unify_sub_values(const Value &expected, const Value &actual,
                        std::uint32_t depth);
  void unify_spines(const std::vector<Frame> &a, const std::vector<Frame> &b,
                    std::uint32_t depth);
  void solve(const Value &flex, const Value &rhs, std::uint32_t depth);

  Value eval(const Context &ctx, const Term &t) const {
    return ev_.eval(ctx.env(), t);
  }
  std::string show(const Context &ctx, const Value &v) const;

  const GlobalEnv &globals_;
  KernelOptions options_;
  MetaContext metas_;
  std::vector<std::vector<std::string>> meta_scopes_;
  Evaluator ev_;
};

}  // namespace holim

#endif  // HOLIM_ELABORATOR_HPP
