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

#include "holim/kernel.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <utility>

#include "holim/printer.hpp"

namespace holim {

Context Context::bind(std::string name, Value type) const {
  Context out = *this;
  out.env_ = env_.extend(val::local(depth()));
  out.names_.push_back(std::move(name));
  out.types_.push_back(std::move(type));
  return out;
}

const Value &Context::type_of_index(std::uint32_t index) const {
  if (index >= types_.size()) {
    throw Error(ErrorCode::kStuck, "variable index out of range");
  }
  return types_[types_.size() - 1 - index];
}

std::string Kernel::show(const Context &ctx, const Value &v) const {
  return show_term(ev_.quote(v, ctx.depth()), ctx.names());
}

void Kernel::mismatch(const Context &ctx, const Value &expected,
                      const Value &actual, const Term &t) const {
  Value e = ev_.force(expected);
  Value a = ev_.force(actual);
  ErrorCode code = ErrorCode::kType;
  if (e->kind == ValueKind::kUniverse && a->kind == ValueKind::kUniverse) {
    code = ErrorCode::kUniverse;
  }
  throw Error(code, fmt::format("type mismatch in '{}'\n  expected: {}\n  actual:   {}",
                                show_term(t, ctx.names()), show(ctx, e),
                                show(ctx, a)));
}

std::uint32_t Kernel::infer_universe(const Context &ctx, const Term &t) const {
  Value ty = ev_.force(infer(ctx, t));
  if (ty->kind != ValueKind::kUniverse) {
    throw Error(ErrorCode::kType,
                fmt::format("expected a type, but '{}' has type {}",
                            show_term(t, ctx.names()), show(ctx, ty)));
  }
  return ty->level;
}

void Kernel::check(const Context &ctx, const Term &t,
                   const Value &expected0) const {
  Value expected = ev_.force(expected0);
  switch (t.kind()) {
    case TermKind::kLam: {
      if (expected->kind != ValueKind::kPi) {
        throw Error(ErrorCode::kType,
                    fmt::format("function '{}' checked against non-function type {}",
                                show_term(t, ctx.names()), show(ctx, expected)));
      }
      Value x = val::local(ctx.depth());
      check(ctx.bind(t.name(), expected->parts[0]), t[0],
            ev_.instantiate(*expected->closure, x));
      return;
    }
    case TermKind::kPair: {
      if (expected->kind != ValueKind::kSigma) {
        throw Error(ErrorCode::kType,
                    fmt::format("pair '{}' checked against non-Sigma type {}",
                                show_term(t, ctx.names()), show(ctx, expected)));
      }
      check(ctx, t[0], expected->parts[0]);
      Value first = ev_.eval(ctx.env(), t[0]);
      check(ctx, t[1], ev_.instantiate(*expected->closure, first));
      return;
    }
    default: {
      Value actual = infer(ctx, t);
      if (!ev_.subsumes(expected, actual, ctx.depth())) {
        mismatch(ctx, expected, actual, t);
      }
      return;
    }
  }
}

Value Kernel::infer_eliminator_motive(const Context &ctx, const Term &motive,
                                      const Term &domain) const {
  Term motive_type = Term::pi("_", domain, Term::universe(options_.max_universe));
  check(ctx, motive, ev_.eval(ctx.env(), motive_type));
  return ev_.eval(ctx.env(), motive);
}

Value Kernel::infer(const Context &ctx, const Term &t) const {
  const Env &env = ctx.env();
  auto eval = [&](const Term &s) { return ev_.eval(env, s); };
  switch (t.kind()) {
    case TermKind::kVar:
      return ctx.type_of_index(t.index());
    case TermKind::kUniverse:
      if (t.level() + 1 > options_.max_universe) {
        throw Error(ErrorCode::kUniverse,
                    fmt::format("Type {} has no type below the universe limit {}",
                                t.level(), options_.max_universe));
      }
      return val::universe(t.level() + 1);
    case TermKind::kPi:
    case TermKind::kSigma: {
      std::uint32_t i = infer_universe(ctx, t[0]);
      std::uint32_t j = infer_universe(ctx.bind(t.name(), eval(t[0])), t[1]);
      return val::universe(std::max(i, j));
    }
    case TermKind::kLam:
      throw Error(ErrorCode::kType,
                  fmt::format("cannot infer the type of the function '{}'",
                              show_term(t, ctx.names())));
    case TermKind::kPair:
      throw Error(ErrorCode::kType,
                  fmt::format("cannot infer the type of the pair '{}'",
                              show_term(t, ctx.names())));
    case TermKind::kApp: {
      Value fty = ev_.force(infer(ctx, t[0]));
      if (fty->kind != ValueKind::kPi) {
        throw Error(ErrorCode::kNotFunction,
                    fmt::format("'{}' is applied but has type {}",
                                show_term(t[0], ctx.names()), show(ctx, fty)));
      }
      check(ctx, t[1], fty->parts[0]);
      return ev_.instantiate(*fty->closure, eval(t[1]));
    }
    case TermKind::kFst:
    case TermKind::kSnd: {
      Value pty = ev_.force(infer(ctx, t[0]));
      if (pty->kind != ValueKind::kSigma) {
        throw Error(ErrorCode::kType,
                    fmt::format("projection from '{}' of non-Sigma type {}",
                                show_term(t[0], ctx.names()), show(ctx, pty)));
      }
      if (t.kind() == TermKind::kFst) return pty->parts[0];
      return ev_.instantiate(*pty->closure, ev_.fst(eval(t[0])));
    }
    case TermKind::kId: {
      std::uint32_t i = infer_universe(ctx, t[0]);
      Value a = eval(t[0]);
      check(ctx, t[1], a);
      check(ctx, t[2], a);
      return val::universe(i);
    }
    case TermKind::kRefl: {
      infer_universe(ctx, t[0]);
      Value a = eval(t[0]);
      check(ctx, t[1], a);
      Value x = eval(t[1]);
      return val::id(a, x, x);
    }
    case TermKind::kJ: {
      const Term &motive = t[0], &base = t[1], &lhs = t[2], &rhs = t[3],
                 &path = t[4];
      Value pty = ev_.force(infer(ctx, path));
      if (pty->kind != ValueKind::kId) {
        throw Error(ErrorCode::kType,
                    fmt::format("J eliminates '{}' of non-identity type {}",
                                show_term(path, ctx.names()), show(ctx, pty)));
      }
      Value a = pty->parts[0];
      check(ctx, lhs, a);
      check(ctx, rhs, a);
      Value l = eval(lhs), r = eval(rhs);
      if (!ev_.convert(l, pty->parts[1], ctx.depth()) ||
          !ev_.convert(r, pty->parts[2], ctx.depth())) {
        throw Error(ErrorCode::kType,
                    fmt::format("J endpoints {} and {} do not match the path type {}",
                                show(ctx, l), show(ctx, r), show(ctx, pty)));
      }
      Term aq = ev_.quote(a, ctx.depth());
      // Pi (x y : A) (p : Id A x y) -> Type max
      Term motive_type = Term::pi(
          "x", aq,
          Term::pi("y", shift(aq, 0, 1),
                   Term::pi("p", Term::id(shift(aq, 0, 2), Term::var(1), Term::var(0)),
                            Term::universe(options_.max_universe))));
      check(ctx, motive, eval(motive_type));
      // Pi (z : A) -> C z z (refl A z)
      Term c1 = shift(motive, 0, 1);
      Term base_type = Term::pi(
          "z", aq,
          Term::app(Term::app(Term::app(c1, Term::var(0)), Term::var(0)),
                    Term::refl(shift(aq, 0, 1), Term::var(0))));
      check(ctx, base, eval(base_type));
      Value c = eval(motive);
      return ev_.apply(ev_.apply(ev_.apply(c, l), r), eval(path));
    }
    case TermKind::kNat:
    case TermKind::kUnit:
    case TermKind::kEmpty:
    case TermKind::kBool:
      return val::universe(0);
    case TermKind::kZero:
      return val::nat();
    case TermKind::kSucc:
      check(ctx, t[0], val::nat());
      return val::nat();
    case TermKind::kStar:
      return val::unit();
    case TermKind::kTrue:
    case TermKind::kFalse:
      return val::boolean();
    case TermKind::kNatRec: {
      check(ctx, t[3], val::nat());
      Value c = infer_eliminator_motive(ctx, t[0], Term::nat());
      check(ctx, t[1], ev_.apply(c, val::zero()));
      // Pi (k : Nat) -> C k -> C (succ k)
      Term step = Term::pi(
          "k", Term::nat(),
          Term::pi("r", Term::app(shift(t[0], 0, 1), Term::var(0)),
                   Term::app(shift(t[0], 0, 2), Term::succ(Term::var(1)))));
      check(ctx, t[2], eval(step));
      return ev_.apply(c, eval(t[3]));
    }
    case TermKind::kUnitRec: {
      check(ctx, t[2], val::unit());
      Value c = infer_eliminator_motive(ctx, t[0], Term::unit());
      check(ctx, t[1], ev_.apply(c, val::star()));
      return ev_.apply(c, eval(t[2]));
    }
    case TermKind::kEmptyRec: {
      check(ctx, t[1], val::empty());
      Value c = infer_eliminator_motive(ctx, t[0], Term::empty());
      return ev_.apply(c, eval(t[1]));
    }
    case TermKind::kBoolRec: {
      check(ctx, t[3], val::boolean());
      Value c = infer_eliminator_motive(ctx, t[0], Term::boolean());
      check(ctx, t[1], ev_.apply(c, val::true_()));
      check(ctx, t[2], ev_.apply(c, val::false_()));
      return ev_.apply(c, eval(t[3]));
    }
    case TermKind::kGlobal: {
      const GlobalEntry *entry = globals_.find(t.name());
      if (entry == nullptr) {
        throw Error(ErrorCode::kUnresolved, "unknown global '" + t.name() + "'");
      }
      return entry->type;
    }
    case TermKind::kMeta:
      throw Error(ErrorCode::kStuck, "metavariable reached the kernel");
    case TermKind::kAnn: {
      infer_universe(ctx, t[1]);
      Value ty = eval(t[1]);
      check(ctx, t[0], ty);
      return ty;
    }
  }
  throw Error(ErrorCode::kStuck, "unknown term kind");
}

void check_decl_into(GlobalEnv &env, const Declaration &decl,
                     KernelOptions options) {
  if (env.find(decl.name) != nullptr) {
    throw Error(ErrorCode::kDuplicate,
                "duplicate declaration '" + decl.name + "'", decl.span);
  }
  try {
    if (has_meta(decl.type) || (decl.body && has_meta(*decl.body))) {
      throw Error(ErrorCode::kStuck, "metavariable reached the kernel");
    }
    Kernel kernel(env, options);
    Context ctx;
    kernel.infer_universe(ctx, decl.type);
    GlobalEntry entry{decl.name, decl.type, std::nullopt,
                      kernel.evaluator().eval(Env{}, decl.type), std::nullopt,
                      decl.span};
    if (decl.body) {
      kernel.check(ctx, *decl.body, entry.type);
      entry.body_term = decl.body;
      entry.value = kernel.evaluator().eval(Env{}, *decl.body);
    }
    env.add(std::move(entry));
  } catch (const Error &e) {
    Diagnostic d = e.diagnostic();
    d.message = fmt::format("in '{}': {}", decl.name, d.message);
    if (d.span.file.empty()) d.span = decl.span;
    throw Error(std::move(d));
  }
}

GlobalEnv check_decl(const GlobalEnv &env, const Declaration &decl,
                     KernelOptions options) {
  GlobalEnv out = env;
  check_decl_into(out, decl, options);
  return out;
}

}  // namespace holim
