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

#include "holim/elaborator.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <map>

#include "holim/printer.hpp"

namespace holim {

namespace {

struct UnifyFailure {
  ErrorCode code;
  std::string detail;
};

bool is_flex(const Value &v) {
  return v->kind == ValueKind::kNeutral && v->head.kind == HeadKind::kMeta;
}

bool is_glued(const Value &v) {
  return v->kind == ValueKind::kNeutral && v->definition != nullptr;
}

// Whether an application chain is rooted at `@name`.
bool explicit_head(SurfaceTerm s) {
  while (s->kind == SurfaceKind::kApp) s = s->kids[0];
  return s->kind == SurfaceKind::kExplicitVar;
}

bool is_hole(const SurfaceTerm &s) { return s->kind == SurfaceKind::kHole; }

std::optional<std::uint32_t> lookup_local(const Context &ctx,
                                          const std::string &name) {
  const auto &names = ctx.names();
  for (std::size_t i = names.size(); i-- > 0;) {
    if (names[i] == name) {
      return static_cast<std::uint32_t>(names.size() - 1 - i);
    }
  }
  return std::nullopt;
}

Term apply_all(Term head, std::vector<Term> args) {
  for (Term &a : args) head = Term::app(std::move(head), std::move(a));
  return head;
}

Env locals_env(std::uint32_t depth) {
  Env env;
  for (std::uint32_t l = 0; l < depth; ++l) env = env.extend(val::local(l));
  return env;
}

// Rewrites the free variables of `t` (a term at depth `depth`) through
// `position`, which maps de Bruijn levels to binder positions of an
// `arity`-ary lambda. Fails on variables outside the map and on `self`.
Term rename(const Term &t, std::uint32_t depth, std::uint32_t arity,
            const std::map<std::uint32_t, std::uint32_t> &position,
            std::uint32_t self, std::uint32_t under = 0) {
  switch (t.kind()) {
    case TermKind::kVar: {
      std::uint32_t i = t.index();
      if (i < under) return t;
      std::uint32_t level = depth - 1 - (i - under);
      auto it = position.find(level);
      if (it == position.end()) {
        throw UnifyFailure{ErrorCode::kUnify,
                           "solution mentions a variable outside the "
                           "metavariable's scope"};
      }
      return Term::var(arity - 1 - it->second + under);
    }
    case TermKind::kMeta:
      if (t.number() == self) {
        throw UnifyFailure{ErrorCode::kOccurs,
                           fmt::format("?{} occurs in its own solution", self)};
      }
      return t;
    default:
      break;
  }
  const auto &kids = t.children();
  if (kids.empty()) return t;
  std::vector<Term> out;
  out.reserve(kids.size());
  for (std::size_t i = 0; i < kids.size(); ++i) {
    bool bound = t.binds() && i + 1 == kids.size();
    out.push_back(rename(kids[i], depth, arity, position, self,
                         bound ? under + 1 : under));
  }
  return Term::make(t.kind(), std::move(out), t.number(), t.name(), t.implicit());
}

}  // namespace

Elaborator::Elaborator(const GlobalEnv &globals, KernelOptions options)
    : globals_(globals), options_(options), ev_(globals, &metas_) {}

std::string Elaborator::show(const Context &ctx, const Value &v) const {
  return show_term(ev_.quote(v, ctx.depth()), ctx.names());
}

std::pair<Term, Value> Elaborator::fresh_meta(const Context &ctx,
                                              const Value &type,
                                              const SourceSpan &span,
                                              std::string origin) {
  std::uint32_t id = metas_.fresh(type, ctx.depth(), span, std::move(origin));
  meta_scopes_.resize(metas_.size());
  meta_scopes_[id] = ctx.names();
  std::vector<Term> args;
  for (std::uint32_t l = 0; l < ctx.depth(); ++l) {
    args.push_back(Term::var(ctx.depth() - 1 - l));
  }
  Term t = apply_all(Term::meta(id), std::move(args));
  return {t, eval(ctx, t)};
}

// ---------------------------------------------------------------------------
// Unification

void Elaborator::unify(const Context &ctx, const Value &a, const Value &b) {
  try {
    unify_values(a, b, ctx.depth());
  } catch (const UnifyFailure &f) {
    throw Error(f.code, fmt::format("cannot unify {} with {}: {}", show(ctx, a),
                                    show(ctx, b), f.detail));
  }
}

void Elaborator::unify_sub(const Context &ctx, const Value &expected,
                           const Value &actual) {
  try {
    unify_sub_values(expected, actual, ctx.depth());
  } catch (const UnifyFailure &f) {
    ErrorCode code = f.code;
    Value e = ev_.force(expected), a = ev_.force(actual);
    if (e->kind == ValueKind::kUniverse && a->kind == ValueKind::kUniverse) {
      code = ErrorCode::kUniverse;
    } else if (code == ErrorCode::kUnify &&
               !has_meta(ev_.quote(expected, ctx.depth())) &&
               !has_meta(ev_.quote(actual, ctx.depth()))) {
      // Nothing left to infer: an ordinary type error.
      code = ErrorCode::kType;
    }
    throw Error(code, fmt::format("type mismatch\n  expected: {}\n  actual:   {}\n  ({})",
                                  show(ctx, expected), show(ctx, actual),
                                  f.detail));
  }
}

void Elaborator::solve(const Value &flex, const Value &rhs, std::uint32_t depth) {
  std::uint32_t id = flex->head.id;
  std::map<std::uint32_t, std::uint32_t> position;
  bool pattern = true;
  for (std::size_t k = 0; k < flex->spine.size() && pattern; ++k) {
    const Frame &f = flex->spine[k];
    if (f.kind != FrameKind::kApp) {
      pattern = false;
      break;
    }
    Value arg = ev_.force_metas(f.args[0]);
    if (arg->kind != ValueKind::kNeutral || arg->head.kind != HeadKind::kLocal ||
        !arg->spine.empty() || position.count(arg->head.id) != 0) {
      pattern = false;
      break;
    }
    position[arg->head.id] = static_cast<std::uint32_t>(k);
  }
  if (!pattern) {
    if (ev_.convert(flex, rhs, depth)) return;
    throw UnifyFailure{ErrorCode::kUnify,
                       fmt::format("?{} is applied to arguments that are not "
                                   "distinct variables",
                                   id)};
  }
  auto arity = static_cast<std::uint32_t>(flex->spine.size());
  Term body = rename(ev_.quote(rhs, depth), depth, arity, position, id);
  for (std::uint32_t k = 0; k < arity; ++k) body = Term::lam("x", std::move(body));
  metas_.solve(id, ev_.eval(Env{}, body));
}

void Elaborator::unify_spines(const std::vector<Frame> &a,
                              const std::vector<Frame> &b, std::uint32_t depth) {
  if (a.size() != b.size()) {
    throw UnifyFailure{ErrorCode::kUnify, "spines differ in length"};
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].kind != b[i].kind) {
      throw UnifyFailure{ErrorCode::kUnify, "different eliminations"};
    }
    for (std::size_t k = 0; k < a[i].args.size(); ++k) {
      unify_values(a[i].args[k], b[i].args[k], depth);
    }
  }
}

void Elaborator::unify_values(const Value &a0, const Value &b0,
                              std::uint32_t depth) {
  Value a = ev_.force_metas(a0);
  Value b = ev_.force_metas(b0);
  if (a == b) return;
  if (is_flex(a) && is_flex(b) && a->head == b->head) {
    unify_spines(a->spine, b->spine, depth);
    return;
  }
  if (is_flex(a)) return solve(a, b, depth);
  if (is_flex(b)) return solve(b, a, depth);

  bool ga = is_glued(a), gb = is_glued(b);
  if (ga && gb && a->head == b->head) {
    std::size_t before = metas_.solved_count();
    try {
      unify_spines(a->spine, b->spine, depth);
      return;
    } catch (const UnifyFailure &) {
      // Retrying after unfolding is only sound if nothing was committed.
      if (metas_.solved_count() != before) throw;
    }
  }
  if (ga && (!gb || a->head.id >= b->head.id)) {
    return unify_values(ev_.unfold(a), b, depth);
  }
  if (gb) return unify_values(a, ev_.unfold(b), depth);

  Value x = val::local(depth);
  auto lam_like = [](const Value &v) { return v->kind == ValueKind::kLam; };
  if (lam_like(a) && lam_like(b)) {
    return unify_values(ev_.instantiate(*a->closure, x),
                        ev_.instantiate(*b->closure, x), depth + 1);
  }
  if (lam_like(a) && b->kind == ValueKind::kNeutral) {
    return unify_values(ev_.instantiate(*a->closure, x), ev_.apply(b, x),
                        depth + 1);
  }
  if (lam_like(b) && a->kind == ValueKind::kNeutral) {
    return unify_values(ev_.apply(a, x), ev_.instantiate(*b->closure, x),
                        depth + 1);
  }
  if (a->kind == ValueKind::kPair && b->kind == ValueKind::kNeutral) {
    unify_values(a->parts[0], ev_.fst(b), depth);
    return unify_values(a->parts[1], ev_.snd(b), depth);
  }
  if (b->kind == ValueKind::kPair && a->kind == ValueKind::kNeutral) {
    unify_values(ev_.fst(a), b->parts[0], depth);
    return unify_values(ev_.snd(a), b->parts[1], depth);
  }

  auto rigid = [&] {
    return UnifyFailure{ErrorCode::kUnify, "rigid mismatch"};
  };
  if (a->kind != b->kind) throw rigid();
  switch (a->kind) {
    case ValueKind::kPi:
      if (a->implicit != b->implicit) throw rigid();
      [[fallthrough]];
    case ValueKind::kSigma:
      unify_values(a->parts[0], b->parts[0], depth);
      return unify_values(ev_.instantiate(*a->closure, x),
                          ev_.instantiate(*b->closure, x), depth + 1);
    case ValueKind::kPair:
    case ValueKind::kId:
    case ValueKind::kRefl:
    case ValueKind::kSucc:
      for (std::size_t i = 0; i < a->parts.size(); ++i) {
        unify_values(a->parts[i], b->parts[i], depth);
      }
      return;
    case ValueKind::kUniverse:
      if (a->level != b->level) {
        throw UnifyFailure{ErrorCode::kUniverse,
                           fmt::format("Type {} is not Type {}", a->level, b->level)};
      }
      return;
    case ValueKind::kNeutral:
      if (!(a->head == b->head)) throw rigid();
      return unify_spines(a->spine, b->spine, depth);
    default:
      return;
  }
}

void Elaborator::unify_sub_values(const Value &expected0, const Value &actual0,
                                  std::uint32_t depth) {
  Value e = ev_.force_metas(expected0);
  Value a = ev_.force_metas(actual0);
  if (is_flex(e) || is_flex(a) ||
      (is_glued(e) && is_glued(a) && e->head == a->head)) {
    return unify_values(e, a, depth);
  }
  e = ev_.force(e);
  a = ev_.force(a);
  if (e->kind == ValueKind::kUniverse && a->kind == ValueKind::kUniverse) {
    if (a->level > e->level) {
      throw UnifyFailure{ErrorCode::kUniverse,
                         fmt::format("Type {} does not fit in Type {}", a->level,
                                     e->level)};
    }
    return;
  }
  Value x = val::local(depth);
  if (e->kind == ValueKind::kPi && a->kind == ValueKind::kPi &&
      e->implicit == a->implicit) {
    unify_values(e->parts[0], a->parts[0], depth);
    return unify_sub_values(ev_.instantiate(*e->closure, x),
                            ev_.instantiate(*a->closure, x), depth + 1);
  }
  if (e->kind == ValueKind::kSigma && a->kind == ValueKind::kSigma) {
    unify_sub_values(e->parts[0], a->parts[0], depth);
    return unify_sub_values(ev_.instantiate(*e->closure, x),
                            ev_.instantiate(*a->closure, x), depth + 1);
  }
  unify_values(e, a, depth);
}

// ---------------------------------------------------------------------------
// Zonking

Term Elaborator::zonk(const Term &t, std::uint32_t depth) const {
  Term head = t;
  while (head.kind() == TermKind::kApp) head = head[0];
  if (head.kind() == TermKind::kMeta) {
    const MetaEntry &m = metas_.at(head.number());
    if (!m.solution) {
      std::vector<std::string> scope;
      if (head.number() < meta_scopes_.size()) scope = meta_scopes_[head.number()];
      throw Error(ErrorCode::kUnsolved,
                  fmt::format("unsolved metavariable ?{} ({}) of type {}",
                              head.number(), m.origin,
                              show_term(ev_.quote(m.type, m.depth), scope)),
                  m.span);
    }
    Term solved = ev_.quote(ev_.eval(locals_env(depth), t), depth);
    return has_meta(solved) ? zonk(solved, depth) : solved;
  }
  const auto &kids = t.children();
  if (kids.empty()) return t;
  std::vector<Term> out;
  out.reserve(kids.size());
  for (std::size_t i = 0; i < kids.size(); ++i) {
    bool bound = t.binds() && i + 1 == kids.size();
    out.push_back(zonk(kids[i], bound ? depth + 1 : depth));
  }
  return Term::make(t.kind(), std::move(out), t.number(), t.name(), t.implicit());
}

// ---------------------------------------------------------------------------
// Universe levels of types, for `Id _ x y`.

Value Elaborator::type_of_neutral(const Context &ctx, const Value &v) const {
  Value type;
  switch (v->head.kind) {
    case HeadKind::kLocal:
      type = ctx.type_of_index(ctx.depth() - 1 - v->head.id);
      break;
    case HeadKind::kGlobal:
      type = globals_.at(v->head.id).type;
      break;
    case HeadKind::kMeta:
      type = metas_.at(v->head.id).type;
      // Meta types are stated over the creation context, which the spine
      // reproduces; the application frames are already accounted for.
      if (v->spine.size() == metas_.at(v->head.id).depth) return type;
      throw Error(ErrorCode::kType, "cannot determine the type of a metavariable");
  }
  Value cur = val::neutral(v->head);
  for (const Frame &f : v->spine) {
    Value t = ev_.force(type);
    const auto &a = f.args;
    switch (f.kind) {
      case FrameKind::kApp:
        if (t->kind != ValueKind::kPi) throw Error(ErrorCode::kType, "ill-typed spine");
        type = ev_.instantiate(*t->closure, a[0]);
        break;
      case FrameKind::kFst:
        if (t->kind != ValueKind::kSigma) throw Error(ErrorCode::kType, "ill-typed spine");
        type = t->parts[0];
        break;
      case FrameKind::kSnd:
        if (t->kind != ValueKind::kSigma) throw Error(ErrorCode::kType, "ill-typed spine");
        type = ev_.instantiate(*t->closure, ev_.fst(cur));
        break;
      case FrameKind::kJ:
        type = ev_.apply(ev_.apply(ev_.apply(a[0], a[2]), a[3]), cur);
        break;
      default:
        type = ev_.apply(a[0], cur);
        break;
    }
    cur = ev_.apply_frame(cur, f);
  }
  return type;
}

std::uint32_t Elaborator::level_of(const Context &ctx, const Value &type) const {
  Value t = ev_.force(type);
  switch (t->kind) {
    case ValueKind::kUniverse:
      return t->level + 1;
    case ValueKind::kPi:
    case ValueKind::kSigma: {
      Context inner = ctx.bind(t->name, t->parts[0]);
      Value body = ev_.instantiate(*t->closure, val::local(ctx.depth()));
      return std::max(level_of(ctx, t->parts[0]), level_of(inner, body));
    }
    case ValueKind::kId:
      return level_of(ctx, t->parts[0]);
    case ValueKind::kNat:
    case ValueKind::kUnit:
    case ValueKind::kEmpty:
    case ValueKind::kBool:
      return 0;
    case ValueKind::kNeutral: {
      Value u = ev_.force(type_of_neutral(ctx, t));
      if (u->kind == ValueKind::kUniverse) return u->level;
      break;
    }
    default:
      break;
  }
  throw Error(ErrorCode::kType,
              fmt::format("'{}' is not a type", show(ctx, type)));
}

// ---------------------------------------------------------------------------
// Bidirectional elaboration

std::pair<Term, Value> Elaborator::insert_implicits(const Context &ctx, Term t,
                                                    Value type,
                                                    const SourceSpan &span) {
  for (;;) {
    Value f = ev_.force(type);
    if (f->kind != ValueKind::kPi || !f->implicit) return {t, type};
    auto [m, mv] = fresh_meta(ctx, f->parts[0], span,
                              fmt::format("implicit argument '{}'", f->name));
    t = Term::app(std::move(t), m);
    type = ev_.instantiate(*f->closure, mv);
  }
}

std::pair<Term, Value> Elaborator::infer_inserted(const Context &ctx,
                                                  const SurfaceTerm &s) {
  auto [t, ty] = infer(ctx, s);
  if (explicit_head(s)) return {t, ty};
  return insert_implicits(ctx, std::move(t), std::move(ty), s->span);
}

std::pair<Term, std::uint32_t> Elaborator::check_type(const Context &ctx,
                                                      const SurfaceTerm &s) {
  auto [t, ty] = infer_inserted(ctx, s);
  Value u = ev_.force(ty);
  if (u->kind != ValueKind::kUniverse) {
    throw Error(ErrorCode::kType,
                fmt::format("expected a type, but '{}' has type {}",
                            print_term(s), show(ctx, ty)),
                s->span);
  }
  return {t, u->level};
}

Term Elaborator::check(const Context &ctx, const SurfaceTerm &s,
                       const Value &expected) {
  try {
    return check_node(ctx, s, expected);
  } catch (const Error &e) {
    throw e.with_span(s->span);
  }
}

std::pair<Term, Value> Elaborator::infer(const Context &ctx,
                                         const SurfaceTerm &s) {
  try {
    return infer_node(ctx, s);
  } catch (const Error &e) {
    throw e.with_span(s->span);
  }
}

Term Elaborator::check_node(const Context &ctx, const SurfaceTerm &s,
                            const Value &expected0) {
  Value expected = ev_.force(expected0);
  const SurfaceNode &n = *s;

  if (expected->kind == ValueKind::kPi && expected->implicit &&
      !(n.kind == SurfaceKind::kLam && n.implicit) && !explicit_head(s)) {
    Context inner = ctx.bind(expected->name, expected->parts[0]);
    Value x = val::local(ctx.depth());
    Term body = check(inner, s, ev_.instantiate(*expected->closure, x));
    return Term::lam(expected->name, std::move(body));
  }

  switch (n.kind) {
    case SurfaceKind::kLam: {
      if (expected->kind != ValueKind::kPi) break;
      if (n.implicit != expected->implicit) {
        throw Error(ErrorCode::kType,
                    fmt::format("implicit binder '{}' where an explicit one is expected",
                                n.name));
      }
      if (SurfaceTerm annot = surf::lam_type(n)) {
        auto [ty, level] = check_type(ctx, annot);
        unify(ctx, expected->parts[0], eval(ctx, ty));
      }
      Context inner = ctx.bind(n.name, expected->parts[0]);
      Value x = val::local(ctx.depth());
      Term body = check(inner, surf::lam_body(n), ev_.instantiate(*expected->closure, x));
      return Term::lam(n.name, std::move(body));
    }
    case SurfaceKind::kPair: {
      if (expected->kind != ValueKind::kSigma) break;
      Term a = check(ctx, n.kids[0], expected->parts[0]);
      Term b = check(ctx, n.kids[1], ev_.instantiate(*expected->closure, eval(ctx, a)));
      return Term::pair(std::move(a), std::move(b));
    }
    case SurfaceKind::kHole:
      return fresh_meta(ctx, expected, s->span, "hole").first;
    case SurfaceKind::kPrim:
      if (n.prim == Prim::kRefl && !n.kids.empty() &&
          expected->kind == ValueKind::kId) {
        const Value &type = expected->parts[0];
        Term a = ev_.quote(type, ctx.depth());
        if (!is_hole(n.kids[0])) {
          a = check_type(ctx, n.kids[0]).first;
          unify(ctx, type, eval(ctx, a));
        }
        Term x = ev_.quote(expected->parts[1], ctx.depth());
        if (!is_hole(n.kids[1])) {
          x = check(ctx, n.kids[1], type);
          unify(ctx, expected->parts[1], eval(ctx, x));
        }
        try {
          unify_values(expected->parts[1], expected->parts[2], ctx.depth());
        } catch (const UnifyFailure &f) {
          throw Error(f.code == ErrorCode::kUnify ? ErrorCode::kType : f.code,
                      fmt::format("refl does not prove {} = {}: the sides are "
                                  "not definitionally equal",
                                  show(ctx, expected->parts[1]),
                                  show(ctx, expected->parts[2])));
        }
        return Term::refl(std::move(a), std::move(x));
      }
      if (n.kids.empty() && prim_arity(n.prim) > 0) {
        // A bare eliminator or constructor: eta-expand and check that.
        std::vector<SurfaceTerm> args;
        for (std::size_t i = 0; i < prim_arity(n.prim); ++i) {
          args.push_back(surf::var(fmt::format("%{}", i), s->span));
        }
        SurfaceTerm body = surf::prim(n.prim, args, s->span);
        for (std::size_t i = args.size(); i-- > 0;) {
          body = surf::lam(args[i]->name, false, nullptr, body, s->span);
        }
        return check(ctx, body, expected);
      }
      break;
    default:
      break;
  }
  auto [t, actual] = infer_inserted(ctx, s);
  unify_sub(ctx, expected0, actual);
  return t;
}

std::pair<Term, Value> Elaborator::infer_node(const Context &ctx,
                                              const SurfaceTerm &s) {
  const SurfaceNode &n = *s;
  const std::uint32_t max = options_.max_universe;
  switch (n.kind) {
    case SurfaceKind::kVar:
    case SurfaceKind::kExplicitVar: {
      if (auto i = lookup_local(ctx, n.name)) {
        return {Term::var(*i), ctx.type_of_index(*i)};
      }
      if (const GlobalEntry *g = globals_.find(n.name)) {
        return {Term::global(n.name), g->type};
      }
      throw Error(ErrorCode::kUnresolved,
                  fmt::format("unknown identifier '{}'", n.name));
    }
    case SurfaceKind::kHole: {
      auto [ty, tyv] = fresh_meta(ctx, val::universe(max), s->span, "type of hole");
      return {fresh_meta(ctx, tyv, s->span, "hole").first, tyv};
    }
    case SurfaceKind::kUniverse:
      if (n.number + 1 > max) {
        throw Error(ErrorCode::kUniverse,
                    fmt::format("Type {} has no type below the universe limit {}",
                                n.number, max));
      }
      return {Term::universe(n.number), val::universe(n.number + 1)};
    case SurfaceKind::kNatLit:
      return {Term::numeral(n.number), val::nat()};
    case SurfaceKind::kPi:
    case SurfaceKind::kSigma: {
      auto [dom, i] = check_type(ctx, n.kids[0]);
      Context inner = ctx.bind(n.name, eval(ctx, dom));
      auto [cod, j] = check_type(inner, n.kids[1]);
      Term t = n.kind == SurfaceKind::kPi
                   ? Term::pi(n.name, dom, cod, n.implicit)
                   : Term::sigma(n.name, dom, cod);
      return {t, val::universe(std::max(i, j))};
    }
    case SurfaceKind::kLam: {
      Term dom = Term::zero();
      if (SurfaceTerm annot = surf::lam_type(n)) {
        dom = check_type(ctx, annot).first;
      } else {
        dom = fresh_meta(ctx, val::universe(max), s->span,
                         fmt::format("type of '{}'", n.name))
                  .first;
      }
      Value domv = eval(ctx, dom);
      Context inner = ctx.bind(n.name, domv);
      auto [body, bty] = infer_inserted(inner, surf::lam_body(n));
      Term cod = ev_.quote(bty, inner.depth());
      Term pi = Term::pi(n.name, dom, cod, n.implicit);
      return {Term::ann(Term::lam(n.name, body), pi), eval(ctx, pi)};
    }
    case SurfaceKind::kApp: {
      auto [f, fty] = explicit_head(n.kids[0]) ? infer(ctx, n.kids[0])
                                                : infer_inserted(ctx, n.kids[0]);
      Value pi = ev_.force(fty);
      if (pi->kind != ValueKind::kPi) {
        throw Error(ErrorCode::kNotFunction,
                    fmt::format("'{}' is applied but has type {}",
                                print_term(n.kids[0]), show(ctx, fty)),
                    n.kids[0]->span);
      }
      Term a = check(ctx, n.kids[1], pi->parts[0]);
      Value av = eval(ctx, a);
      return {Term::app(std::move(f), std::move(a)), ev_.instantiate(*pi->closure, av)};
    }
    case SurfaceKind::kPair: {
      auto [a, aty] = infer_inserted(ctx, n.kids[0]);
      auto [b, bty] = infer_inserted(ctx, n.kids[1]);
      Term sigma = Term::sigma("_", ev_.quote(aty, ctx.depth()),
                               shift(ev_.quote(bty, ctx.depth()), 0, 1));
      return {Term::ann(Term::pair(a, b), sigma), eval(ctx, sigma)};
    }
    case SurfaceKind::kAnn: {
      auto [ty, level] = check_type(ctx, n.kids[1]);
      Value tyv = eval(ctx, ty);
      Term t = check(ctx, n.kids[0], tyv);
      return {Term::ann(std::move(t), std::move(ty)), tyv};
    }
    case SurfaceKind::kPrim:
      return infer_prim(ctx, s);
  }
  throw Error(ErrorCode::kType, "unsupported syntax");
}

Term Elaborator::check_motive(const Context &ctx, const SurfaceTerm &s,
                              const Term &domain) {
  Term type = Term::pi("_", domain, Term::universe(options_.max_universe));
  return check(ctx, s, eval(ctx, type));
}

std::pair<Term, Value> Elaborator::infer_prim(const Context &ctx,
                                              const SurfaceTerm &s) {
  const SurfaceNode &n = *s;
  const auto &k = n.kids;
  if (k.empty() && prim_arity(n.prim) > 0) {
    if (n.prim == Prim::kSucc) {
      Term pi = Term::pi("n", Term::nat(), Term::nat());
      return {Term::ann(Term::lam("n", Term::succ(Term::var(0))), pi),
              eval(ctx, pi)};
    }
    throw Error(ErrorCode::kType,
                fmt::format("cannot infer the type of bare '{}'; apply it or "
                            "give it an expected type",
                            prim_keyword(n.prim)));
  }
  const std::uint32_t d = ctx.depth();
  switch (n.prim) {
    case Prim::kFst:
    case Prim::kSnd: {
      auto [p, pty] = infer_inserted(ctx, k[0]);
      Value sig = ev_.force(pty);
      if (sig->kind != ValueKind::kSigma) {
        throw Error(ErrorCode::kType,
                    fmt::format("projection from '{}' of non-Sigma type {}",
                                print_term(k[0]), show(ctx, pty)),
                    k[0]->span);
      }
      if (n.prim == Prim::kFst) return {Term::fst(p), sig->parts[0]};
      Value first = ev_.fst(eval(ctx, p));
      return {Term::snd(p), ev_.instantiate(*sig->closure, first)};
    }
    case Prim::kId: {
      Term a = Term::zero(), x = Term::zero(), y = Term::zero();
      std::uint32_t level = 0;
      if (is_hole(k[0])) {
        Value xty;
        std::tie(x, xty) = infer_inserted(ctx, k[1]);
        a = ev_.quote(xty, d);
        level = level_of(ctx, xty);
      } else {
        std::tie(a, level) = check_type(ctx, k[0]);
        x = check(ctx, k[1], eval(ctx, a));
      }
      y = check(ctx, k[2], eval(ctx, a));
      return {Term::id(a, x, y), val::universe(level)};
    }
    case Prim::kRefl: {
      Term a = Term::zero(), x = Term::zero();
      if (is_hole(k[0]) && !is_hole(k[1])) {
        Value xty;
        std::tie(x, xty) = infer_inserted(ctx, k[1]);
        a = ev_.quote(xty, d);
      } else if (is_hole(k[0])) {
        auto [at, av] = fresh_meta(ctx, val::universe(options_.max_universe),
                                   k[0]->span, "type of refl");
        a = at;
        x = fresh_meta(ctx, av, k[1]->span, "point of refl").first;
      } else {
        a = check_type(ctx, k[0]).first;
        x = check(ctx, k[1], eval(ctx, a));
      }
      Value av = eval(ctx, a), xv = eval(ctx, x);
      return {Term::refl(a, x), val::id(av, xv, xv)};
    }
    case Prim::kJ: {
      auto [p, pty] = infer_inserted(ctx, k[4]);
      Value idt = ev_.force(pty);
      if (idt->kind != ValueKind::kId) {
        throw Error(ErrorCode::kType,
                    fmt::format("J eliminates '{}' of non-identity type {}",
                                print_term(k[4]), show(ctx, pty)),
                    k[4]->span);
      }
      Value av = idt->parts[0];
      auto endpoint = [&](const SurfaceTerm &e, const Value &known) {
        if (is_hole(e)) return ev_.quote(known, d);
        Term t = check(ctx, e, av);
        unify(ctx, known, eval(ctx, t));
        return t;
      };
      Term lhs = endpoint(k[2], idt->parts[1]);
      Term rhs = endpoint(k[3], idt->parts[2]);
      Term aq = ev_.quote(av, d);
      Term motive_type = Term::pi(
          "x", aq,
          Term::pi("y", shift(aq, 0, 1),
                   Term::pi("p", Term::id(shift(aq, 0, 2), Term::var(1), Term::var(0)),
                            Term::universe(options_.max_universe))));
      Term motive = check(ctx, k[0], eval(ctx, motive_type));
      Term c1 = shift(motive, 0, 1);
      Term base_type = Term::pi(
          "z", aq,
          Term::app(Term::app(Term::app(c1, Term::var(0)), Term::var(0)),
                    Term::refl(shift(aq, 0, 1), Term::var(0))));
      Term base = check(ctx, k[1], eval(ctx, base_type));
      Value c = eval(ctx, motive);
      Value result = ev_.apply(ev_.apply(ev_.apply(c, eval(ctx, lhs)), eval(ctx, rhs)),
                               eval(ctx, p));
      return {Term::j(motive, base, lhs, rhs, p), result};
    }
    case Prim::kNat:
      return {Term::nat(), val::universe(0)};
    case Prim::kUnit:
      return {Term::unit(), val::universe(0)};
    case Prim::kEmpty:
      return {Term::empty(), val::universe(0)};
    case Prim::kBool:
      return {Term::boolean(), val::universe(0)};
    case Prim::kZero:
      return {Term::zero(), val::nat()};
    case Prim::kStar:
      return {Term::star(), val::unit()};
    case Prim::kTrue:
      return {Term::true_(), val::boolean()};
    case Prim::kFalse:
      return {Term::false_(), val::boolean()};
    case Prim::kSucc:
      return {Term::succ(check(ctx, k[0], val::nat())), val::nat()};
    case Prim::kNatRec: {
      Term m = check_motive(ctx, k[0], Term::nat());
      Value c = eval(ctx, m);
      Term z = check(ctx, k[1], ev_.apply(c, val::zero()));
      Term step = Term::pi(
          "k", Term::nat(),
          Term::pi("r", Term::app(shift(m, 0, 1), Term::var(0)),
                   Term::app(shift(m, 0, 2), Term::succ(Term::var(1)))));
      Term sc = check(ctx, k[2], eval(ctx, step));
      Term t = check(ctx, k[3], val::nat());
      return {Term::natrec(m, z, sc, t), ev_.apply(c, eval(ctx, t))};
    }
    case Prim::kUnitRec: {
      Term m = check_motive(ctx, k[0], Term::unit());
      Value c = eval(ctx, m);
      Term sc = check(ctx, k[1], ev_.apply(c, val::star()));
      Term t = check(ctx, k[2], val::unit());
      return {Term::unitrec(m, sc, t), ev_.apply(c, eval(ctx, t))};
    }
    case Prim::kEmptyRec: {
      Term m = check_motive(ctx, k[0], Term::empty());
      Term t = check(ctx, k[1], val::empty());
      return {Term::emptyrec(m, t), ev_.apply(eval(ctx, m), eval(ctx, t))};
    }
    case Prim::kBoolRec: {
      Term m = check_motive(ctx, k[0], Term::boolean());
      Value c = eval(ctx, m);
      Term tc = check(ctx, k[1], ev_.apply(c, val::true_()));
      Term fc = check(ctx, k[2], ev_.apply(c, val::false_()));
      Term t = check(ctx, k[3], val::boolean());
      return {Term::boolrec(m, tc, fc, t), ev_.apply(c, eval(ctx, t))};
    }
  }
  throw Error(ErrorCode::kType, "unsupported primitive");
}

// ---------------------------------------------------------------------------
// Entry points

std::pair<Term, Value> Elaborator::elaborate(const Context &ctx,
                                             const SurfaceTerm &s,
                                             const std::optional<Value> &expected) {
  if (expected) {
    Term t = check(ctx, s, *expected);
    return {zonk(t, ctx.depth()), *expected};
  }
  auto [t, ty] = infer_inserted(ctx, s);
  return {zonk(t, ctx.depth()), ty};
}

Declaration Elaborator::elaborate_decl(const SurfaceDecl &decl) {
  metas_ = MetaContext{};
  meta_scopes_.clear();
  try {
    Context ctx;
    Term type = check_type(ctx, decl.type).first;
    Value typev = eval(ctx, type);
    std::optional<Term> body;
    if (decl.body) body = check(ctx, decl.body, typev);
    Declaration out{decl.name, zonk(type), std::nullopt, decl.span};
    if (body) out.body = zonk(*body);
    return out;
  } catch (const Error &e) {
    Diagnostic d = e.diagnostic();
    d.message = fmt::format("in '{}': {}", decl.name, d.message);
    if (d.span.file.empty()) d.span = decl.span;
    throw Error(std::move(d));
  }
}

}  // namespace holim
