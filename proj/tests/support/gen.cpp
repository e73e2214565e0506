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

#include "gen.hpp"

#include <stdexcept>

#include "holim/evaluator.hpp"

namespace holim::testing {

Term type_term(GTy ty) {
  switch (ty) {
    case GTy::kNat: return Term::nat();
    case GTy::kBool: return Term::boolean();
    case GTy::kUnit: return Term::unit();
    case GTy::kFun: return Term::pi("_", Term::nat(), Term::nat());
    case GTy::kPair: return Term::sigma("_", Term::nat(), Term::boolean());
  }
  return Term::nat();
}

Context kernel_context(const GlobalEnv &globals, const GCtx &ctx) {
  Context out;
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    out = out.bind("x" + std::to_string(i), eval(globals, Env{}, type_term(ctx[i])));
  }
  return out;
}

namespace {

Term motive(GTy ty) { return Term::lam("_", type_term(ty)); }

// Constructors in eliminated position need an annotation to infer.
Term inferable(const Term &t, GTy ty) {
  if (t.kind() == TermKind::kLam || t.kind() == TermKind::kPair) {
    return Term::ann(t, type_term(ty));
  }
  return t;
}

GCtx extend(GCtx ctx, std::initializer_list<GTy> more) {
  ctx.insert(ctx.end(), more);
  return ctx;
}

}  // namespace

int TermGen::pick(int n) {
  return std::uniform_int_distribution<int>(0, n - 1)(rng_);
}

GTy TermGen::random_type() { return static_cast<GTy>(pick(5)); }

std::optional<Term> TermGen::variable(GTy ty, const GCtx &ctx) {
  std::vector<std::uint32_t> found;
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    if (ctx[ctx.size() - 1 - i] == ty) found.push_back(static_cast<std::uint32_t>(i));
  }
  if (found.empty()) return std::nullopt;
  return Term::var(found[pick(static_cast<int>(found.size()))]);
}

Term TermGen::leaf(GTy ty, const GCtx &ctx) {
  if (pick(2) == 0) {
    if (auto v = variable(ty, ctx)) return *v;
  }
  switch (ty) {
    case GTy::kNat: return Term::numeral(pick(3));
    case GTy::kBool: return pick(2) ? Term::true_() : Term::false_();
    case GTy::kUnit: return Term::star();
    case GTy::kFun:
      switch (pick(3)) {
        case 0: return Term::lam("y", Term::var(0));
        case 1: return Term::lam("y", Term::succ(Term::var(0)));
        default: return Term::lam("y", Term::numeral(pick(3)));
      }
    case GTy::kPair:
      return Term::pair(Term::numeral(pick(3)), pick(2) ? Term::true_() : Term::false_());
  }
  return Term::zero();
}

Term TermGen::gen(GTy ty, const GCtx &ctx, int depth) {
  if (depth <= 1) return leaf(ty, ctx);
  int d = depth - 1;
  int small = d < 2 ? d : 2;
  switch (ty) {
    case GTy::kNat:
      switch (pick(8)) {
        case 0: return leaf(ty, ctx);
        case 1: return Term::succ(gen(GTy::kNat, ctx, d));
        case 2: return Term::app(inferable(gen(GTy::kFun, ctx, d), GTy::kFun), gen(GTy::kNat, ctx, d));
        case 3: return Term::fst(inferable(gen(GTy::kPair, ctx, d), GTy::kPair));
        case 4:
          return Term::natrec(
              motive(GTy::kNat), gen(GTy::kNat, ctx, d),
              Term::lam("n", Term::lam("r", gen(GTy::kNat, extend(ctx, {GTy::kNat, GTy::kNat}), d))),
              gen(GTy::kNat, ctx, small));
        case 5:
          return Term::boolrec(motive(GTy::kNat), gen(GTy::kNat, ctx, d),
                               gen(GTy::kNat, ctx, d), gen(GTy::kBool, ctx, d));
        case 6:
          return Term::unitrec(motive(GTy::kNat), gen(GTy::kNat, ctx, d),
                               gen(GTy::kUnit, ctx, d));
        default:
          return Term::app(
              Term::ann(Term::lam("x", gen(GTy::kNat, extend(ctx, {GTy::kNat}), d)),
                        type_term(GTy::kFun)),
              gen(GTy::kNat, ctx, d));
      }
    case GTy::kBool:
      switch (pick(4)) {
        case 0: return leaf(ty, ctx);
        case 1: return Term::snd(inferable(gen(GTy::kPair, ctx, d), GTy::kPair));
        case 2:
          return Term::boolrec(motive(GTy::kBool), gen(GTy::kBool, ctx, d),
                               gen(GTy::kBool, ctx, d), gen(GTy::kBool, ctx, d));
        default:
          return Term::natrec(
              motive(GTy::kBool), gen(GTy::kBool, ctx, d),
              Term::lam("n", Term::lam("r", gen(GTy::kBool, extend(ctx, {GTy::kNat, GTy::kBool}), d))),
              gen(GTy::kNat, ctx, small));
      }
    case GTy::kUnit:
      if (pick(2) == 0) return leaf(ty, ctx);
      return Term::unitrec(motive(GTy::kUnit), gen(GTy::kUnit, ctx, d),
                           gen(GTy::kUnit, ctx, d));
    case GTy::kFun:
      switch (pick(3)) {
        case 0: return leaf(ty, ctx);
        case 1: return Term::lam("x", gen(GTy::kNat, extend(ctx, {GTy::kNat}), d));
        default:
          return Term::boolrec(motive(GTy::kFun), gen(GTy::kFun, ctx, d),
                               gen(GTy::kFun, ctx, d), gen(GTy::kBool, ctx, d));
      }
    case GTy::kPair:
      if (pick(3) == 0) return leaf(ty, ctx);
      return Term::pair(gen(GTy::kNat, ctx, d), gen(GTy::kBool, ctx, d));
  }
  return leaf(ty, ctx);
}

Term TermGen::variant(const Term &t, GTy ty, const GCtx &ctx) {
  int options = (ty == GTy::kFun || ty == GTy::kPair) ? 4 : 3;
  switch (pick(options)) {
    case 0:
      return Term::app(Term::ann(Term::lam("w", shift(t, 0, 1)),
                                 Term::pi("_", Term::nat(), type_term(ty))),
                       leaf(GTy::kNat, ctx));
    case 1:
      return Term::boolrec(motive(ty), t, leaf(ty, ctx), Term::true_());
    case 2:
      return Term::natrec(motive(ty), t, Term::lam("n", Term::lam("r", Term::var(0))),
                          Term::zero());
    default:
      if (ty == GTy::kFun) return Term::lam("z", Term::app(inferable(shift(t, 0, 1), ty), Term::var(0)));
      return Term::pair(Term::fst(inferable(t, ty)), Term::snd(inferable(t, ty)));
  }
}

namespace {

OPtr make(GTy kind) {
  auto v = std::make_shared<OValue>();
  v->kind = kind;
  return v;
}

OPtr nat_value(std::uint64_t n) {
  auto v = std::make_shared<OValue>();
  v->kind = GTy::kNat;
  v->nat = n;
  return v;
}

OPtr call(const OPtr &fn, const OPtr &arg) {
  if (fn->kind != GTy::kFun) throw std::logic_error("oracle: applying a non-function");
  std::vector<OPtr> env = fn->env;
  env.push_back(arg);
  return interpret(*fn->body, env);
}

}  // namespace

OPtr interpret(const Term &t, const std::vector<OPtr> &env) {
  switch (t.kind()) {
    case TermKind::kVar:
      if (t.index() >= env.size()) throw std::logic_error("oracle: open term");
      return env[env.size() - 1 - t.index()];
    case TermKind::kAnn: return interpret(t[0], env);
    case TermKind::kLam: {
      auto v = std::make_shared<OValue>();
      v->kind = GTy::kFun;
      v->body = t[0];
      v->env = env;
      return v;
    }
    case TermKind::kApp: return call(interpret(t[0], env), interpret(t[1], env));
    case TermKind::kPair: {
      auto v = std::make_shared<OValue>();
      v->kind = GTy::kPair;
      v->first = interpret(t[0], env);
      v->second = interpret(t[1], env);
      return v;
    }
    case TermKind::kFst: return interpret(t[0], env)->first;
    case TermKind::kSnd: return interpret(t[0], env)->second;
    case TermKind::kZero: return nat_value(0);
    case TermKind::kSucc: return nat_value(interpret(t[0], env)->nat + 1);
    case TermKind::kTrue:
    case TermKind::kFalse: {
      auto v = std::make_shared<OValue>();
      v->kind = GTy::kBool;
      v->boolean = t.kind() == TermKind::kTrue;
      return v;
    }
    case TermKind::kStar: return make(GTy::kUnit);
    case TermKind::kNatRec: {
      OPtr acc = interpret(t[1], env);
      OPtr step = interpret(t[2], env);
      std::uint64_t n = interpret(t[3], env)->nat;
      for (std::uint64_t k = 0; k < n; ++k) acc = call(call(step, nat_value(k)), acc);
      return acc;
    }
    case TermKind::kBoolRec:
      return interpret(interpret(t[3], env)->boolean ? t[1] : t[2], env);
    case TermKind::kUnitRec:
      interpret(t[2], env);
      return interpret(t[1], env);
    default:
      throw std::logic_error("oracle: unsupported construct");
  }
}

bool same_result(const OPtr &a, const OPtr &b) {
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case GTy::kNat: return a->nat == b->nat;
    case GTy::kBool: return a->boolean == b->boolean;
    case GTy::kUnit: return true;
    case GTy::kPair: return same_result(a->first, b->first) && same_result(a->second, b->second);
    case GTy::kFun: return false;
  }
  return false;
}

}  // namespace holim::testing
