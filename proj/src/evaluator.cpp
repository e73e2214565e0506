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

#include "holim/evaluator.hpp"

#include <utility>

namespace holim {

std::uint32_t MetaContext::fresh(Value type, std::uint32_t depth,
                                 SourceSpan span, std::string origin) {
  metas_.push_back(MetaEntry{std::move(type), std::nullopt, depth,
                             std::move(span), std::move(origin)});
  return static_cast<std::uint32_t>(metas_.size() - 1);
}

void MetaContext::solve(std::uint32_t id, Value solution) {
  if (metas_[id].solution) {
    throw Error(ErrorCode::kStuck, "metavariable solved twice");
  }
  metas_[id].solution = std::move(solution);
  ++solved_;
}

namespace {

Value extend_spine(const Value &neutral, Frame frame) {
  std::vector<Frame> spine = neutral->spine;
  spine.push_back(std::move(frame));
  if (neutral->definition) {
    return val::glued(neutral->head, neutral->definition, std::move(spine));
  }
  return val::neutral(neutral->head, std::move(spine));
}

[[noreturn]] void stuck(const char *what) {
  throw Error(ErrorCode::kStuck, std::string("cannot reduce ") + what +
                                     " of a value of the wrong shape");
}

}  // namespace

Value Evaluator::eval(const Env &env, const Term &t) const {
  switch (t.kind()) {
    case TermKind::kVar:
      return env.lookup(t.index());
    case TermKind::kUniverse:
      return val::universe(t.level());
    case TermKind::kPi:
      return val::pi(t.name(), eval(env, t[0]), Closure{env, t[1]},
                     t.implicit());
    case TermKind::kLam:
      return val::lam(t.name(), Closure{env, t[0]});
    case TermKind::kApp:
      return apply(eval(env, t[0]), eval(env, t[1]));
    case TermKind::kSigma:
      return val::sigma(t.name(), eval(env, t[0]), Closure{env, t[1]});
    case TermKind::kPair:
      return val::pair(eval(env, t[0]), eval(env, t[1]));
    case TermKind::kFst:
      return fst(eval(env, t[0]));
    case TermKind::kSnd:
      return snd(eval(env, t[0]));
    case TermKind::kId:
      return val::id(eval(env, t[0]), eval(env, t[1]), eval(env, t[2]));
    case TermKind::kRefl:
      return val::refl(eval(env, t[0]), eval(env, t[1]));
    case TermKind::kJ:
      return j(eval(env, t[0]), eval(env, t[1]), eval(env, t[2]),
               eval(env, t[3]), eval(env, t[4]));
    case TermKind::kNat:
      return val::nat();
    case TermKind::kZero:
      return val::zero();
    case TermKind::kSucc:
      return val::succ(eval(env, t[0]));
    case TermKind::kNatRec:
      return natrec(eval(env, t[0]), eval(env, t[1]), eval(env, t[2]),
                    eval(env, t[3]));
    case TermKind::kUnit:
      return val::unit();
    case TermKind::kStar:
      return val::star();
    case TermKind::kUnitRec:
      return unitrec(eval(env, t[0]), eval(env, t[1]), eval(env, t[2]));
    case TermKind::kEmpty:
      return val::empty();
    case TermKind::kEmptyRec:
      return emptyrec(eval(env, t[0]), eval(env, t[1]));
    case TermKind::kBool:
      return val::boolean();
    case TermKind::kTrue:
      return val::true_();
    case TermKind::kFalse:
      return val::false_();
    case TermKind::kBoolRec:
      return boolrec(eval(env, t[0]), eval(env, t[1]), eval(env, t[2]),
                     eval(env, t[3]));
    case TermKind::kGlobal: {
      auto slot = globals_.slot(t.name());
      if (!slot) {
        throw Error(ErrorCode::kUnresolved, "unknown global '" + t.name() + "'");
      }
      const GlobalEntry &entry = globals_.at(*slot);
      Head head{HeadKind::kGlobal, static_cast<std::uint32_t>(*slot)};
      if (entry.value) return val::glued(head, *entry.value);
      return val::neutral(head);
    }
    case TermKind::kMeta: {
      if (metas_ == nullptr) {
        throw Error(ErrorCode::kStuck, "metavariable reached the kernel");
      }
      const MetaEntry &m = metas_->at(t.number());
      if (m.solution) return *m.solution;
      return val::neutral(Head{HeadKind::kMeta, t.number()});
    }
    case TermKind::kAnn:
      return eval(env, t[0]);
  }
  throw Error(ErrorCode::kStuck, "unknown term kind");
}

Value Evaluator::instantiate(const Closure &c, Value arg) const {
  return eval(c.env.extend(std::move(arg)), c.body);
}

Value Evaluator::apply(const Value &fn, Value arg) const {
  switch (fn->kind) {
    case ValueKind::kLam:
      return instantiate(*fn->closure, std::move(arg));
    case ValueKind::kNeutral:
      return extend_spine(fn, Frame{FrameKind::kApp, {std::move(arg)}});
    default:
      stuck("application");
  }
}

Value Evaluator::fst(const Value &p) const {
  switch (p->kind) {
    case ValueKind::kPair:
      return p->parts[0];
    case ValueKind::kNeutral:
      return extend_spine(p, Frame{FrameKind::kFst, {}});
    default:
      stuck("fst");
  }
}

Value Evaluator::snd(const Value &p) const {
  switch (p->kind) {
    case ValueKind::kPair:
      return p->parts[1];
    case ValueKind::kNeutral:
      return extend_spine(p, Frame{FrameKind::kSnd, {}});
    default:
      stuck("snd");
  }
}

Value Evaluator::j(Value motive, Value base, Value lhs, Value rhs,
                   const Value &path) const {
  switch (path->kind) {
    case ValueKind::kRefl:
      return apply(base, std::move(lhs));
    case ValueKind::kNeutral:
      return extend_spine(
          path, Frame{FrameKind::kJ, {std::move(motive), std::move(base),
                                      std::move(lhs), std::move(rhs)}});
    default:
      stuck("J");
  }
}

Value Evaluator::natrec(Value motive, Value zero_case, Value succ_case,
                        const Value &n) const {
  switch (n->kind) {
    case ValueKind::kZero:
      return zero_case;
    case ValueKind::kSucc: {
      Value pred = n->parts[0];
      Value rec = natrec(motive, zero_case, succ_case, pred);
      return apply(apply(succ_case, pred), std::move(rec));
    }
    case ValueKind::kNeutral:
      return extend_spine(
          n, Frame{FrameKind::kNatRec, {std::move(motive), std::move(zero_case),
                                        std::move(succ_case)}});
    default:
      stuck("natrec");
  }
}

Value Evaluator::unitrec(Value motive, Value star_case, const Value &u) const {
  switch (u->kind) {
    case ValueKind::kStar:
      return star_case;
    case ValueKind::kNeutral:
      return extend_spine(
          u, Frame{FrameKind::kUnitRec, {std::move(motive), std::move(star_case)}});
    default:
      stuck("unitrec");
  }
}

Value Evaluator::emptyrec(Value motive, const Value &e) const {
  if (e->kind != ValueKind::kNeutral) stuck("emptyrec");
  return extend_spine(e, Frame{FrameKind::kEmptyRec, {std::move(motive)}});
}

Value Evaluator::boolrec(Value motive, Value true_case, Value false_case,
                         const Value &b) const {
  switch (b->kind) {
    case ValueKind::kTrue:
      return true_case;
    case ValueKind::kFalse:
      return false_case;
    case ValueKind::kNeutral:
      return extend_spine(
          b, Frame{FrameKind::kBoolRec, {std::move(motive), std::move(true_case),
                                         std::move(false_case)}});
    default:
      stuck("boolrec");
  }
}

Value Evaluator::apply_frame(const Value &v, const Frame &f) const {
  const auto &a = f.args;
  switch (f.kind) {
    case FrameKind::kApp:
      return apply(v, a[0]);
    case FrameKind::kFst:
      return fst(v);
    case FrameKind::kSnd:
      return snd(v);
    case FrameKind::kJ:
      return j(a[0], a[1], a[2], a[3], v);
    case FrameKind::kNatRec:
      return natrec(a[0], a[1], a[2], v);
    case FrameKind::kUnitRec:
      return unitrec(a[0], a[1], v);
    case FrameKind::kEmptyRec:
      return emptyrec(a[0], v);
    case FrameKind::kBoolRec:
      return boolrec(a[0], a[1], a[2], v);
  }
  stuck("frame");
}

Value Evaluator::force_metas(const Value &v0) const {
  Value v = v0;
  while (metas_ != nullptr && v->kind == ValueKind::kNeutral &&
         v->head.kind == HeadKind::kMeta) {
    const MetaEntry &m = metas_->at(v->head.id);
    if (!m.solution) break;
    Value out = *m.solution;
    for (const Frame &f : v->spine) out = apply_frame(force_metas(out), f);
    v = out;
  }
  return v;
}

Value Evaluator::unfold(const Value &v) const {
  if (!v->unfolded) {
    Value out = v->definition;
    for (const Frame &f : v->spine) out = apply_frame(force(out), f);
    v->unfolded = std::move(out);
  }
  return v->unfolded;
}

Value Evaluator::force(const Value &v0) const {
  Value v = force_metas(v0);
  while (v->kind == ValueKind::kNeutral && v->definition) {
    v = force_metas(unfold(v));
  }
  return v;
}

// ---------------------------------------------------------------------------
// Readback

namespace {

std::vector<Term> quote_args(const Evaluator &ev, const std::vector<Value> &vs,
                             std::uint32_t depth, bool unfold_globals) {
  std::vector<Term> out;
  out.reserve(vs.size());
  for (const Value &v : vs) out.push_back(ev.quote(v, depth, unfold_globals));
  return out;
}

}  // namespace

Term Evaluator::quote(const Value &v0, std::uint32_t depth,
                      bool unfold_globals) const {
  Value v = unfold_globals ? force(v0) : force_metas(v0);
  auto quote = [&](const Value &u, std::uint32_t d) {
    return this->quote(u, d, unfold_globals);
  };
  auto under = [&](const Closure &c) {
    return quote(instantiate(c, val::local(depth)), depth + 1);
  };
  switch (v->kind) {
    case ValueKind::kPi:
      return Term::pi(v->name, quote(v->parts[0], depth), under(*v->closure),
                      v->implicit);
    case ValueKind::kLam:
      return Term::lam(v->name, under(*v->closure));
    case ValueKind::kSigma:
      return Term::sigma(v->name, quote(v->parts[0], depth),
                         under(*v->closure));
    case ValueKind::kPair:
      return Term::pair(quote(v->parts[0], depth), quote(v->parts[1], depth));
    case ValueKind::kUniverse:
      return Term::universe(v->level);
    case ValueKind::kId:
      return Term::id(quote(v->parts[0], depth), quote(v->parts[1], depth),
                      quote(v->parts[2], depth));
    case ValueKind::kRefl:
      return Term::refl(quote(v->parts[0], depth), quote(v->parts[1], depth));
    case ValueKind::kNat:
      return Term::nat();
    case ValueKind::kZero:
      return Term::zero();
    case ValueKind::kSucc:
      return Term::succ(quote(v->parts[0], depth));
    case ValueKind::kUnit:
      return Term::unit();
    case ValueKind::kStar:
      return Term::star();
    case ValueKind::kEmpty:
      return Term::empty();
    case ValueKind::kBool:
      return Term::boolean();
    case ValueKind::kTrue:
      return Term::true_();
    case ValueKind::kFalse:
      return Term::false_();
    case ValueKind::kNeutral:
      break;
  }
  Term t = Term::zero();
  switch (v->head.kind) {
    case HeadKind::kLocal:
      if (v->head.id >= depth) {
        throw Error(ErrorCode::kStuck, "variable level escapes its scope");
      }
      t = Term::var(depth - 1 - v->head.id);
      break;
    case HeadKind::kGlobal:
      t = Term::global(globals_.at(v->head.id).name);
      break;
    case HeadKind::kMeta:
      t = Term::meta(v->head.id);
      break;
  }
  for (const Frame &f : v->spine) {
    std::vector<Term> a = quote_args(*this, f.args, depth, unfold_globals);
    switch (f.kind) {
      case FrameKind::kApp:
        t = Term::app(std::move(t), std::move(a[0]));
        break;
      case FrameKind::kFst:
        t = Term::fst(std::move(t));
        break;
      case FrameKind::kSnd:
        t = Term::snd(std::move(t));
        break;
      case FrameKind::kJ:
        t = Term::j(a[0], a[1], a[2], a[3], std::move(t));
        break;
      case FrameKind::kNatRec:
        t = Term::natrec(a[0], a[1], a[2], std::move(t));
        break;
      case FrameKind::kUnitRec:
        t = Term::unitrec(a[0], a[1], std::move(t));
        break;
      case FrameKind::kEmptyRec:
        t = Term::emptyrec(a[0], std::move(t));
        break;
      case FrameKind::kBoolRec:
        t = Term::boolrec(a[0], a[1], a[2], std::move(t));
        break;
    }
  }
  return t;
}

// ---------------------------------------------------------------------------
// Conversion

bool Evaluator::convert(const Value &a0, const Value &b0,
                        std::uint32_t depth) const {
  Value a = force_metas(a0);
  Value b = force_metas(b0);
  if (a == b) return true;

  // Defined globals: same head and spine is enough; otherwise unfold the
  // later definition first, since it may reduce to the earlier one.
  bool ga = a->kind == ValueKind::kNeutral && a->definition != nullptr;
  bool gb = b->kind == ValueKind::kNeutral && b->definition != nullptr;
  if (ga && gb && a->head == b->head && convert_spine(a->spine, b->spine, depth)) {
    return true;
  }
  if (ga && (!gb || a->head.id >= b->head.id)) {
    return convert(unfold(a), b, depth);
  }
  if (gb) return convert(a, unfold(b), depth);

  Value x = val::local(depth);

  // Eta for functions: compare bodies against the other side applied.
  if (a->kind == ValueKind::kLam && b->kind == ValueKind::kLam) {
    return convert(instantiate(*a->closure, x), instantiate(*b->closure, x),
                   depth + 1);
  }
  if (a->kind == ValueKind::kLam && b->kind == ValueKind::kNeutral) {
    return convert(instantiate(*a->closure, x), apply(b, x), depth + 1);
  }
  if (b->kind == ValueKind::kLam && a->kind == ValueKind::kNeutral) {
    return convert(apply(a, x), instantiate(*b->closure, x), depth + 1);
  }
  // Surjective pairing.
  if (a->kind == ValueKind::kPair && b->kind == ValueKind::kNeutral) {
    return convert(a->parts[0], fst(b), depth) &&
           convert(a->parts[1], snd(b), depth);
  }
  if (b->kind == ValueKind::kPair && a->kind == ValueKind::kNeutral) {
    return convert(fst(a), b->parts[0], depth) &&
           convert(snd(a), b->parts[1], depth);
  }

  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case ValueKind::kPi:
    case ValueKind::kSigma:
      return convert(a->parts[0], b->parts[0], depth) &&
             convert(instantiate(*a->closure, x), instantiate(*b->closure, x),
                     depth + 1);
    case ValueKind::kPair:
    case ValueKind::kId:
    case ValueKind::kRefl:
    case ValueKind::kSucc:
      for (std::size_t i = 0; i < a->parts.size(); ++i) {
        if (!convert(a->parts[i], b->parts[i], depth)) return false;
      }
      return true;
    case ValueKind::kUniverse:
      return a->level == b->level;
    case ValueKind::kNeutral:
      return a->head == b->head && convert_spine(a->spine, b->spine, depth);
    default:
      return true;  // nullary constructors of equal kind
  }
}

bool Evaluator::convert_spine(const std::vector<Frame> &a,
                              const std::vector<Frame> &b,
                              std::uint32_t depth) const {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].kind != b[i].kind) return false;
    for (std::size_t k = 0; k < a[i].args.size(); ++k) {
      if (!convert(a[i].args[k], b[i].args[k], depth)) return false;
    }
  }
  return true;
}

bool Evaluator::subsumes(const Value &expected0, const Value &actual0,
                         std::uint32_t depth) const {
  Value expected = force_metas(expected0);
  Value actual = force_metas(actual0);
  if (expected->kind == ValueKind::kNeutral && expected->definition &&
      actual->kind == ValueKind::kNeutral && actual->head == expected->head &&
      convert_spine(expected->spine, actual->spine, depth)) {
    return true;
  }
  expected = force(expected);
  actual = force(actual);
  if (expected->kind == ValueKind::kUniverse &&
      actual->kind == ValueKind::kUniverse) {
    return actual->level <= expected->level;
  }
  Value x = val::local(depth);
  if (expected->kind == ValueKind::kPi && actual->kind == ValueKind::kPi) {
    return convert(expected->parts[0], actual->parts[0], depth) &&
           subsumes(instantiate(*expected->closure, x),
                    instantiate(*actual->closure, x), depth + 1);
  }
  if (expected->kind == ValueKind::kSigma &&
      actual->kind == ValueKind::kSigma) {
    return subsumes(expected->parts[0], actual->parts[0], depth) &&
           subsumes(instantiate(*expected->closure, x),
                    instantiate(*actual->closure, x), depth + 1);
  }
  return convert(expected, actual, depth);
}

Value eval(const GlobalEnv &globals, const Env &env, const Term &t) {
  return Evaluator(globals).eval(env, t);
}

Term quote(const GlobalEnv &globals, const Value &v, std::uint32_t depth,
           bool unfold_globals) {
  return Evaluator(globals).quote(v, depth, unfold_globals);
}

bool convert(const GlobalEnv &globals, const Value &a, const Value &b,
             std::uint32_t depth) {
  return Evaluator(globals).convert(a, b, depth);
}

}  // namespace holim
