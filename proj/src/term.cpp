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

#include "holim/term.hpp"

#include <functional>
#include <utility>

namespace holim {

struct Term::Node {
  TermKind kind;
  std::uint32_t number = 0;
  bool implicit = false;
  std::string name;
  std::vector<Term> children;
};

Term Term::make(TermKind kind, std::vector<Term> children,
                std::uint32_t number, std::string name, bool implicit) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->number = number;
  node->implicit = implicit;
  node->name = std::move(name);
  node->children = std::move(children);
  return Term(std::move(node));
}

Term Term::var(std::uint32_t index) {
  return make(TermKind::kVar, {}, index);
}
Term Term::universe(std::uint32_t level) {
  return make(TermKind::kUniverse, {}, level);
}
Term Term::pi(std::string name, Term domain, Term codomain, bool implicit) {
  return make(TermKind::kPi, {std::move(domain), std::move(codomain)}, 0,
              std::move(name), implicit);
}
Term Term::lam(std::string name, Term body) {
  return make(TermKind::kLam, {std::move(body)}, 0, std::move(name));
}
Term Term::app(Term fn, Term arg) {
  return make(TermKind::kApp, {std::move(fn), std::move(arg)});
}
Term Term::sigma(std::string name, Term first, Term second) {
  return make(TermKind::kSigma, {std::move(first), std::move(second)}, 0,
              std::move(name));
}
Term Term::pair(Term first, Term second) {
  return make(TermKind::kPair, {std::move(first), std::move(second)});
}
Term Term::fst(Term p) { return make(TermKind::kFst, {std::move(p)}); }
Term Term::snd(Term p) { return make(TermKind::kSnd, {std::move(p)}); }
Term Term::id(Term type, Term lhs, Term rhs) {
  return make(TermKind::kId, {std::move(type), std::move(lhs), std::move(rhs)});
}
Term Term::refl(Term type, Term point) {
  return make(TermKind::kRefl, {std::move(type), std::move(point)});
}
Term Term::j(Term motive, Term base, Term lhs, Term rhs, Term path) {
  return make(TermKind::kJ, {std::move(motive), std::move(base), std::move(lhs),
                             std::move(rhs), std::move(path)});
}
Term Term::nat() { return make(TermKind::kNat, {}); }
Term Term::zero() { return make(TermKind::kZero, {}); }
Term Term::succ(Term n) { return make(TermKind::kSucc, {std::move(n)}); }
Term Term::natrec(Term motive, Term zero_case, Term succ_case, Term n) {
  return make(TermKind::kNatRec, {std::move(motive), std::move(zero_case),
                                  std::move(succ_case), std::move(n)});
}
Term Term::unit() { return make(TermKind::kUnit, {}); }
Term Term::star() { return make(TermKind::kStar, {}); }
Term Term::unitrec(Term motive, Term star_case, Term u) {
  return make(TermKind::kUnitRec,
              {std::move(motive), std::move(star_case), std::move(u)});
}
Term Term::empty() { return make(TermKind::kEmpty, {}); }
Term Term::emptyrec(Term motive, Term e) {
  return make(TermKind::kEmptyRec, {std::move(motive), std::move(e)});
}
Term Term::boolean() { return make(TermKind::kBool, {}); }
Term Term::true_() { return make(TermKind::kTrue, {}); }
Term Term::false_() { return make(TermKind::kFalse, {}); }
Term Term::boolrec(Term motive, Term true_case, Term false_case, Term b) {
  return make(TermKind::kBoolRec, {std::move(motive), std::move(true_case),
                                   std::move(false_case), std::move(b)});
}
Term Term::global(std::string name) {
  return make(TermKind::kGlobal, {}, 0, std::move(name));
}
Term Term::meta(std::uint32_t id) { return make(TermKind::kMeta, {}, id); }
Term Term::ann(Term term, Term type) {
  return make(TermKind::kAnn, {std::move(term), std::move(type)});
}

Term Term::numeral(std::uint32_t n) {
  Term t = zero();
  for (std::uint32_t i = 0; i < n; ++i) t = succ(std::move(t));
  return t;
}

TermKind Term::kind() const { return node_->kind; }
std::uint32_t Term::number() const { return node_->number; }
const std::string &Term::name() const { return node_->name; }
bool Term::implicit() const { return node_->implicit; }
std::size_t Term::arity() const { return node_->children.size(); }
const Term &Term::operator[](std::size_t i) const {
  return node_->children[i];
}
const std::vector<Term> &Term::children() const { return node_->children; }

bool Term::binds() const {
  switch (node_->kind) {
    case TermKind::kPi:
    case TermKind::kLam:
    case TermKind::kSigma:
      return true;
    default:
      return false;
  }
}

bool operator==(const Term &a, const Term &b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.arity() != b.arity()) return false;
  switch (a.kind()) {
    case TermKind::kVar:
    case TermKind::kUniverse:
    case TermKind::kMeta:
      if (a.number() != b.number()) return false;
      break;
    case TermKind::kGlobal:
      if (a.name() != b.name()) return false;
      break;
    case TermKind::kPi:
      if (a.implicit() != b.implicit()) return false;
      break;
    default:
      break;
  }
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

std::size_t Term::size() const {
  std::size_t n = 1;
  for (const Term &c : node_->children) n += c.size();
  return n;
}

namespace {

// Rebuilds `t` bottom-up, calling `leaf` on every Var with the number of
// binders crossed so far. Closed leaves are shared with the input.
Term map_vars(const Term &t, std::uint32_t depth,
              const std::function<Term(const Term &, std::uint32_t)> &leaf) {
  if (t.kind() == TermKind::kVar) return leaf(t, depth);
  if (t.arity() == 0) return t;
  std::vector<Term> kids;
  kids.reserve(t.arity());
  for (std::size_t i = 0; i < t.arity(); ++i) {
    bool under = t.binds() && i + 1 == t.arity();
    Term k = map_vars(t[i], depth + (under ? 1 : 0), leaf);
    kids.push_back(std::move(k));
  }
  return Term::make(t.kind(), std::move(kids), t.number(), t.name(),
                    t.implicit());
}

}  // namespace

bool well_scoped(const Term &t, std::uint32_t depth) {
  switch (t.kind()) {
    case TermKind::kVar:
      return t.index() < depth;
    case TermKind::kMeta:
      return false;
    default:
      break;
  }
  for (std::size_t i = 0; i < t.arity(); ++i) {
    bool under = t.binds() && i + 1 == t.arity();
    if (!well_scoped(t[i], depth + (under ? 1 : 0))) return false;
  }
  return true;
}

Term shift(const Term &t, std::uint32_t cutoff, std::uint32_t amount) {
  if (amount == 0) return t;
  return map_vars(t, 0, [&](const Term &v, std::uint32_t depth) {
    if (v.index() >= cutoff + depth) return Term::var(v.index() + amount);
    return v;
  });
}

Term subst(const Term &t, std::uint32_t index, const Term &replacement) {
  return map_vars(t, 0, [&](const Term &v, std::uint32_t depth) {
    std::uint32_t target = index + depth;
    if (v.index() == target) return shift(replacement, 0, depth);
    if (v.index() > target) return Term::var(v.index() - 1);
    return v;
  });
}

bool has_meta(const Term &t) {
  if (t.kind() == TermKind::kMeta) return true;
  for (const Term &c : t.children()) {
    if (has_meta(c)) return true;
  }
  return false;
}

}  // namespace holim
