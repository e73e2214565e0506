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

#ifndef HOLIM_TERM_HPP
#define HOLIM_TERM_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "holim/diagnostic.hpp"

namespace holim {

/// Constructors of the core language. Children are stored positionally;
/// the comment after each kind gives their order.
enum class TermKind : std::uint8_t {
  kVar,       // de Bruijn index
  kUniverse,  // level
  kPi,        // domain, codomain (binds one)
  kLam,       // body (binds one)
  kApp,       // function, argument
  kSigma,     // first, second (binds one)
  kPair,      // first, second
  kFst,       // pair
  kSnd,       // pair
  kId,        // type, lhs, rhs
  kRefl,      // type, point
  kJ,         // motive, base, lhs, rhs, path
  kNat,
  kZero,
  kSucc,      // predecessor
  kNatRec,    // motive, zero case, succ case, scrutinee
  kUnit,
  kStar,
  kUnitRec,   // motive, star case, scrutinee
  kEmpty,
  kEmptyRec,  // motive, scrutinee
  kBool,
  kTrue,
  kFalse,
  kBoolRec,   // motive, true case, false case, scrutinee
  kGlobal,    // name
  kMeta,      // metavariable id; only during elaboration
  kAnn,       // term, type
};

/// An immutable, shareable core term. Variables are de Bruijn indices;
/// binder names are carried for printing only and ignored by `==`.
class Term {
 public:
  struct Node;

  static Term var(std::uint32_t index);
  static Term universe(std::uint32_t level);
  static Term pi(std::string name, Term domain, Term codomain,
                 bool implicit = false);
  static Term lam(std::string name, Term body);
  static Term app(Term fn, Term arg);
  static Term sigma(std::string name, Term first, Term second);
  static Term pair(Term first, Term second);
  static Term fst(Term p);
  static Term snd(Term p);
  static Term id(Term type, Term lhs, Term rhs);
  static Term refl(Term type, Term point);
  static Term j(Term motive, Term base, Term lhs, Term rhs, Term path);
  static Term nat();
  static Term zero();
  static Term succ(Term n);
  static Term natrec(Term motive, Term zero_case, Term succ_case, Term n);
  static Term unit();
  static Term star();
  static Term unitrec(Term motive, Term star_case, Term u);
  static Term empty();
  static Term emptyrec(Term motive, Term e);
  static Term boolean();
  static Term true_();
  static Term false_();
  static Term boolrec(Term motive, Term true_case, Term false_case, Term b);
  static Term global(std::string name);
  static Term meta(std::uint32_t id);
  static Term ann(Term term, Term type);

  /// `succ^n zero`.
  static Term numeral(std::uint32_t n);
  /// Generic constructor used by traversals that rebuild nodes.
  static Term make(TermKind kind, std::vector<Term> children,
                   std::uint32_t number = 0, std::string name = {},
                   bool implicit = false);

  TermKind kind() const;
  /// Var index, Universe level or Meta id.
  std::uint32_t number() const;
  std::uint32_t index() const { return number(); }
  std::uint32_t level() const { return number(); }
  /// Binder name for Pi/Lam/Sigma, global name for Global.
  const std::string &name() const;
  bool implicit() const;
  std::size_t arity() const;
  const Term &operator[](std::size_t i) const;
  const std::vector<Term> &children() const;

  /// True for the three binding constructors; their last child is under
  /// the binder.
  bool binds() const;

  /// Structural equality (alpha-equivalence, since binders are nameless).
  friend bool operator==(const Term &a, const Term &b);
  friend bool operator!=(const Term &a, const Term &b) { return !(a == b); }

  std::size_t size() const;

 private:
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// True iff every Var index is below its enclosing depth and no Meta occurs.
bool well_scoped(const Term &t, std::uint32_t depth);

/// Adds `amount` to every free index >= `cutoff`.
Term shift(const Term &t, std::uint32_t cutoff, std::uint32_t amount);

/// Capture-avoiding substitution of `replacement` for Var(index); indices
/// above `index` are lowered by one, as the binder for `index` disappears.
Term subst(const Term &t, std::uint32_t index, const Term &replacement);

/// True if the term mentions any Meta node.
bool has_meta(const Term &t);

/// A named definition or axiom after elaboration.
struct Declaration {
  std::string name;
  Term type;
  std::optional<Term> body;  // absent for axioms
  SourceSpan span;
};

}  // namespace holim

#endif  // HOLIM_TERM_HPP
