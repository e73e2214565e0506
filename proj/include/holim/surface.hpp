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

#ifndef HOLIM_SURFACE_HPP
#define HOLIM_SURFACE_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "holim/diagnostic.hpp"

namespace holim {

enum class TokenKind : std::uint8_t {
  kIdentifier,
  kKeyword,
  kSymbol,
  kNatural,
  kEnd,
};

struct Token {
  TokenKind kind;
  std::string lexeme;
  SourceSpan span;

  bool is(TokenKind k, std::string_view text) const {
    return kind == k && lexeme == text;
  }
};

/// Built-in type formers, constructors and eliminators, written as keywords
/// applied to a fixed number of arguments.
enum class Prim : std::uint8_t {
  kFst, kSnd, kId, kRefl, kJ,
  kNat, kZero, kSucc, kNatRec,
  kUnit, kStar, kUnitRec,
  kEmpty, kEmptyRec,
  kBool, kTrue, kFalse, kBoolRec,
};

std::string_view prim_keyword(Prim p);
std::size_t prim_arity(Prim p);
std::optional<Prim> prim_from_keyword(std::string_view word);

enum class SurfaceKind : std::uint8_t {
  kVar,          // name
  kExplicitVar,  // @name: implicit arguments are given explicitly
  kHole,         // _
  kUniverse,     // Type n
  kNatLit,       // numeral
  kPi,           // name, implicit; domain, codomain
  kSigma,        // name; first, second
  kLam,          // name, implicit, annotated; [type,] body
  kApp,          // fn, arg
  kPair,         // first, second
  kAnn,          // term, type
  kPrim,         // prim; arguments
};

struct SurfaceNode;
using SurfaceTerm = std::shared_ptr<const SurfaceNode>;

struct SurfaceNode {
  SurfaceKind kind;
  std::string name;
  std::uint32_t number = 0;
  bool implicit = false;
  bool annotated = false;
  Prim prim = Prim::kNat;
  std::vector<SurfaceTerm> kids;
  SourceSpan span;
};

namespace surf {

SurfaceTerm var(std::string name, SourceSpan span = {});
SurfaceTerm explicit_var(std::string name, SourceSpan span = {});
SurfaceTerm hole(SourceSpan span = {});
SurfaceTerm universe(std::uint32_t level, SourceSpan span = {});
SurfaceTerm nat_lit(std::uint32_t n, SourceSpan span = {});
SurfaceTerm pi(std::string name, bool implicit, SurfaceTerm domain,
               SurfaceTerm codomain, SourceSpan span = {});
SurfaceTerm sigma(std::string name, SurfaceTerm first, SurfaceTerm second,
                  SourceSpan span = {});
/// `type` may be null for an unannotated binder.
SurfaceTerm lam(std::string name, bool implicit, SurfaceTerm type,
                SurfaceTerm body, SourceSpan span = {});
SurfaceTerm app(SurfaceTerm fn, SurfaceTerm arg, SourceSpan span = {});
SurfaceTerm pair(SurfaceTerm first, SurfaceTerm second, SourceSpan span = {});
SurfaceTerm ann(SurfaceTerm term, SurfaceTerm type, SourceSpan span = {});
SurfaceTerm prim(Prim p, std::vector<SurfaceTerm> args, SourceSpan span = {});

/// The body of a lambda (last child).
const SurfaceTerm &lam_body(const SurfaceNode &n);
/// The binder annotation of a lambda, or null.
SurfaceTerm lam_type(const SurfaceNode &n);

}  // namespace surf

/// Structural equality ignoring spans.
bool same_shape(const SurfaceTerm &a, const SurfaceTerm &b);

struct SurfaceDecl {
  bool is_axiom = false;
  std::string name;
  SurfaceTerm type;
  SurfaceTerm body;  // null for axioms
  SourceSpan span;
  SourceSpan name_span;
};

bool same_shape(const SurfaceDecl &a, const SurfaceDecl &b);

}  // namespace holim

#endif  // HOLIM_SURFACE_HPP
