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

#include "holim/surface.hpp"

#include <array>
#include <utility>

namespace holim {

namespace {

struct PrimInfo {
  Prim prim;
  std::string_view keyword;
  std::size_t arity;
};

constexpr std::array<PrimInfo, 18> kPrims = {{
    {Prim::kFst, "fst", 1},
    {Prim::kSnd, "snd", 1},
    {Prim::kId, "Id", 3},
    {Prim::kRefl, "refl", 2},
    {Prim::kJ, "J", 5},
    {Prim::kNat, "Nat", 0},
    {Prim::kZero, "zero", 0},
    {Prim::kSucc, "succ", 1},
    {Prim::kNatRec, "natrec", 4},
    {Prim::kUnit, "Unit", 0},
    {Prim::kStar, "star", 0},
    {Prim::kUnitRec, "unitrec", 3},
    {Prim::kEmpty, "Empty", 0},
    {Prim::kEmptyRec, "emptyrec", 2},
    {Prim::kBool, "Bool", 0},
    {Prim::kTrue, "true", 0},
    {Prim::kFalse, "false", 0},
    {Prim::kBoolRec, "boolrec", 4},
}};

SurfaceTerm make(SurfaceKind kind, std::vector<SurfaceTerm> kids,
                 SourceSpan span) {
  auto n = std::make_shared<SurfaceNode>();
  n->kind = kind;
  n->kids = std::move(kids);
  n->span = std::move(span);
  return n;
}

}  // namespace

std::string_view prim_keyword(Prim p) {
  return kPrims[static_cast<std::size_t>(p)].keyword;
}

std::size_t prim_arity(Prim p) {
  return kPrims[static_cast<std::size_t>(p)].arity;
}

std::optional<Prim> prim_from_keyword(std::string_view word) {
  for (const PrimInfo &info : kPrims) {
    if (info.keyword == word) return info.prim;
  }
  return std::nullopt;
}

namespace surf {

SurfaceTerm var(std::string name, SourceSpan span) {
  auto n = std::make_shared<SurfaceNode>();
  n->kind = SurfaceKind::kVar;
  n->name = std::move(name);
  n->span = std::move(span);
  return n;
}

SurfaceTerm explicit_var(std::string name, SourceSpan span) {
  auto n = std::make_shared<SurfaceNode>();
  n->kind = SurfaceKind::kExplicitVar;
  n->name = std::move(name);
  n->span = std::move(span);
  return n;
}

SurfaceTerm hole(SourceSpan span) {
  return make(SurfaceKind::kHole, {}, std::move(span));
}

SurfaceTerm universe(std::uint32_t level, SourceSpan span) {
  auto n = std::make_shared<SurfaceNode>();
  n->kind = SurfaceKind::kUniverse;
  n->number = level;
  n->span = std::move(span);
  return n;
}

SurfaceTerm nat_lit(std::uint32_t value, SourceSpan span) {
  auto n = std::make_shared<SurfaceNode>();
  n->kind = SurfaceKind::kNatLit;
  n->number = value;
  n->span = std::move(span);
  return n;
}

SurfaceTerm pi(std::string name, bool implicit, SurfaceTerm domain,
               SurfaceTerm codomain, SourceSpan span) {
  auto n = std::make_shared<SurfaceNode>();
  n->kind = SurfaceKind::kPi;
  n->name = std::move(name);
  n->implicit = implicit;
  n->kids = {std::move(domain), std::move(codomain)};
  n->span = std::move(span);
  return n;
}

SurfaceTerm sigma(std::string name, SurfaceTerm first, SurfaceTerm second,
                  SourceSpan span) {
  auto n = std::make_shared<SurfaceNode>();
  n->kind = SurfaceKind::kSigma;
  n->name = std::move(name);
  n->kids = {std::move(first), std::move(second)};
  n->span = std::move(span);
  return n;
}

SurfaceTerm lam(std::string name, bool implicit, SurfaceTerm type,
                SurfaceTerm body, SourceSpan span) {
  auto n = std::make_shared<SurfaceNode>();
  n->kind = SurfaceKind::kLam;
  n->name = std::move(name);
  n->implicit = implicit;
  n->annotated = type != nullptr;
  if (type) n->kids.push_back(std::move(type));
  n->kids.push_back(std::move(body));
  n->span = std::move(span);
  return n;
}

SurfaceTerm app(SurfaceTerm fn, SurfaceTerm arg, SourceSpan span) {
  return make(SurfaceKind::kApp, {std::move(fn), std::move(arg)},
              std::move(span));
}

SurfaceTerm pair(SurfaceTerm first, SurfaceTerm second, SourceSpan span) {
  return make(SurfaceKind::kPair, {std::move(first), std::move(second)},
              std::move(span));
}

SurfaceTerm ann(SurfaceTerm term, SurfaceTerm type, SourceSpan span) {
  return make(SurfaceKind::kAnn, {std::move(term), std::move(type)},
              std::move(span));
}

SurfaceTerm prim(Prim p, std::vector<SurfaceTerm> args, SourceSpan span) {
  auto n = std::make_shared<SurfaceNode>();
  n->kind = SurfaceKind::kPrim;
  n->prim = p;
  n->kids = std::move(args);
  n->span = std::move(span);
  return n;
}

const SurfaceTerm &lam_body(const SurfaceNode &n) { return n.kids.back(); }

SurfaceTerm lam_type(const SurfaceNode &n) {
  return n.annotated ? n.kids.front() : nullptr;
}

}  // namespace surf

bool same_shape(const SurfaceTerm &a, const SurfaceTerm &b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind || a->name != b->name || a->number != b->number ||
      a->implicit != b->implicit || a->annotated != b->annotated ||
      a->kids.size() != b->kids.size()) {
    return false;
  }
  if (a->kind == SurfaceKind::kPrim && a->prim != b->prim) return false;
  for (std::size_t i = 0; i < a->kids.size(); ++i) {
    if (!same_shape(a->kids[i], b->kids[i])) return false;
  }
  return true;
}

bool same_shape(const SurfaceDecl &a, const SurfaceDecl &b) {
  return a.is_axiom == b.is_axiom && a.name == b.name &&
         same_shape(a.type, b.type) && same_shape(a.body, b.body);
}

}  // namespace holim
