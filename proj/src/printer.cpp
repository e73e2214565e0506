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

#include "holim/printer.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <set>
#include <utility>

namespace holim {

namespace {

enum Prec { kTop = 0, kApp = 1, kAtom = 2 };

class Printer {
 public:
  std::string run(const SurfaceTerm &t) {
    print(t, kTop);
    return std::move(out_);
  }

 private:
  void print(const SurfaceTerm &t, Prec prec) {
    const SurfaceNode &n = *t;
    switch (n.kind) {
      case SurfaceKind::kVar:
        out_ += n.name;
        return;
      case SurfaceKind::kExplicitVar:
        out_ += "@" + n.name;
        return;
      case SurfaceKind::kHole:
        out_ += "_";
        return;
      case SurfaceKind::kNatLit:
        out_ += std::to_string(n.number);
        return;
      case SurfaceKind::kUniverse:
        paren_if(prec > kApp, [&] { out_ += fmt::format("Type {}", n.number); });
        return;
      case SurfaceKind::kPrim:
        if (n.kids.empty()) {
          out_ += prim_keyword(n.prim);
          return;
        }
        paren_if(prec > kApp, [&] {
          out_ += prim_keyword(n.prim);
          for (const auto &k : n.kids) {
            out_ += ' ';
            print(k, kAtom);
          }
        });
        return;
      case SurfaceKind::kApp:
        paren_if(prec > kApp, [&] {
          const SurfaceNode &fn = *n.kids[0];
          bool bare = fn.kind == SurfaceKind::kPrim && fn.kids.empty() &&
                      prim_arity(fn.prim) > 0;
          paren_if(bare, [&] { print(n.kids[0], kApp); });
          out_ += ' ';
          print(n.kids[1], kAtom);
        });
        return;
      case SurfaceKind::kPair:
        out_ += '(';
        tuple(t);
        out_ += ')';
        return;
      case SurfaceKind::kAnn:
        out_ += '(';
        if (n.kids[0]->kind == SurfaceKind::kPair) {
          tuple(n.kids[0]);
        } else {
          print(n.kids[0], kTop);
        }
        out_ += " : ";
        print(n.kids[1], kTop);
        out_ += ')';
        return;
      case SurfaceKind::kPi:
      case SurfaceKind::kSigma:
      case SurfaceKind::kLam:
        paren_if(prec > kTop, [&] { binder_form(t); });
        return;
    }
  }

  template <typename F>
  void paren_if(bool wrap, F &&body) {
    if (wrap) out_ += '(';
    body();
    if (wrap) out_ += ')';
  }

  // Elements of a right-nested pair, comma separated.
  void tuple(SurfaceTerm t) {
    for (;;) {
      print(t->kids[0], kTop);
      out_ += " , ";
      t = t->kids[1];
      if (t->kind != SurfaceKind::kPair) break;
    }
    print(t, kTop);
  }

  static bool is_arrow(const SurfaceNode &n) {
    return n.name == "_" && !n.implicit &&
           (n.kind == SurfaceKind::kPi || n.kind == SurfaceKind::kSigma);
  }

  void binder_form(SurfaceTerm t) {
    const SurfaceNode &n = *t;
    if (is_arrow(n)) {
      print(n.kids[0], kApp);
      out_ += n.kind == SurfaceKind::kPi ? " -> " : " * ";
      print(n.kids[1], kTop);
      return;
    }
    SurfaceKind kind = n.kind;
    out_ += kind == SurfaceKind::kPi ? "Pi" : kind == SurfaceKind::kSigma ? "Sigma" : "fun";
    while (t->kind == kind && !is_arrow(*t)) {
      const SurfaceNode &b = *t;
      out_ += ' ';
      if (kind == SurfaceKind::kLam) {
        SurfaceTerm ty = surf::lam_type(b);
        if (b.implicit) {
          out_ += '{' + b.name;
          if (ty) {
            out_ += " : ";
            print(ty, kTop);
          }
          out_ += '}';
        } else if (ty) {
          out_ += '(' + b.name + " : ";
          print(ty, kTop);
          out_ += ')';
        } else {
          out_ += b.name;
        }
        t = surf::lam_body(b);
      } else {
        out_ += b.implicit ? '{' : '(';
        out_ += b.name + " : ";
        print(b.kids[0], kTop);
        out_ += b.implicit ? '}' : ')';
        t = b.kids[1];
      }
    }
    out_ += kind == SurfaceKind::kPi ? " -> " : kind == SurfaceKind::kSigma ? " , " : " => ";
    print(t, kTop);
  }

  std::string out_;
};

void collect_globals(const Term &t, std::set<std::string> &out) {
  if (t.kind() == TermKind::kGlobal) out.insert(t.name());
  for (const Term &c : t.children()) collect_globals(c, out);
}

// Whether Var(index) occurs free in t.
bool uses(const Term &t, std::uint32_t index) {
  if (t.kind() == TermKind::kVar) return t.index() == index;
  const auto &kids = t.children();
  for (std::size_t i = 0; i < kids.size(); ++i) {
    bool under = t.binds() && i + 1 == kids.size();
    if (uses(kids[i], under ? index + 1 : index)) return true;
  }
  return false;
}

class Unelaborator {
 public:
  Unelaborator(const Term &root, std::vector<std::string> names)
      : names_(std::move(names)) {
    collect_globals(root, globals_);
  }

  SurfaceTerm go(const Term &t) {
    switch (t.kind()) {
      case TermKind::kVar: {
        std::uint32_t i = t.index();
        if (i >= names_.size()) return surf::var(fmt::format("#{}", i));
        return surf::var(names_[names_.size() - 1 - i]);
      }
      case TermKind::kUniverse:
        return surf::universe(t.level());
      case TermKind::kGlobal:
        return surf::var(t.name());
      case TermKind::kMeta:
        return surf::var(fmt::format("?{}", t.number()));
      case TermKind::kPi: {
        SurfaceTerm dom = go(t[0]);
        std::string x = bind(t.name(), uses(t[1], 0));
        SurfaceTerm cod = go(t[1]);
        unbind();
        return surf::pi(x, t.implicit(), dom, cod);
      }
      case TermKind::kSigma: {
        SurfaceTerm a = go(t[0]);
        std::string x = bind(t.name(), uses(t[1], 0));
        SurfaceTerm b = go(t[1]);
        unbind();
        return surf::sigma(x, a, b);
      }
      case TermKind::kLam: {
        std::string x = bind(t.name(), uses(t[0], 0));
        SurfaceTerm body = go(t[0]);
        unbind();
        return surf::lam(x, false, nullptr, body);
      }
      case TermKind::kApp:
        return surf::app(go(t[0]), go(t[1]));
      case TermKind::kPair:
        return surf::pair(go(t[0]), go(t[1]));
      case TermKind::kAnn:
        return surf::ann(go(t[0]), go(t[1]));
      case TermKind::kFst: return prim(Prim::kFst, t);
      case TermKind::kSnd: return prim(Prim::kSnd, t);
      case TermKind::kId: return prim(Prim::kId, t);
      case TermKind::kRefl: return prim(Prim::kRefl, t);
      case TermKind::kJ: return prim(Prim::kJ, t);
      case TermKind::kNat: return prim(Prim::kNat, t);
      case TermKind::kZero: return prim(Prim::kZero, t);
      case TermKind::kSucc: return prim(Prim::kSucc, t);
      case TermKind::kNatRec: return prim(Prim::kNatRec, t);
      case TermKind::kUnit: return prim(Prim::kUnit, t);
      case TermKind::kStar: return prim(Prim::kStar, t);
      case TermKind::kUnitRec: return prim(Prim::kUnitRec, t);
      case TermKind::kEmpty: return prim(Prim::kEmpty, t);
      case TermKind::kEmptyRec: return prim(Prim::kEmptyRec, t);
      case TermKind::kBool: return prim(Prim::kBool, t);
      case TermKind::kTrue: return prim(Prim::kTrue, t);
      case TermKind::kFalse: return prim(Prim::kFalse, t);
      case TermKind::kBoolRec: return prim(Prim::kBoolRec, t);
    }
    return surf::hole();
  }

 private:
  SurfaceTerm prim(Prim p, const Term &t) {
    std::vector<SurfaceTerm> args;
    for (const Term &c : t.children()) args.push_back(go(c));
    return surf::prim(p, std::move(args));
  }

  bool taken(const std::string &name) const {
    return globals_.count(name) != 0 ||
           std::find(names_.begin(), names_.end(), name) != names_.end();
  }

  std::string bind(const std::string &hint, bool used) {
    std::string base = hint.empty() ? "_" : hint;
    if (base == "_" && used) base = "x";
    std::string name = base;
    if (name != "_") {
      for (int k = 1; taken(name); ++k) name = fmt::format("{}{}", base, k);
    }
    names_.push_back(name);
    return name;
  }

  void unbind() { names_.pop_back(); }

  std::vector<std::string> names_;
  std::set<std::string> globals_;
};

}  // namespace

std::string print_term(const SurfaceTerm &t) { return Printer().run(t); }

std::string print_decl(const SurfaceDecl &d) {
  std::string out = fmt::format("{} {} : {}", d.is_axiom ? "axiom" : "def",
                                d.name, print_term(d.type));
  if (d.body) out += " :=\n  " + print_term(d.body);
  return out;
}

std::string print_file(const std::vector<SurfaceDecl> &decls) {
  std::string out;
  for (const SurfaceDecl &d : decls) {
    out += print_decl(d);
    out += "\n\n";
  }
  return out;
}

SurfaceTerm to_surface(const Term &t, const std::vector<std::string> &names) {
  return Unelaborator(t, names).go(t);
}

std::string show_term(const Term &t, const std::vector<std::string> &names) {
  return print_term(to_surface(t, names));
}

}  // namespace holim
