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

#include <doctest.h>

#include <string>

#include "holim/elaborator.hpp"
#include "holim/parser.hpp"
#include "holim/session.hpp"

using namespace holim;

namespace {

Session base_session() {
  Session s;
  for (const char *f : {"Prelude.hott", "Paths.hott"}) {
    auto results = s.check_file(std::string(HOLIM_SOURCE_DIR) + "/corpus/" + f);
    for (const auto &r : results) REQUIRE_MESSAGE(r.ok(), r.error->render());
  }
  return s;
}

void require_ok(const std::vector<DeclResult> &results) {
  for (const auto &r : results) REQUIRE_MESSAGE(r.ok(), r.error->render());
}

ErrorCode code_of(const std::vector<DeclResult> &results) {
  REQUIRE(results.size() == 1);
  REQUIRE_FALSE(results[0].ok());
  return results[0].error->code;
}

}  // namespace

TEST_CASE("implicit arguments are solved as if given") {
  Session s = base_session();
  require_ok(s.check_source(
      "axiom p : Id Nat zero zero\n"
      "def inferred : Id Nat (succ zero) (succ zero) := ap succ p\n"
      "def explicit : Id Nat (succ zero) (succ zero) := @ap Nat Nat succ zero zero p\n",
      "implicits.hott"));
  const GlobalEntry *a = s.env().find("inferred");
  const GlobalEntry *b = s.env().find("explicit");
  REQUIRE(a != nullptr);
  REQUIRE(b != nullptr);
  CHECK(*a->body_term == *b->body_term);
}

TEST_CASE("implicit binders and explicit application") {
  Session s = base_session();
  require_ok(s.check_source(
      "def twice : Pi {A : Type 0} (f : A -> A) -> A -> A := fun {A} f x => f (f x)\n"
      "def four : Nat := twice (fun n => succ (succ n)) zero\n"
      "def four' : Nat := @twice Nat (fun n => succ (succ n)) zero\n",
      "twice.hott"));
  CHECK(s.normal_form("four") == Term::numeral(4));
  CHECK(s.normal_form("four'") == Term::numeral(4));
}

TEST_CASE("unconstrained implicits are reported") {
  Session s = base_session();
  Elaborator elab(s.env());
  try {
    elab.elaborate(Context{}, parse_term("idmap"));
    FAIL("idmap elaborated without a type");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::kUnsolved);
  }
  require_ok(s.check_source("def nested : Nat := idmap (idmap zero)\n", "nested.hott"));
  CHECK(code_of(s.check_source("def dangling : Nat := fst (zero, idmap)\n", "dangling.hott")) ==
        ErrorCode::kUnsolved);
}

TEST_CASE("unification") {
  GlobalEnv env;
  Elaborator elab(env);
  Context ctx;

  auto [m, mv] = elab.fresh_meta(ctx, val::universe(0), {}, "test");
  elab.unify(ctx, mv, val::nat());
  CHECK(elab.zonk(m) == Term::nat());

  auto [n, nv] = elab.fresh_meta(ctx, val::nat(), {}, "test");
  elab.unify(ctx, val::succ(nv), val::succ(val::zero()));
  CHECK(elab.zonk(n) == Term::zero());

  auto [o, ov] = elab.fresh_meta(ctx, val::nat(), {}, "test");
  try {
    elab.unify(ctx, ov, val::succ(ov));
    FAIL("occurs check missed");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::kOccurs);
  }

  try {
    elab.unify(ctx, val::nat(), val::boolean());
    FAIL("Nat unified with Bool");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::kUnify);
  }
  try {
    elab.zonk(o);
    FAIL("unsolved meta zonked");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::kUnsolved);
  }
}

TEST_CASE("metas under binders solve by pattern abstraction") {
  Session s = base_session();
  require_ok(s.check_source(
      "def const_path : Pi (n : Nat) -> Id Nat n n := fun n => refl _ _\n"
      "def under : Pi (f : Nat -> Nat) (n : Nat) -> Id Nat (f n) (f n) :=\n"
      "  fun f n => ap f (refl _ n)\n",
      "binders.hott"));
}

TEST_CASE("elaboration errors carry spans") {
  Session s = base_session();
  auto r = s.check_source("def wrong : Bool := succ zero\n", "wrong.hott");
  CHECK(code_of(r) == ErrorCode::kType);
  CHECK(r[0].error->span.file == "wrong.hott");
  CHECK(r[0].error->span.start_line == 1);
  CHECK(code_of(s.check_source("def u : Nat := undefined_name\n", "u.hott")) ==
        ErrorCode::kUnresolved);
}

TEST_CASE("elaboration is deterministic") {
  std::string path = std::string(HOLIM_SOURCE_DIR) + "/corpus/Paths.hott";
  std::vector<SurfaceDecl> decls = parse_file(read_file(path), path);
  Session s1 = base_session();
  Session s2 = base_session();
  std::string prelude = std::string(HOLIM_SOURCE_DIR) + "/corpus/Prelude.hott";
  Session fresh;
  require_ok(fresh.check_file(prelude));
  for (const SurfaceDecl &d : decls) {
    Elaborator a(fresh.env()), b(fresh.env());
    Declaration da = a.elaborate_decl(d);
    Declaration db = b.elaborate_decl(d);
    CHECK(da.type == db.type);
    REQUIRE(da.body.has_value() == db.body.has_value());
    if (da.body) CHECK(*da.body == *db.body);
    require_ok(fresh.check_decls({d}, path));
  }
  for (const SurfaceDecl &d : decls) {
    CHECK(*s1.env().find(d.name)->body_term == *s2.env().find(d.name)->body_term);
  }
}
