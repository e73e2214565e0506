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

#include <filesystem>
#include <string>

#include "holim/corpus.hpp"
#include "holim/parser.hpp"
#include "holim/printer.hpp"
#include "holim/session.hpp"
#include "support/gen.hpp"

using namespace holim;

namespace {

Diagnostic parse_error(const std::string &src) {
  try {
    parse_file(src, "t.hott");
  } catch (const Error &e) {
    return e.diagnostic();
  }
  FAIL("expected a diagnostic");
  return {};
}

}  // namespace

TEST_CASE("declarations parse in order") {
  auto decls = parse_file("def id : Pi (A : Type 0) -> A -> A := fun A x => x", "t.hott");
  REQUIRE(decls.size() == 1);
  CHECK(decls[0].name == "id");
  CHECK_FALSE(decls[0].is_axiom);
  CHECK(decls[0].body != nullptr);

  decls = parse_file("axiom ax : Nat\ndef two : Nat := 2", "t.hott");
  REQUIRE(decls.size() == 2);
  CHECK(decls[0].is_axiom);
  CHECK(decls[0].body == nullptr);
  CHECK(decls[1].name == "two");
}

TEST_CASE("application is left associative and binds tighter than arrows") {
  SurfaceTerm t = parse_term("f x y");
  REQUIRE(t->kind == SurfaceKind::kApp);
  CHECK(t->kids[1]->name == "y");
  REQUIRE(t->kids[0]->kind == SurfaceKind::kApp);
  CHECK(t->kids[0]->kids[0]->name == "f");
  CHECK(t->kids[0]->kids[1]->name == "x");

  t = parse_term("f x -> g y");
  REQUIRE(t->kind == SurfaceKind::kPi);
  CHECK(t->kids[0]->kind == SurfaceKind::kApp);
  CHECK(t->kids[1]->kind == SurfaceKind::kApp);
}

TEST_CASE("arrows and products associate to the right") {
  CHECK(same_shape(parse_term("A -> B -> C"), parse_term("A -> (B -> C)")));
  CHECK(same_shape(parse_term("A * B * C"), parse_term("A * (B * C)")));
  CHECK(same_shape(parse_term("A * B -> C"), parse_term("A * (B -> C)")));
}

TEST_CASE("parse errors carry a position and the expected tokens") {
  Diagnostic d = parse_error("def bad : := zero");
  CHECK(d.code == ErrorCode::kParse);
  CHECK(d.span.start_line == 1);
  CHECK(d.span.start_col == 11);
  CHECK(d.message.find("expected") != std::string::npos);

  d = parse_error("def x : Nat := $");
  CHECK(d.code == ErrorCode::kLex);
  CHECK(d.span.start_col == 16);

  d = parse_error("def x : Nat :=\n  (zero");
  CHECK(d.code == ErrorCode::kParse);
  CHECK(d.span.start_line == 2);
}

TEST_CASE("diagnostic spans stay inside the input") {
  const char *inputs[] = {"def", "def x", "def x :", "def x : (", "fun", "def x : Nat := fun => x",
                          "def x : Nat := Sigma (a : Nat) zero", "def 3 : Nat := zero", "axiom"};
  for (const char *src : inputs) {
    CAPTURE(src);
    Diagnostic d = parse_error(src);
    std::string s(src);
    CHECK(d.span.start_line == 1);
    CHECK(d.span.start_col >= 1);
    CHECK(d.span.start_col <= static_cast<int>(s.size()) + 1);
  }
}

TEST_CASE("printing") {
  CHECK(print_term(surf::lam("x", false, nullptr, surf::var("x"))) == "fun x => x");
  CHECK(print_term(parse_term("(f x) y")) == "f x y");
  CHECK(print_term(parse_term("f (g x)")) == "f (g x)");
  CHECK(print_term(parse_term("Pi {A : Type 0} -> A -> A")) == "Pi {A : Type 0} -> A -> A");
  CHECK(print_term(parse_term("(A -> B) -> C")) == "(A -> B) -> C");
}

TEST_CASE("let desugars to a beta redex") {
  CHECK(same_shape(parse_term("let x : Nat := zero in succ x"),
                   parse_term("(fun (x : Nat) => succ x) zero")));
}

TEST_CASE("round trip through the printer on generated terms") {
  testing::TermGen gen(7);
  const testing::GCtx ctx{testing::GTy::kNat, testing::GTy::kFun};
  const std::vector<std::string> names{"a", "f"};
  for (int i = 0; i < 300; ++i) {
    Term t = gen.gen(gen.random_type(), ctx, 6);
    SurfaceTerm s = to_surface(t, names);
    std::string printed = print_term(s);
    CAPTURE(printed);
    SurfaceTerm back = parse_term(printed);
    CHECK(same_shape(s, back));
    CHECK(print_term(back) == printed);
  }
}

TEST_CASE("round trip through the printer on the corpus") {
  std::filesystem::path root = std::filesystem::path(HOLIM_SOURCE_DIR) / "corpus";
  CorpusManifest manifest = CorpusManifest::load(root);
  for (const std::string &rel : manifest.files) {
    CAPTURE(rel);
    auto first = parse_file(read_file((root / rel).string()), rel);
    std::string printed = print_file(first);
    auto second = parse_file(printed, rel);
    REQUIRE(first.size() == second.size());
    for (std::size_t i = 0; i < first.size(); ++i) CHECK(same_shape(first[i], second[i]));
    CHECK(print_file(second) == printed);
  }
}
