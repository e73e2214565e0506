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

#include <algorithm>
#include <set>
#include <string>

#include "holim/corpus.hpp"
#include "holim/parser.hpp"

using namespace holim;

namespace {

const std::filesystem::path kRoot = std::filesystem::path(HOLIM_SOURCE_DIR) / "corpus";

// The coverage contract: every name here must be declared and checked.
const std::set<std::string> kRequired = {
    // Prelude
    "idmap", "comp", "two_plus_two",
    // Paths
    "concat", "inv", "concat_refl_l", "concat_refl_r", "concat_inv_r", "concat_assoc", "ap",
    "ap_concat", "transport", "transport_concat", "sigma_path_split", "total_paths",
    "total_paths'",
    // Equivalences
    "isContr", "hfib", "isEquiv", "equiv", "happly", "funext_equiv", "quasiinv_to_isEquiv",
    "isTrunc", "isProp_isEquiv", "contr_equiv_contr",
    // Fundamentals
    "two_of_six_hgf", "two_of_six_h", "two_of_six_g", "two_of_six_f", "fiber_to_hfiber_equiv",
    "str_pullback_pres_acyclic_fib", "Pf", "sigma_f", "sigma_f_is_equiv", "factorization",
    "right_properness", "acyclic_fib_section",
    // CommutativeSquares
    "square", "square_comp", "square_inverse",
    // Pullbacks
    "pullback", "pullback_cone", "pullback_symm", "cospan_map", "cospan_idmap", "cospan_comp",
    "pullback_fmap", "cospan_equiv_inverse", "cospan_cone", "map_to_cospan_cone",
    "is_pullback_cone", "pullback_universal", "abstract_pullback_unique", "is_pullback_cone'",
    "pullback_path'", "cospan_cone_path", "cospan_cone_path'",
    // Pullbacks2
    "hfiber_to_pullback_equiv", "Omega", "Omega_to_pullback_equiv", "hfiber_of_pullback",
    "pullback_preserves_equiv", "pullback_preserves_fiberwise_properties",
    // Pullbacks3
    "two_pullbacks_equiv", "cone_compose_equiv", "abstract_two_pullbacks_lemma",
    "top_cospan_cone_to_composite", "map_to_cospan_cone_idmap", "map_to_cospan_cone_comp",
    "two_pullback_triangle_commutes",
    // Equalizers
    "equalizer", "eq_as_pb_equiv", "pb_as_eq_equiv",
    // Limits
    "graph", "diagram", "graph_cone", "is_limit_cone", "limit", "limit_graph_cone",
    "limit_universal", "is_limit_cone'", "abstract_limit_unique", "diagram_map", "limit_fmap",
    "limit_fmap_equiv",
    // Limits2
    "cospan_graph", "pb_as_lim_equiv", "lim_as_eq", "trunc_limits_preserve_trunc",
    // PointedTypes
    "pointed_type", "pointed_map", "Omega_ptd", "Omega_fmap", "Omega_iter", "hfiber_ptd",
    "fiber_seq",
    // LongExactSequences
    "Omega_to_hfiber_seq_0", "hfiber_sequence", "les_tower", "les_tower_fiber_seq",
};

struct Checked {
  CorpusManifest manifest;
  Session session;
  CheckReport report;
};

Checked check_all(const DeclRewrite &rewrite = {}) {
  Checked c{CorpusManifest::load(kRoot), Session{}, {}};
  c.report = check_corpus(c.manifest, kRoot, c.session, rewrite);
  return c;
}

const DeclResult *first_failure(const CheckReport &report) {
  for (const DeclResult &r : report.results) {
    if (!r.ok()) return &r;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("manifest matches the coverage list") {
  CorpusManifest m = CorpusManifest::load(kRoot);
  std::set<std::string> names;
  for (const LemmaSpec &l : m.lemmas) CHECK_MESSAGE(names.insert(l.name).second, l.name);
  CHECK(names == kRequired);
  auto axioms = std::count_if(m.lemmas.begin(), m.lemmas.end(),
                              [](const LemmaSpec &l) { return l.kind == LemmaKind::kAxiom; });
  CHECK(axioms == 1);
  CHECK(std::find_if(m.lemmas.begin(), m.lemmas.end(), [](const LemmaSpec &l) {
          return l.name == "funext_equiv" && l.kind == LemmaKind::kAxiom;
        }) != m.lemmas.end());
  CHECK(m.files.front() == "Prelude.hott");
}

TEST_CASE("malformed manifests are rejected") {
  CHECK_THROWS_AS(CorpusManifest::parse("a\tb\n", "m"), Error);
  CHECK_THROWS_AS(CorpusManifest::parse("a\tb\tlemma\n", "m"), Error);
  CorpusManifest m = CorpusManifest::parse("# header\n\na\tA.hott\ttheorem\nb\tB.hott\taxiom\n", "m");
  CHECK(m.lemmas.size() == 2);
  CHECK(m.files == std::vector<std::string>{"A.hott", "B.hott"});
}

TEST_CASE("the corpus checks") {
  Checked c = check_all();
  for (const Diagnostic &d : c.report.failures) FAIL_CHECK(d.render());
  CHECK(c.report.ok());
  std::size_t total = 0;
  for (const FileReport &f : c.report.files) total += f.declarations;
  CHECK(total == c.report.declarations());
  CHECK(c.report.files.size() == c.manifest.files.size());

  std::size_t axioms = 0;
  for (const DeclResult &r : c.report.results) {
    const GlobalEntry *e = c.session.env().find(r.name);
    REQUIRE(e != nullptr);
    if (e->is_axiom()) ++axioms;
  }
  CHECK(axioms == 1);

  const GlobalEntry *tri = c.session.env().find("two_pullback_triangle_commutes");
  REQUIRE(tri != nullptr);
  REQUIRE(tri->body_term.has_value());
  CHECK(tri->body_term->kind() == TermKind::kRefl);
}

TEST_CASE("computation in the checked corpus") {
  Checked c = check_all();
  REQUIRE(c.report.ok());
  Session &s = c.session;
  CHECK(s.normal_form("two_plus_two") == Term::numeral(4));
  CHECK(s.normal_form("transport_refl_witness") == Term::refl(Term::nat(), Term::numeral(4)));
  CHECK(s.normal_form("funext_equiv") == Term::global("funext_equiv"));
  CHECK_THROWS_AS(s.normal_form("no_such_name"), Error);

  auto r = s.check_source(
      "def happly_on_refl : Pi (x : Nat) -> Id Nat (succ x) (succ x) :=\n"
      "  happly (fun (n : Nat) => succ n) (fun (n : Nat) => succ n) (refl _ _)\n",
      "extra.hott");
  REQUIRE(r.size() == 1);
  REQUIRE_MESSAGE(r[0].ok(), r[0].error->render());
  CHECK(s.normal_form("happly_on_refl") ==
        Term::lam("x", Term::refl(Term::nat(), Term::succ(Term::var(0)))));
}

TEST_CASE("a manifest entry without a declaration is missing") {
  CorpusManifest m = CorpusManifest::load(kRoot);
  m.lemmas.push_back(LemmaSpec{"nonexistent_lemma", "Prelude.hott", LemmaKind::kTheorem});
  Session s;
  CheckReport report = check_corpus(m, kRoot, s);
  REQUIRE(report.failures.size() == 1);
  CHECK(report.failures[0].code == ErrorCode::kMissing);
  CHECK(report.failures[0].message.find("nonexistent_lemma") != std::string::npos);
}

TEST_CASE("a stubbed proof fails at that declaration") {
  Checked c = check_all([](const std::string &, std::vector<SurfaceDecl> &decls) {
    for (SurfaceDecl &d : decls) {
      if (d.name == "two_of_six_f") d.body = surf::prim(Prim::kStar, {});
    }
  });
  CHECK_FALSE(c.report.ok());
  const DeclResult *first = first_failure(c.report);
  REQUIRE(first != nullptr);
  CHECK(first->name == "two_of_six_f");
  CHECK(first->error->code == ErrorCode::kType);
}
