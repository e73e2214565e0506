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

// Runs the acceptance criteria and prints one PASS/FAIL line for each.

#include <fmt/format.h>
#include <sys/wait.h>

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "holim/corpus.hpp"
#include "holim/evaluator.hpp"
#include "holim/parser.hpp"
#include "holim/printer.hpp"
#include "support/gen.hpp"

namespace fs = std::filesystem;
using namespace holim;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass;
  std::string detail;
};

struct Setup {
  fs::path root;
  std::string cli;
  std::uint64_t seed;
  CorpusManifest manifest;
  Session session;
  CheckReport report;
};

std::string first_problem(const CheckReport &report) {
  return report.failures.empty() ? "" : report.failures.front().render();
}

Outcome corpus_check(Setup &s) {
  if (!s.report.ok()) return {false, first_problem(s.report)};
  for (const LemmaSpec &l : s.manifest.lemmas) {
    if (s.session.env().find(l.name) == nullptr) return {false, l.name + " not declared"};
  }
  std::string cmd = fmt::format("HOLIM_CORPUS='{}' '{}' corpus >/dev/null 2>&1",
                                s.root.string(), s.cli);
  auto start = Clock::now();
  int status = std::system(cmd.c_str());
  double secs = seconds_since(start);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::string detail = fmt::format("{} lemmas, {} declarations, cli exit {}, {:.2f} s",
                                   s.manifest.lemmas.size(), s.report.declarations(), code, secs);
  return {code == 0 && secs < 60.0, detail};
}

Outcome triangle(Setup &s) {
  const std::string name = "two_pullback_triangle_commutes";
  const GlobalEntry *e = s.session.env().find(name);
  if (e == nullptr || !e->body_term) return {false, "not declared"};
  bool core_refl = e->body_term->kind() == TermKind::kRefl;
  std::string surface;
  for (const std::string &rel : s.manifest.files) {
    std::string path = (s.root / rel).string();
    for (const SurfaceDecl &d : parse_file(read_file(path), path)) {
      if (d.name == name) surface = print_term(d.body);
    }
  }
  bool ok = std::none_of(s.report.results.begin(), s.report.results.end(),
                         [&](const DeclResult &r) { return r.name == name && !r.ok(); });
  return {ok && core_refl && surface == "refl _ _",
          fmt::format("body '{}', core node {}", surface, core_refl ? "Refl" : "other")};
}

Outcome eta(Setup &s) {
  const GlobalEnv &env = s.session.env();
  Evaluator ev(env);
  std::size_t functions = 0;
  for (const GlobalEntry &e : env.entries()) {
    if (ev.force(e.type)->kind != ValueKind::kPi) continue;
    ++functions;
    Value g = ev.eval(Env{}, Term::global(e.name));
    Value expanded = ev.eval(Env{}, Term::lam("x", Term::app(Term::global(e.name), Term::var(0))));
    if (!ev.convert(expanded, g, 0) || !ev.convert(g, expanded, 0)) {
      return {false, "eta fails for " + e.name};
    }
  }

  // Pair neutrals: stuck eliminators and variables of four Sigma types.
  const std::vector<Term> pair_types = {
      Term::sigma("_", Term::nat(), Term::boolean()),
      Term::sigma("x", Term::nat(), Term::id(Term::nat(), Term::var(0), Term::var(0))),
      Term::sigma("_", Term::pi("_", Term::nat(), Term::nat()), Term::unit()),
      Term::sigma("_", Term::boolean(), Term::sigma("_", Term::nat(), Term::nat())),
  };
  std::size_t pairs = 0;
  Kernel kernel(env);
  for (const Term &ty : pair_types) {
    // n : Nat, b : Bool, u : Unit, e : Id Nat zero n, p : ty
    Context ctx;
    ctx = ctx.bind("n", val::nat());
    ctx = ctx.bind("b", val::boolean());
    ctx = ctx.bind("u", val::unit());
    ctx = ctx.bind("e", ev.eval(ctx.env(), Term::id(Term::nat(), Term::zero(), Term::var(2))));
    ctx = ctx.bind("p", ev.eval(ctx.env(), shift(ty, 0, 4)));
    Term t5 = shift(ty, 0, 5);
    Term p = Term::var(0);
    std::vector<Term> neutrals = {
        p,
        Term::natrec(Term::lam("_", t5), p, Term::lam("_", Term::lam("r", Term::var(0))), Term::var(4)),
        Term::boolrec(Term::lam("_", t5), p, p, Term::var(3)),
        Term::unitrec(Term::lam("_", t5), p, Term::var(2)),
        Term::j(Term::lam("a", Term::lam("c", Term::lam("q", shift(ty, 0, 8)))),
                Term::lam("a", Term::var(1)), Term::zero(), Term::var(4), Term::var(1)),
    };
    Value type = ev.eval(ctx.env(), shift(ty, 0, 5));
    for (const Term &t : neutrals) {
      kernel.check(ctx, t, type);
      Value v = ev.eval(ctx.env(), t);
      if (ev.force(v)->kind != ValueKind::kNeutral) return {false, "not neutral: " + show_term(t)};
      Value expanded = ev.eval(ctx.env(), Term::pair(Term::fst(t), Term::snd(t)));
      if (!ev.convert(expanded, v, ctx.depth()) || !ev.convert(v, expanded, ctx.depth())) {
        return {false, "surjective pairing fails for " + show_term(t)};
      }
      ++pairs;
    }
  }
  return {functions > 0 && pairs == 20,
          fmt::format("{} function-typed globals, {} pair neutrals", functions, pairs)};
}

Outcome kernel_properties(Setup &s) {
  GlobalEnv empty;
  Kernel k(empty);
  Evaluator ev(empty);
  testing::TermGen gen(s.seed);
  const testing::GCtx open{testing::GTy::kNat, testing::GTy::kFun, testing::GTy::kPair,
                           testing::GTy::kBool, testing::GTy::kUnit};
  const int kTerms = 250;
  int oracle = 0;
  for (int i = 0; i < kTerms; ++i) {
    const testing::GCtx ctx = (i % 2 == 0) ? testing::GCtx{} : open;
    const Context kctx = testing::kernel_context(empty, ctx);
    const std::uint32_t depth = kctx.depth();
    testing::GTy ty = gen.random_type();
    Value type = ev.eval(Env{}, testing::type_term(ty));
    Term a = gen.gen(ty, ctx, 6);
    Term b = gen.variant(a, ty, ctx);
    Term c = gen.variant(b, ty, ctx);
    Term other = gen.gen(ty, ctx, 6);
    for (const Term *t : {&a, &b, &c, &other}) k.check(kctx, *t, type);
    Value va = ev.eval(kctx.env(), a), vb = ev.eval(kctx.env(), b);
    Value vc = ev.eval(kctx.env(), c), vo = ev.eval(kctx.env(), other);
    std::string where = fmt::format("term {}: {}", i, show_term(a));
    if (!ev.convert(va, va, depth)) return {false, "reflexivity, " + where};
    if (!ev.convert(va, vb, depth) || !ev.convert(vb, vc, depth) || !ev.convert(va, vc, depth)) {
      return {false, "transitivity, " + where};
    }
    bool ao = ev.convert(va, vo, depth);
    if (ao != ev.convert(vo, va, depth)) return {false, "symmetry, " + where};
    Term n1 = ev.quote(va, depth);
    if (!(ev.quote(ev.eval(kctx.env(), n1), depth) == n1)) return {false, "idempotence, " + where};
    k.check(kctx, n1, type);
    if (ctx.empty() && ty != testing::GTy::kFun) {
      ++oracle;
      if (ao != testing::same_result(testing::interpret(a), testing::interpret(other))) {
        return {false, "oracle disagreement, " + where};
      }
    }
  }

  const GlobalEnv &env = s.session.env();
  Kernel corpus_kernel(env, s.session.options());
  Evaluator cev(env);
  std::size_t bodies = 0;
  for (const GlobalEntry &e : env.entries()) {
    if (!e.value) continue;
    Term nf = cev.quote(*e.value, 0);
    try {
      corpus_kernel.check(Context{}, nf, e.type);
    } catch (const Error &err) {
      return {false, e.name + ": " + err.diagnostic().render()};
    }
    ++bodies;
  }
  return {true, fmt::format("{} generated terms ({} oracle comparisons), {} corpus normal forms",
                            kTerms, oracle, bodies)};
}

Outcome computation(Setup &s) {
  auto start = Clock::now();
  bool sum = s.session.normal_form("two_plus_two") == Term::numeral(4);

  GlobalEnv empty;
  Evaluator ev(empty);
  Term motive = Term::lam("u", Term::lam("v", Term::lam("p", Term::nat())));
  Term base = Term::lam("u", Term::succ(Term::var(0)));
  Term a = Term::numeral(2);
  Term j = Term::j(motive, base, a, a, Term::refl(Term::nat(), a));
  bool j_refl = ev.quote(ev.eval(Env{}, j), 0) == ev.quote(ev.eval(Env{}, Term::app(base, a)), 0);

  Evaluator cev(s.session.env());
  Term c = Term::refl(Term::nat(), Term::app(Term::app(Term::global("plus"), a), a));
  bool transport = s.session.normal_form("transport_refl_witness") ==
                   cev.quote(cev.eval(Env{}, c), 0, true);
  double secs = seconds_since(start);
  return {sum && j_refl && transport && secs < 1.0,
          fmt::format("two_plus_two {}, J on refl {}, transport along refl {}, {:.3f} s",
                      sum ? "ok" : "wrong", j_refl ? "ok" : "wrong", transport ? "ok" : "wrong",
                      secs)};
}

Outcome fault_injection(Setup &s) {
  std::vector<std::string> theorems;
  for (const LemmaSpec &l : s.manifest.lemmas) {
    if (l.kind == LemmaKind::kTheorem) theorems.push_back(l.name);
  }
  std::mt19937_64 rng(s.seed);
  std::vector<std::string> picked;
  std::sample(theorems.begin(), theorems.end(), std::back_inserter(picked), 10, rng);
  std::vector<std::string> missed;
  for (const std::string &target : picked) {
    Session session(s.session.options());
    CheckReport report = check_corpus(s.manifest, s.root, session,
                                      [&](const std::string &, std::vector<SurfaceDecl> &decls) {
                                        for (SurfaceDecl &d : decls) {
                                          if (d.name == target) d.body = surf::prim(Prim::kStar, {});
                                        }
                                      });
    auto first = std::find_if(report.results.begin(), report.results.end(),
                              [](const DeclResult &r) { return !r.ok(); });
    if (report.ok() || first == report.results.end() || first->name != target) {
      missed.push_back(target);
    }
  }
  std::string names;
  for (const std::string &n : picked) names += (names.empty() ? "" : ", ") + n;
  if (!missed.empty()) return {false, fmt::format("not caught: {}", missed.front())};
  return {picked.size() == 10, fmt::format("{} stubs rejected ({})", picked.size(), names)};
}

Outcome round_trip(Setup &s) {
  std::size_t decls = 0;
  for (const std::string &rel : s.manifest.files) {
    std::string path = (s.root / rel).string();
    auto first = parse_file(read_file(path), path);
    std::string printed = print_file(first);
    auto second = parse_file(printed, path);
    if (first.size() != second.size()) return {false, rel + ": declaration count changed"};
    for (std::size_t i = 0; i < first.size(); ++i) {
      if (!same_shape(first[i], second[i])) return {false, rel + ": " + first[i].name};
    }
    if (print_file(second) != printed) return {false, rel + ": reprint differs"};
    decls += first.size();
  }
  return {true, fmt::format("{} files, {} declarations", s.manifest.files.size(), decls)};
}

Outcome universes(Setup &) {
  GlobalEnv env;
  Kernel k(env);
  for (std::uint32_t i = 0; i <= 3; ++i) {
    try {
      k.check(Context{}, Term::universe(i), val::universe(i));
      return {false, fmt::format("Type {} accepted", i)};
    } catch (const Error &e) {
      if (e.code() != ErrorCode::kUniverse) {
        return {false, fmt::format("Type {}: {}", i, code_name(e.code()))};
      }
    }
    Session session;
    auto r = session.check_source(fmt::format("def t : Type {} := Type {}\n", i, i), "universe.hott");
    if (r.size() != 1 || r[0].ok() || r[0].error->code != ErrorCode::kUniverse) {
      return {false, fmt::format("Type {} through the front end", i)};
    }
  }
  return {true, "E-UNIVERSE for levels 0 to 3"};
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"holim acceptance checks"};
  std::string root = default_corpus_root().string();
  std::string cli = HOLIM_CLI_PATH;
  std::uint64_t seed = 20260517;
  app.add_option("--corpus", root, "Corpus root");
  app.add_option("--cli", cli, "Path to the holim executable");
  app.add_option("--seed", seed, "Seed for generated terms and sampled theorems");
  CLI11_PARSE(app, argc, argv);

  Setup s{root, cli, seed, {}, Session{}, {}};
  try {
    s.manifest = CorpusManifest::load(s.root);
  } catch (const Error &e) {
    std::cerr << e.diagnostic().render() << '\n';
    return 2;
  }
  s.report = check_corpus(s.manifest, s.root, s.session);

  const std::vector<std::pair<std::string, std::function<Outcome(Setup &)>>> criteria = {
      {"corpus check", corpus_check},
      {"triangle by refl", triangle},
      {"eta laws", eta},
      {"kernel properties", kernel_properties},
      {"computation oracles", computation},
      {"fault injection", fault_injection},
      {"parser round trip", round_trip},
      {"no Type-in-Type", universes},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second(s);
    } catch (const Error &e) {
      o = {false, e.diagnostic().render()};
    } catch (const std::exception &e) {
      o = {false, e.what()};
    }
    if (!o.pass) ++failed;
    std::cout << fmt::format("{} {} {}: {}\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                             o.detail);
  }
  return failed == 0 ? 0 : 1;
}
