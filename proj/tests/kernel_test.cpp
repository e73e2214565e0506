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

#include "holim/evaluator.hpp"
#include "holim/kernel.hpp"
#include "support/gen.hpp"

using namespace holim;
using testing::GCtx;
using testing::GTy;

namespace {

Term nat_to_nat() { return Term::pi("_", Term::nat(), Term::nat()); }

GlobalEnv env_with_axiom() {
  GlobalEnv env;
  check_decl_into(env, Declaration{"f", nat_to_nat(), std::nullopt, {}});
  return env;
}

Term nf(const GlobalEnv &env, const Term &t) {
  Evaluator ev(env);
  return ev.quote(ev.eval(Env{}, t), 0);
}

ErrorCode check_error(const GlobalEnv &env, const Term &t, const Term &type) {
  Kernel k(env);
  try {
    k.check(Context{}, t, eval(env, Env{}, type));
  } catch (const Error &e) {
    return e.code();
  }
  FAIL("expected the check to fail");
  return ErrorCode::kStuck;
}

}  // namespace

TEST_CASE("evaluation computes eliminators on constructors") {
  GlobalEnv env;
  Term plus_two = Term::lam("n", Term::lam("r", Term::succ(Term::var(0))));
  Term sum = Term::natrec(Term::lam("_", Term::nat()), Term::numeral(2), plus_two, Term::numeral(2));
  CHECK(nf(env, sum) == Term::succ(Term::succ(Term::succ(Term::succ(Term::zero())))));

  Term motive = Term::lam("u", Term::lam("v", Term::lam("p", Term::nat())));
  Term base = Term::lam("u", Term::succ(Term::var(0)));
  Term a = Term::numeral(2);
  Term j = Term::j(motive, base, a, a, Term::refl(Term::nat(), a));
  CHECK(nf(env, j) == nf(env, Term::app(base, a)));
  CHECK(nf(env, j) == Term::numeral(3));

  CHECK(nf(env, Term::boolrec(Term::lam("_", Term::nat()), Term::zero(), Term::numeral(1),
                              Term::false_())) == Term::numeral(1));
  CHECK(nf(env, Term::unitrec(Term::lam("_", Term::nat()), Term::numeral(5), Term::star())) ==
        Term::numeral(5));
}

TEST_CASE("axioms stay neutral") {
  GlobalEnv env = env_with_axiom();
  Value v = eval(env, Env{}, Term::app(Term::global("f"), Term::zero()));
  REQUIRE(v->kind == ValueKind::kNeutral);
  CHECK(v->head.kind == HeadKind::kGlobal);
  REQUIRE(v->spine.size() == 1);
  CHECK(v->spine[0].kind == FrameKind::kApp);
  CHECK(nf(env, Term::app(Term::global("f"), Term::zero())) ==
        Term::app(Term::global("f"), Term::zero()));
}

TEST_CASE("readback") {
  GlobalEnv env;
  CHECK(quote(env, val::succ(val::zero()), 0) == Term::succ(Term::zero()));
  Value app = val::neutral(Head{HeadKind::kLocal, 0}, {Frame{FrameKind::kApp, {val::zero()}}});
  CHECK(quote(env, app, 1) == Term::app(Term::var(0), Term::zero()));
  CHECK(nf(env, Term::lam("x", Term::var(0))) == Term::lam("x", Term::var(0)));
}

TEST_CASE("conversion") {
  GlobalEnv env = env_with_axiom();
  Value f = eval(env, Env{}, Term::global("f"));
  Value eta = eval(env, Env{}, Term::lam("x", Term::app(Term::global("f"), Term::var(0))));
  CHECK(convert(env, eta, f, 0));
  CHECK(convert(env, f, eta, 0));

  Value p = val::local(0);
  Value pair = eval(env, Env{}.extend(p), Term::pair(Term::fst(Term::var(0)), Term::snd(Term::var(0))));
  CHECK(convert(env, p, pair, 1));
  CHECK(convert(env, pair, p, 1));

  CHECK_FALSE(convert(env, val::zero(), val::succ(val::zero()), 0));
  // No eta for Unit.
  CHECK_FALSE(convert(env, val::local(0), val::star(), 1));
  CHECK_FALSE(convert(env, val::universe(0), val::universe(1), 0));
}

TEST_CASE("inference") {
  GlobalEnv env;
  Kernel k(env);
  CHECK(quote(env, k.infer(Context{}, Term::nat()), 0) == Term::universe(0));
  CHECK(quote(env, k.infer(Context{}, Term::refl(Term::nat(), Term::zero())), 0) ==
        Term::id(Term::nat(), Term::zero(), Term::zero()));
  CHECK(quote(env, k.infer(Context{}, Term::universe(2)), 0) == Term::universe(3));
  CHECK(quote(env, k.infer(Context{}, Term::pi("A", Term::universe(0), Term::var(0))), 0) ==
        Term::universe(1));
  CHECK_THROWS_AS(k.infer(Context{}, Term::universe(3)), Error);
  try {
    k.infer(Context{}, Term::fst(Term::zero()));
    FAIL("fst of zero inferred");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::kType);
  }
  try {
    k.infer(Context{}, Term::app(Term::zero(), Term::zero()));
    FAIL("zero applied");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::kNotFunction);
  }
}

TEST_CASE("checking") {
  GlobalEnv env;
  Kernel k(env);
  CHECK_NOTHROW(k.check(Context{}, Term::lam("x", Term::var(0)), eval(env, Env{}, nat_to_nat())));
  CHECK_NOTHROW(k.check(Context{}, Term::nat(), val::universe(1)));
  CHECK_NOTHROW(k.check(Context{}, Term::universe(0), val::universe(2)));
  CHECK(check_error(env, Term::zero(), Term::boolean()) == ErrorCode::kType);
  CHECK(check_error(env, Term::refl(Term::nat(), Term::zero()),
                    Term::id(Term::nat(), Term::zero(), Term::numeral(1))) == ErrorCode::kType);
}

TEST_CASE("no universe contains itself") {
  GlobalEnv env;
  for (std::uint32_t i = 0; i <= 3; ++i) {
    CAPTURE(i);
    CHECK(check_error(env, Term::universe(i), Term::universe(i)) == ErrorCode::kUniverse);
  }
  CHECK(check_error(env, Term::universe(1), Term::universe(0)) == ErrorCode::kUniverse);
}

TEST_CASE("declarations") {
  GlobalEnv env;
  check_decl_into(env, Declaration{"two", Term::nat(), Term::numeral(2), {}});
  CHECK(env.find("two") != nullptr);
  GlobalEnv extended = check_decl(env, Declaration{"ax", Term::nat(), std::nullopt, {}});
  CHECK(extended.find("ax")->is_axiom());
  CHECK(env.find("ax") == nullptr);
  try {
    check_decl_into(env, Declaration{"bad", Term::nat(), Term::star(), {}});
    FAIL("star accepted as a Nat");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::kType);
    CHECK(e.diagnostic().message.find("bad") != std::string::npos);
  }
  try {
    check_decl_into(env, Declaration{"two", Term::nat(), Term::zero(), {}});
    FAIL("duplicate accepted");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::kDuplicate);
  }
}

TEST_CASE("generated terms: typing, conversion laws and normal forms") {
  GlobalEnv env;
  Kernel k(env);
  Evaluator ev(env);
  testing::TermGen gen(424242);
  const GCtx open{GTy::kNat, GTy::kFun, GTy::kPair, GTy::kBool, GTy::kUnit};
  int closed_oracle_checks = 0;
  for (int i = 0; i < 250; ++i) {
    const GCtx ctx = (i % 2 == 0) ? GCtx{} : open;
    const Context kctx = testing::kernel_context(env, ctx);
    const std::uint32_t depth = kctx.depth();
    GTy ty = gen.random_type();
    Value type = eval(env, Env{}, testing::type_term(ty));

    Term a = gen.gen(ty, ctx, 6);
    Term b = gen.variant(a, ty, ctx);
    Term c = gen.variant(b, ty, ctx);
    Term other = gen.gen(ty, ctx, 6);
    CAPTURE(a.size());
    for (const Term &t : {a, b, c, other}) REQUIRE_NOTHROW(k.check(kctx, t, type));

    Value va = ev.eval(kctx.env(), a), vb = ev.eval(kctx.env(), b);
    Value vc = ev.eval(kctx.env(), c), vo = ev.eval(kctx.env(), other);

    CHECK(ev.convert(va, va, depth));
    CHECK(ev.convert(va, vb, depth));
    CHECK(ev.convert(vb, vc, depth));
    CHECK(ev.convert(va, vc, depth));
    CHECK(ev.convert(va, vo, depth) == ev.convert(vo, va, depth));
    if (ev.convert(va, vo, depth) && ev.convert(vo, vb, depth)) CHECK(ev.convert(va, vb, depth));

    Term n1 = ev.quote(va, depth);
    Term n2 = ev.quote(ev.eval(kctx.env(), n1), depth);
    CHECK(n1 == n2);
    CHECK_NOTHROW(k.check(kctx, n1, type));
    CHECK(ev.convert(ev.eval(kctx.env(), n1), va, depth));

    if (ctx.empty() && ty != GTy::kFun) {
      ++closed_oracle_checks;
      CHECK(ev.convert(va, vo, depth) ==
            testing::same_result(testing::interpret(a), testing::interpret(other)));
      CHECK(testing::same_result(testing::interpret(a), testing::interpret(b)));
    }
  }
  CHECK(closed_oracle_checks > 50);
}
