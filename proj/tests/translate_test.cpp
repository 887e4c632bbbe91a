#include "doctest.h"
#include "poslam/engine.hpp"
#include "poslam/error.hpp"
#include "poslam/generate.hpp"
#include "poslam/syntax.hpp"
#include "poslam/text.hpp"
#include "poslam/translate.hpp"

using namespace poslam;

namespace {

Term P(const char* s) { return parse_term(s); }

}  // namespace

TEST_CASE("translation examples") {
  CHECK(alpha_eq(translate(P("x")), P("x")));
  CHECK(alpha_eq(translate(P("(\\x. x x) (\\x. x x)")),
                 P("w[w <- (\\x. y[y <- x x]) z][z <- \\x. y[y <- x x]]")));
  CHECK(alpha_eq(translate(P("x[x <- y]")), P("y")));
  CHECK(alpha_eq(translate(P("\\x. x")), P("z[z <- \\x. x]")));
  CHECK(alpha_eq(translate(P("x y")), P("z[z <- x y]")));
}

TEST_CASE("translation output is explicit positive") {
  for (const Term& t : enumerate_terms(Grammar::Vsc, 7)) {
    Term u = translate(t);
    CAPTURE(print_term(t));
    CHECK(is_explicit_positive(u));
    NameSet fu = free_vars(u), ft = free_vars(t);
    CHECK(std::includes(ft.begin(), ft.end(), fu.begin(), fu.end()));
  }
}

TEST_CASE("translation is deterministic and alpha invariant") {
  for (const Term& t : random_terms(Grammar::Vsc, 13, 18, 200)) {
    NameSupply supply(t, 3);
    Term variant = uniquify_binders(t, supply);
    CHECK(print_term(translate(t)) == print_term(translate(t)));
    CHECK(alpha_eq(translate(t), translate(variant)));
  }
}

TEST_CASE("variable exponential and gc steps are absorbed") {
  Relation vsc{Calculus::Vsc, true};
  for (const Term& t : enumerate_terms(Grammar::Vsc, 7)) {
    for (const auto& r : reducts(vsc, t)) {
      if (r.redex.label != Label::EVar && r.redex.label != Label::GcVar) continue;
      CAPTURE(print_term(t));
      CHECK(alpha_eq(translate(t), translate(r.term)));
    }
  }
}

TEST_CASE("substitution context translation") {
  CtxTranslation empty = translate_subst_ctx(SubstCtx{});
  CHECK(empty.ctx.empty());
  CHECK(empty.renaming.empty());

  SubstCtx l;
  l.frames.push_back({"x", P("\\y. t")});
  l.frames.push_back({"w", P("z")});
  CtxTranslation tr = translate_subst_ctx(l);
  REQUIRE(tr.ctx.frames.size() == 1);
  CHECK(tr.ctx.frames[0].binder == "x");
  CHECK(alpha_eq(tr.ctx.frames[0].content, P("\\y. t")));
  CHECK(tr.renaming.entries() == std::map<Name, Name>{{"w", "z"}});

  SubstCtx r;
  r.frames.push_back({"w", P("z")});
  CtxTranslation only = translate_subst_ctx(r);
  CHECK(only.ctx.empty());
  CHECK(only.renaming.entries() == std::map<Name, Name>{{"w", "z"}});

  SubstCtx clash;
  clash.frames.push_back({"x", P("y")});
  clash.frames.push_back({"x", P("z")});
  CHECK_THROWS_AS(translate_subst_ctx(clash), PreconditionError);
}
