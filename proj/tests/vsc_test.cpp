#include <algorithm>

#include "doctest.h"
#include "oracle.hpp"
#include "poslam/engine.hpp"
#include "poslam/error.hpp"
#include "poslam/generate.hpp"
#include "poslam/syntax.hpp"
#include "poslam/text.hpp"
#include "poslam/vsc.hpp"

using namespace poslam;

namespace {

Term P(const char* s) { return parse_term(s); }

Path at(const char* s) { return path_from_string(s); }

std::vector<Label> labels(const std::vector<Redex>& rs) {
  std::vector<Label> out;
  for (const auto& r : rs) out.push_back(r.label);
  return out;
}

const Redex& only(const std::vector<Redex>& rs, Label l) {
  auto it = std::find_if(rs.begin(), rs.end(), [&](const Redex& r) { return r.label == l; });
  REQUIRE(it != rs.end());
  return *it;
}

}  // namespace

TEST_CASE("redex enumeration") {
  auto omega = enumerate_redexes(P("(\\x. x x) (\\x. x x)"), VscCalculus::Vsc);
  REQUIRE(omega.size() == 1);
  CHECK(omega[0].label == Label::M);
  CHECK(omega[0].anchor.empty());

  CHECK(enumerate_redexes(P("x"), VscCalculus::Vsc).empty());

  auto peak = enumerate_redexes(P("(x z)[x <- y][y <- \\w. w]"), VscCalculus::Vsc);
  REQUIRE(peak.size() == 2);
  const Redex& ev = only(peak, Label::EVar);
  const Redex& ea = only(peak, Label::EAbs);
  CHECK(path_to_string(ev.anchor) == "es-body");
  CHECK(path_to_string(*ev.occurrence) == "es-body.app-fun");
  CHECK(ea.anchor.empty());
  CHECK(path_to_string(*ea.occurrence) == "es-body.es-content");
}

TEST_CASE("m at a distance and under open contexts only") {
  auto rs = enumerate_redexes(P("(\\x. x)[y <- z] w"), VscCalculus::Vsc);
  CHECK(labels(rs) == std::vector<Label>{Label::M, Label::GcVar});
  CHECK(alpha_eq(apply_redex(P("(\\x. x)[y <- z] w"), rs[0]), P("x[x <- w][y <- z]")));
  CHECK(enumerate_redexes(P("\\y. (\\x. x) y"), VscCalculus::Vsc).empty());
}

TEST_CASE("contraction") {
  Term omega = P("(\\x. x x) (\\x. x x)");
  Term u = apply_redex(omega, enumerate_redexes(omega, VscCalculus::Vsc)[0]);
  CHECK(print_term(u) == "(x1 x1)[x1 <- \\x. x x]");
  Redex left{Label::EAbs, {}, at("es-body.app-fun")};
  CHECK(print_term(apply_redex(u, left)) == "((\\x. x x) x1)[x1 <- \\x. x x]");

  Term g = P("z[x <- (\\y. y)[w <- \\q. q]]");
  auto rs = enumerate_redexes(g, VscCalculus::Vsc);
  CHECK(alpha_eq(apply_redex(g, only(rs, Label::GcAbs)), P("z[w <- \\q. q]")));

  Term gv = P("z[x <- y]");
  CHECK(alpha_eq(apply_redex(gv, only(enumerate_redexes(gv, VscCalculus::Vsc), Label::GcVar)),
                 P("z")));
}

TEST_CASE("stale redexes are rejected") {
  Term t = P("(x z)[x <- y]");
  CHECK_THROWS_AS(apply_redex(t, Redex{Label::M, {}, {}}), StaleRedexError);
  CHECK_THROWS_AS(apply_redex(t, Redex{Label::EAbs, {}, at("es-body.app-fun")}),
                  StaleRedexError);
  CHECK_THROWS_AS(apply_redex(t, Redex{Label::EVar, {}, at("es-body.app-fun")}, {false}),
                  StaleRedexError);
}

TEST_CASE("gc needs the binder to be absent everywhere in the body") {
  Term t = P("(\\w. x)[x <- \\y. y]");
  auto rs = enumerate_redexes(t, VscCalculus::Vsc);
  CHECK(rs.empty());
  Term u = P("(\\w. w)[x <- \\y. y]");
  CHECK(labels(enumerate_redexes(u, VscCalculus::Vsc)) == std::vector<Label>{Label::GcAbs});
}

TEST_CASE("exponential steps do not capture the substituted binder") {
  Term t = P("(x y)[x <- \\w. x]");
  auto rs = enumerate_redexes(t, VscCalculus::Vsc);
  Term u = apply_redex(t, only(rs, Label::EAbs));
  CHECK(alpha_eq(u, P("((\\w. x) y)[x1 <- \\w. x]")));
  CHECK(free_vars(u) == free_vars(t));
}

TEST_CASE("without variable values") {
  Term t = P("(x z)[x <- y][y <- \\w. w]");
  auto rs = enumerate_redexes(t, VscCalculus::Vsc, {false});
  CHECK(labels(rs) == std::vector<Label>{Label::EAbs});
  CHECK(enumerate_redexes(P("z[x <- y]"), VscCalculus::Vsc, {false}).empty());
}

TEST_CASE("context classes") {
  CHECK(context_class_grammar(at("app-fun")).useful);
  ContextClass es = context_class_grammar(at("es-body"));
  CHECK_FALSE(es.useful);
  CHECK(es.sub);
  CHECK_FALSE(context_class_grammar(at("app-arg")).useful);
  CHECK(context_class_grammar(at("app-fun.es-body")).useful);
  CHECK_FALSE(context_class_grammar(at("app-fun.es-content")).useful);
  CHECK(context_class_grammar(at("es-content.app-fun")).useful);
  CHECK_THROWS_AS(context_class(P("\\x. x"), at("abs-body")), PreconditionError);
  for (const char* p : {"", "app-fun", "app-arg.es-body", "es-content.app-fun.es-body.es-body",
                        "app-fun.app-arg.app-fun", "es-body.es-content"})
    CHECK(context_class_grammar(at(p)) == context_class_recursive(at(p)));
}

TEST_CASE("usefulness verdicts") {
  Term direct = P("(x t)[x <- \\y. u]");
  CHECK(classify_usefulness(direct, only(enumerate_redexes(direct, VscCalculus::Vsc),
                                          Label::EAbs)) == Verdict::Useful);
  Term arg = P("(t x)[x <- \\y. u]");
  CHECK(classify_usefulness(arg, only(enumerate_redexes(arg, VscCalculus::Vsc), Label::EAbs)) ==
        Verdict::Nonuseful);
  Term bare = P("x[x <- \\y. u]");
  CHECK(classify_usefulness(bare, only(enumerate_redexes(bare, VscCalculus::Vsc), Label::EAbs)) ==
        Verdict::Nonuseful);
  Term chain = P("(x t)[x <- z][z <- \\y. u]");
  CHECK(classify_usefulness(chain, only(enumerate_redexes(chain, VscCalculus::Vsc),
                                         Label::EAbs)) == Verdict::Nonuseful);
  Term ctx = P("x[x <- \\y. u] t");
  CHECK(classify_usefulness(ctx, only(enumerate_redexes(ctx, VscCalculus::Vsc), Label::EAbs)) ==
        Verdict::Useful);
}

TEST_CASE("core enumeration keeps useful e_abs and e_var") {
  Term chain = P("(x t)[x <- z][z <- \\y. u]");
  CHECK(labels(enumerate_redexes(chain, VscCalculus::VscCore)) ==
        std::vector<Label>{Label::EVar});
  Term bare = P("x[x <- \\y. u]");
  CHECK(enumerate_redexes(bare, VscCalculus::VscCore).empty());
  Term direct = P("(x t)[x <- \\y. u]");
  CHECK(labels(enumerate_redexes(direct, VscCalculus::VscCore)) ==
        std::vector<Label>{Label::EAbs});
}

TEST_CASE("useful redexes through the root rules") {
  auto ctx = enumerate_useful_alt(P("x[x <- \\y. u] t"));
  CHECK(labels(ctx) == std::vector<Label>{Label::EU2});
  auto direct = enumerate_useful_alt(P("(x t)[x <- \\y. u]"));
  CHECK(labels(direct) == std::vector<Label>{Label::EU1});
  CHECK(enumerate_useful_alt(P("x[x <- \\y. u]")).empty());
  Term t = P("x[x <- \\y. u] t");
  CHECK(alpha_eq(apply_redex(t, ctx[0]), P("(\\y. u)[x <- \\y. u] t")));
}

TEST_CASE("core normal forms") {
  CHECK(is_core_normal(P("x[x <- \\y. y]")));
  CHECK_FALSE(is_core_normal(P("(x z)[x <- \\y. y]")));
  CHECK_FALSE(is_core_normal(P("x[x <- y]")));
  CHECK(is_core_normal(P("(x z)[x <- y w]")));
  CHECK_FALSE(is_core_normal(P("y[y <- \\z. z] w")));
}

TEST_CASE("core normal forms agree with the grammar read directly") {
  for (const Term& t : enumerate_terms(Grammar::Vsc, 7)) {
    CAPTURE(print_term(t));
    bool normal = enumerate_redexes(t, VscCalculus::VscCore).empty();
    CHECK(oracle::core_normal(t) == normal);
    CHECK(is_core_normal(t) == normal);
  }
}

TEST_CASE("reducts of the generic relation") {
  Relation vsc{Calculus::Vsc, true};
  Term t = P("(x z)[x <- y][y <- \\w. w]");
  auto rs = reducts(vsc, t);
  REQUIRE(rs.size() == 2);
  for (const auto& r : rs) CHECK(alpha_eq(r.term, apply(vsc, t, r.redex)));
  CHECK(accepts(vsc, t));
  CHECK(verdict(vsc, t, only(enumerate(vsc, t), Label::EAbs)) == Verdict::Nonuseful);
  CHECK(verdict(vsc, t, only(enumerate(vsc, t), Label::EVar)) == Verdict::Unclassified);
}
