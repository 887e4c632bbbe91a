#include "doctest.h"
#include "poslam/engine.hpp"
#include "poslam/error.hpp"
#include "poslam/generate.hpp"
#include "poslam/positive.hpp"
#include "poslam/syntax.hpp"
#include "poslam/text.hpp"

using namespace poslam;

namespace {

Term P(const char* s) { return parse_term(s); }

Term step(const Relation& rel, const Term& t, Label l) {
  for (const auto& r : enumerate(rel, t))
    if (r.label == l) return apply(rel, t, r);
  FAIL("no " << label_name(l) << " redex in " << print_term(t));
  return t;
}

const Relation kOpos{Calculus::Opos, true};
const Relation kOxpos{Calculus::Oxpos, true};

}  // namespace

TEST_CASE("positive redexes") {
  Term loop = P("x[x <- y y][y <- \\z. w[w <- z z]]");
  auto rs = enumerate_opos_redexes(loop);
  REQUIRE(rs.size() == 1);
  CHECK(rs[0].label == Label::EmePlus);
  CHECK(alpha_eq(apply_opos_redex(loop, rs[0]), loop));

  CHECK(enumerate_opos_redexes(P("x")).empty());
  CHECK(enumerate_opos_redexes(P("x[x <- \\y. y]")).empty());
  Term garbage = P("t[z <- \\y. y]");
  rs = enumerate_opos_redexes(garbage);
  REQUIRE(rs.size() == 1);
  CHECK(rs[0].label == Label::GcPlus);
  CHECK(alpha_eq(apply_opos_redex(garbage, rs[0]), P("t")));

  CHECK_THROWS_AS(enumerate_opos_redexes(P("x y")), PreconditionError);
}

TEST_CASE("explicit positive redexes") {
  Term omega = P("w[w <- (\\x. y[y <- x x]) z][z <- \\x. y[y <- x x]]");
  auto rs = enumerate_oxpos_redexes(omega);
  REQUIRE(rs.size() == 1);
  CHECK(rs[0].label == Label::MPlus);
  Term u = apply_oxpos_redex(omega, rs[0]);
  CHECK(alpha_eq(u, P("w[w <- z z][z <- \\x. y[y <- x x]]")));
  rs = enumerate_oxpos_redexes(u);
  REQUIRE(rs.size() == 1);
  CHECK(rs[0].label == Label::EPlus);
  CHECK(alpha_eq(apply_oxpos_redex(u, rs[0]), omega));
  CHECK(enumerate_oxpos_redexes(P("x")).empty());
  CHECK_THROWS_AS(enumerate_oxpos_redexes(P("\\x. x")), PreconditionError);
}

TEST_CASE("multiplicative, exponential and gc steps in sequence") {
  Term t = P("x1[x1 <- y1 w][y1 <- (\\x. z1[z1 <- \\y. y]) z]");
  Term a = step(kOxpos, t, Label::MPlus);
  CHECK(alpha_eq(a, P("x1[x1 <- z1 w][z1 <- \\y. y]")));
  Term b = step(kOxpos, a, Label::EPlus);
  CHECK(alpha_eq(b, P("x1[x1 <- (\\y. y) w][z1 <- \\y. y]")));
  Term c = step(kOxpos, b, Label::GcPlus);
  CHECK(alpha_eq(c, P("x1[x1 <- (\\y. y) w]")));
}

TEST_CASE("one eme_plus step is an e_plus step then an m_plus step") {
  for (const Term& t : random_terms(Grammar::Positive, 5, 18, 300)) {
    for (const auto& r : enumerate_opos_redexes(t)) {
      if (r.label != Label::EmePlus) continue;
      Term direct = apply_opos_redex(t, r);
      bool matched = false;
      for (const auto& e : enumerate_oxpos_redexes(t)) {
        if (e.label != Label::EPlus) continue;
        Term mid = apply_oxpos_redex(t, e);
        for (const auto& m : enumerate_oxpos_redexes(mid))
          if (m.label == Label::MPlus && alpha_eq(apply_oxpos_redex(mid, m), direct))
            matched = true;
      }
      CAPTURE(print_term(t));
      CHECK(matched);
      CHECK(is_positive(direct));
    }
  }
}

TEST_CASE("steps stay in the grammar") {
  for (const Term& t : enumerate_terms(Grammar::XPositive, 8)) {
    for (const auto& r : reducts(kOxpos, t)) CHECK(is_explicit_positive(r.term));
  }
  for (const Term& t : enumerate_terms(Grammar::Positive, 8)) {
    for (const auto& r : reducts(kOpos, t)) CHECK(is_positive(r.term));
  }
}

TEST_CASE("renaming commutes with steps") {
  for (const Term& t : random_terms(Grammar::XPositive, 11, 16, 200)) {
    NameSet fv = free_vars(t);
    if (fv.empty()) continue;
    Name x = *fv.begin();
    for (const auto& r : reducts(kOxpos, t)) {
      Term src = rename(t, x, "q"), dst = rename(r.term, x, "q");
      bool found = false;
      for (const auto& s : reducts(kOxpos, src)) found = found || alpha_eq(s.term, dst);
      CAPTURE(print_term(t));
      CHECK(found);
    }
  }
}
