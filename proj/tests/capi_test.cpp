#include <cstdlib>
#include <string>

#include "doctest.h"
#include "poslam.h"

namespace {

struct Term {
  poslam_term* p = nullptr;
  explicit Term(const char* text) { REQUIRE(poslam_parse(text, &p) == POSLAM_OK); }
  Term() = default;
  ~Term() { poslam_term_free(p); }
};

struct Str {
  char* s = nullptr;
  ~Str() { poslam_string_free(s); }
  std::string str() const { return s ? s : ""; }
};

}  // namespace

TEST_CASE("parse, print and alpha equality") {
  Term a("\\x. x"), b("\\y. y");
  CHECK(poslam_alpha_eq(a.p, b.p) == 1);
  Str s;
  REQUIRE(poslam_print(a.p, &s.s) == POSLAM_OK);
  CHECK(s.str() == "\\x. x");

  poslam_term* bad = nullptr;
  CHECK(poslam_parse("(x", &bad) == POSLAM_ERR_PARSE);
  CHECK(bad == nullptr);
  CHECK(std::string(poslam_last_error()).find("1:3") != std::string::npos);
  CHECK(poslam_parse(nullptr, &bad) == POSLAM_ERR_ARGUMENT);
}

TEST_CASE("reduce returns a trace and the end term") {
  Term omega("(\\x. x x) (\\x. x x)");
  poslam_reduce_options opts{"vsc", 1, "lo", 3, 0};
  Str trace;
  Term end;
  REQUIRE(poslam_reduce(omega.p, &opts, &trace.s, &end.p) == POSLAM_OK);
  CHECK(trace.str().find("-m-> (x2 x2)[x2 <- x1][x1 <- \\x. x x]") != std::string::npos);
  Term expected("(y y)[y <- x][x <- \\z. z z]");
  CHECK(poslam_alpha_eq(end.p, expected.p) == 1);

  opts.json = 1;
  Str json;
  REQUIRE(poslam_reduce(omega.p, &opts, &json.s, nullptr) == POSLAM_OK);
  CHECK(json.str().find("\"fuel_exhausted\":true") != std::string::npos);

  opts.strategy = "random:12";
  Str r;
  CHECK(poslam_reduce(omega.p, &opts, &r.s, nullptr) == POSLAM_OK);
  opts.strategy = "priority:e_abs,m";
  Str q;
  CHECK(poslam_reduce(omega.p, &opts, &q.s, nullptr) == POSLAM_OK);
  opts.strategy = "sideways";
  Str z;
  CHECK(poslam_reduce(omega.p, &opts, &z.s, nullptr) == POSLAM_ERR_ARGUMENT);
  opts.strategy = "lo";
  opts.calculus = "nope";
  CHECK(poslam_reduce(omega.p, &opts, &z.s, nullptr) == POSLAM_ERR_ARGUMENT);
  opts.calculus = "oxpos";
  CHECK(poslam_reduce(omega.p, &opts, &z.s, nullptr) == POSLAM_ERR_PRECONDITION);
}

TEST_CASE("translate, classify and typeof") {
  Term omega("(\\x. x x) (\\x. x x)");
  Term out;
  REQUIRE(poslam_translate(omega.p, &out.p) == POSLAM_OK);
  Term expected("w[w <- (\\x. y[y <- x x]) z][z <- \\x. y[y <- x x]]");
  CHECK(poslam_alpha_eq(out.p, expected.p) == 1);

  Term useful("(x t)[x <- \\y. u]");
  Str c;
  REQUIRE(poslam_classify(useful.p, "vsc", 1, &c.s) == POSLAM_OK);
  CHECK(c.str().find("\"label\":\"e_abs\"") != std::string::npos);
  CHECK(c.str().find("\"verdict\":\"useful\"") != std::string::npos);

  int typable = -1;
  Str ty;
  REQUIRE(poslam_typeof(expected.p, &typable, &ty.s) == POSLAM_OK);
  CHECK(typable == 0);
  Term id("z[z <- \\y. y]");
  Str ty2;
  REQUIRE(poslam_typeof(id.p, &typable, &ty2.s) == POSLAM_OK);
  CHECK(typable == 1);
  CHECK(ty2.str() == "|- a -> a");
}

TEST_CASE("graph, check and bench") {
  Term loop("w[w <- (\\x. y[y <- x x]) z][z <- \\x. y[y <- x x]]");
  Str g;
  REQUIRE(poslam_graph(loop.p, "oxpos", 1, 100, 0, &g.s) == POSLAM_OK);
  CHECK(g.str().find("\"diverging\":true") != std::string::npos);
  Str dot;
  REQUIRE(poslam_graph(loop.p, "oxpos", 1, 100, 1, &dot.s) == POSLAM_OK);
  CHECK(dot.str().rfind("digraph", 0) == 0);

  poslam_check_options opts{"non-diamond", 0, 0, 0, 1};
  Str reports;
  size_t violations = 99;
  REQUIRE(poslam_check(&opts, &reports.s, &violations) == POSLAM_OK);
  CHECK(violations == 0);
  CHECK(reports.str().find("\"passed\":true") != std::string::npos);
  opts.suite = "no-such-suite";
  Str none;
  CHECK(poslam_check(&opts, &none.s, &violations) == POSLAM_ERR_PRECONDITION);

  Str names;
  REQUIRE(poslam_suite_names(&names.s) == POSLAM_OK);
  CHECK(names.str().find("diamond\n") != std::string::npos);

  poslam_omega_counts c{};
  REQUIRE(poslam_bench_omega(5, "vars-as-values", &c) == POSLAM_OK);
  CHECK(c.m_steps == 5);
  CHECK(c.e_steps == 10);
  CHECK(poslam_bench_omega(5, "sideways", &c) == POSLAM_ERR_ARGUMENT);
}
