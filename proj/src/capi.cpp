#include "poslam.h"

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <string>

#include "poslam/checks.hpp"
#include "poslam/engine.hpp"
#include "poslam/error.hpp"
#include "poslam/graph.hpp"
#include "poslam/harness.hpp"
#include "poslam/render.hpp"
#include "poslam/syntax.hpp"
#include "poslam/text.hpp"
#include "poslam/translate.hpp"
#include "poslam/types.hpp"

struct poslam_term {
  poslam::Term term;
};

namespace {

thread_local std::string last_error;

struct ArgumentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class F>
poslam_status guarded(F&& f) {
  try {
    f();
    last_error.clear();
    return POSLAM_OK;
  } catch (const poslam::ParseError& e) {
    last_error = e.what();
    return POSLAM_ERR_PARSE;
  } catch (const ArgumentError& e) {
    last_error = e.what();
    return POSLAM_ERR_ARGUMENT;
  } catch (const poslam::PreconditionError& e) {
    last_error = e.what();
    return POSLAM_ERR_PRECONDITION;
  } catch (const poslam::StaleRedexError& e) {
    last_error = e.what();
    return POSLAM_ERR_STALE;
  } catch (const poslam::HarnessError& e) {
    last_error = e.what();
    return POSLAM_ERR_HARNESS;
  } catch (const std::exception& e) {
    last_error = e.what();
    return POSLAM_ERR_INTERNAL;
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void need(const void* p, const char* what) {
  if (!p) throw ArgumentError(std::string(what) + " is null");
}

poslam::Relation relation(const char* calculus, int vars_are_values) {
  poslam::Relation rel;
  if (calculus) {
    auto c = poslam::calculus_from_name(calculus);
    if (!c) throw ArgumentError(std::string("unknown calculus '") + calculus + "'");
    rel.calculus = *c;
  }
  rel.vars_are_values = vars_are_values != 0;
  return rel;
}

std::uint64_t parse_seed(std::string_view text) {
  std::uint64_t seed = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), seed);
  if (ec != std::errc() || end != text.data() + text.size())
    throw ArgumentError("bad seed '" + std::string(text) + "'");
  return seed;
}

poslam::Strategy strategy(const char* text) {
  if (!text) return poslam::Strategy::lo();
  std::string_view s(text);
  if (s == "lo") return poslam::Strategy::lo();
  if (s.starts_with("random:")) return poslam::Strategy::random(parse_seed(s.substr(7)));
  if (s.starts_with("priority:")) {
    std::vector<poslam::Label> order;
    std::string_view rest = s.substr(9);
    while (!rest.empty()) {
      std::size_t comma = rest.find(',');
      std::string_view item = rest.substr(0, comma);
      auto label = poslam::label_from_name(item);
      if (!label) throw ArgumentError("unknown rule label '" + std::string(item) + "'");
      order.push_back(*label);
      rest = comma == std::string_view::npos ? std::string_view() : rest.substr(comma + 1);
    }
    return poslam::Strategy::by_priority(std::move(order));
  }
  throw ArgumentError("unknown strategy '" + std::string(s) + "'");
}

}  // namespace

extern "C" {

const char* poslam_last_error(void) { return last_error.c_str(); }

void poslam_string_free(char* s) { std::free(s); }

poslam_status poslam_parse(const char* text, poslam_term** out) {
  return guarded([&] {
    need(text, "text");
    need(out, "out");
    *out = new poslam_term{poslam::parse_term(text)};
  });
}

void poslam_term_free(poslam_term* t) { delete t; }

poslam_status poslam_print(const poslam_term* t, char** out) {
  return guarded([&] {
    need(t, "term");
    need(out, "out");
    *out = dup(poslam::print_term(t->term));
  });
}

int poslam_alpha_eq(const poslam_term* a, const poslam_term* b) {
  if (!a || !b) return 0;
  return poslam::alpha_eq(a->term, b->term) ? 1 : 0;
}

poslam_status poslam_reduce(const poslam_term* t, const poslam_reduce_options* opts,
                            char** trace, poslam_term** end) {
  return guarded([&] {
    need(t, "term");
    need(opts, "options");
    need(trace, "trace");
    poslam::Trace d = poslam::run_strategy(t->term, relation(opts->calculus, opts->vars_are_values),
                                           strategy(opts->strategy), opts->fuel);
    std::string text = opts->json ? poslam::trace_json(d) : poslam::trace_text(d);
    if (end) *end = new poslam_term{d.end()};
    *trace = dup(text);
  });
}

poslam_status poslam_translate(const poslam_term* t, poslam_term** out) {
  return guarded([&] {
    need(t, "term");
    need(out, "out");
    *out = new poslam_term{poslam::translate(t->term)};
  });
}

poslam_status poslam_classify(const poslam_term* t, const char* calculus, int vars_are_values,
                              char** out) {
  return guarded([&] {
    need(t, "term");
    need(out, "out");
    poslam::Relation rel = relation(calculus, vars_are_values);
    if (!poslam::accepts(rel, t->term))
      throw poslam::PreconditionError("term is not in the grammar of " +
                                      std::string(poslam::calculus_name(rel.calculus)));
    *out = dup(poslam::redexes_json(rel, t->term));
  });
}

poslam_status poslam_typeof(const poslam_term* t, int* typable, char** out) {
  return guarded([&] {
    need(t, "term");
    need(typable, "typable");
    need(out, "out");
    poslam::TypeResult r = poslam::infer_type_positive(t->term);
    *typable = r.typable() ? 1 : 0;
    *out = dup(r.typable() ? poslam::canonical_typing(*r.typing) : r.error);
  });
}

poslam_status poslam_graph(const poslam_term* t, const char* calculus, int vars_are_values,
                           size_t node_cap, int dot, char** out) {
  return guarded([&] {
    need(t, "term");
    need(out, "out");
    poslam::Relation rel = relation(calculus, vars_are_values);
    if (!poslam::accepts(rel, t->term))
      throw poslam::PreconditionError("term is not in the grammar of " +
                                      std::string(poslam::calculus_name(rel.calculus)));
    poslam::ReductionGraph g = poslam::reduction_graph(t->term, rel, node_cap, node_cap);
    *out = dup(dot ? poslam::graph_dot(g) : poslam::graph_summary_json(g));
  });
}

poslam_status poslam_check(const poslam_check_options* opts, char** reports, size_t* violations) {
  return guarded([&] {
    need(opts, "options");
    need(opts->suite, "suite");
    need(reports, "reports");
    need(violations, "violations");
    poslam::CheckOptions o{opts->size, opts->seed, opts->count, opts->threads};
    std::string text;
    std::size_t total = 0;
    for (const auto& r : poslam::run_suite(opts->suite, o)) {
      text += poslam::report_json(r);
      total += r.violations;
    }
    *violations = total;
    *reports = dup(text);
  });
}

poslam_status poslam_suite_names(char** out) {
  return guarded([&] {
    need(out, "out");
    std::string text;
    for (const auto& n : poslam::suite_names()) text += n + "\n";
    *out = dup(text);
  });
}

poslam_status poslam_bench_omega(size_t m_steps, const char* variant, poslam_omega_counts* out) {
  return guarded([&] {
    need(variant, "variant");
    need(out, "out");
    auto v = poslam::omega_variant_from_name(variant);
    if (!v) throw ArgumentError(std::string("unknown variant '") + variant + "'");
    poslam::OmegaCounts c = poslam::bench_omega(m_steps, *v);
    *out = {c.m_steps, c.e_steps, c.gc_steps, c.total_steps};
  });
}

}  // extern "C"
