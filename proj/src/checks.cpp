#include "poslam/checks.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <set>
#include <thread>

#include "poslam/engine.hpp"
#include "poslam/error.hpp"
#include "poslam/generate.hpp"
#include "poslam/graph.hpp"
#include "poslam/harness.hpp"
#include "poslam/positive.hpp"
#include "poslam/syntax.hpp"
#include "poslam/text.hpp"
#include "poslam/translate.hpp"
#include "poslam/types.hpp"
#include "poslam/vsc.hpp"

namespace poslam {

namespace {
constexpr std::size_t kMaxWitnesses = 5;
}

void CheckReport::fail(std::string witness) {
  ++violations;
  if (witnesses.size() < kMaxWitnesses) witnesses.push_back(std::move(witness));
}

void CheckReport::merge(CheckReport&& other) {
  instances += other.instances;
  violations += other.violations;
  excluded += other.excluded;
  for (auto& w : other.witnesses)
    if (witnesses.size() < kMaxWitnesses) witnesses.push_back(std::move(w));
}

namespace {

std::size_t pick(std::size_t requested, std::size_t fallback) {
  return requested ? requested : fallback;
}

std::uint64_t mix(std::uint64_t seed, std::uint64_t i) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (i + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::string show(const Term& t) { return print_term(t); }

// Runs body(i, report) for i in [0, n) over worker threads. Slices are merged
// in index order, so reports do not depend on scheduling. An exception in
// an instance counts as a violation.
CheckReport parallel_check(std::string property, std::string corpus, std::size_t n,
                           unsigned threads,
                           const std::function<void(std::size_t, CheckReport&)>& body) {
  unsigned workers = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
  const std::size_t slices = std::max<std::size_t>(1, std::min<std::size_t>(n, workers * 8));
  std::vector<CheckReport> parts(slices);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t s; (s = next++) < slices;) {
      std::size_t lo = n * s / slices, hi = n * (s + 1) / slices;
      for (std::size_t i = lo; i < hi; ++i) {
        try {
          body(i, parts[s]);
        } catch (const std::exception& e) {
          parts[s].fail(std::string("instance ") + std::to_string(i) + ": " + e.what());
        }
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers && w < slices; ++w) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  CheckReport out;
  out.property = std::move(property);
  out.corpus = std::move(corpus);
  for (auto& p : parts) out.merge(std::move(p));
  return out;
}

std::string enum_corpus(std::string_view grammar, std::size_t size) {
  return "enumerated " + std::string(grammar) + " terms up to " + std::to_string(size) + " nodes";
}

std::string random_corpus(std::string_view what, std::size_t count, std::uint64_t seed) {
  return std::to_string(count) + " random " + std::string(what) + " (seed " +
         std::to_string(seed) + ")";
}

using Keep = std::function<bool(const Term&, const Redex&)>;

// A trace of at most `len` steps choosing uniformly among the kept redexes.
Trace random_trace(const Term& t, const Relation& rel, Rng& rng, std::size_t len,
                   const Keep& keep = {}) {
  Trace d(rel, t);
  Term cur = t;
  while (d.size() < len) {
    std::vector<Redex> rs = enumerate(rel, cur);
    if (keep)
      rs.erase(std::remove_if(rs.begin(), rs.end(),
                              [&](const Redex& r) { return !keep(cur, r); }),
               rs.end());
    if (rs.empty()) {
      d.normal = true;
      break;
    }
    const Redex& r = rs[rng.below(rs.size())];
    cur = apply(rel, cur, r);
    d.push(r, cur);
  }
  return d;
}

// A random term of at least `min_size` nodes on which lo takes three steps,
// falling back to the last large enough draw.
Term busy_term(Grammar g, std::size_t min_size, std::size_t max_size, const Relation& rel,
               Rng& rng) {
  Term best = random_term(g, max_size, rng);
  for (int attempt = 0; attempt < 200; ++attempt) {
    Term t = random_term(g, max_size, rng);
    if (t.size() < min_size) continue;
    best = t;
    if (run_strategy(t, rel, Strategy::lo(), 3).size() >= 3) break;
  }
  return best;
}

std::string trace_labels(const Trace& d) {
  std::string out;
  for (const auto& s : d.steps) {
    if (!out.empty()) out += ' ';
    out += label_name(s.redex.label);
  }
  return out;
}

std::set<std::string> reduct_keys(const Relation& rel, const Term& t,
                                  const std::function<bool(Label)>& keep = {}) {
  std::set<std::string> out;
  for (const auto& r : reducts(rel, t))
    if (!keep || keep(r.redex.label)) out.insert(alpha_key(r.term));
  return out;
}

// Open positions: every path that does not enter an abstraction body.
void open_paths(const Term& t, Path& here, std::vector<Path>& out) {
  out.push_back(here);
  auto visit = [&](Step s, const Term& child) {
    here.push_back(s);
    open_paths(child, here, out);
    here.pop_back();
  };
  switch (t.kind()) {
    case Kind::Var:
    case Kind::Abs: break;
    case Kind::App:
      visit(Step::AppFun, t.fun());
      visit(Step::AppArg, t.arg());
      break;
    case Kind::Es:
      visit(Step::EsBody, t.body());
      visit(Step::EsContent, t.content());
      break;
  }
}

// ---------------------------------------------------------------- syntax

std::vector<CheckReport> suite_syntax(const CheckOptions& o) {
  const std::size_t size = pick(o.size, 7);
  std::vector<Term> vsc = enumerate_terms(Grammar::Vsc, size);
  std::vector<Term> xpos = enumerate_terms(Grammar::XPositive, size + 2);
  std::vector<CheckReport> out;
  std::string corpus = enum_corpus("vsc", size);

  out.push_back(parallel_check(
      "free-variable modes are nested", corpus, vsc.size(), o.threads,
      [&](std::size_t i, CheckReport& r) {
        const Term& t = vsc[i];
        NameSet all = free_vars(t, FvMode::All), open = free_vars(t, FvMode::Open),
                applied = free_vars(t, FvMode::AppliedOpen);
        ++r.instances;
        if (!std::includes(all.begin(), all.end(), open.begin(), open.end()) ||
            !std::includes(open.begin(), open.end(), applied.begin(), applied.end()))
          r.fail(show(t));
      }));

  out.push_back(parallel_check(
      "rename is a congruence for alpha", corpus, vsc.size(), o.threads,
      [&](std::size_t i, CheckReport& r) {
        const Term& t = vsc[i];
        NameSupply supply(t, 7);
        Term variant = uniquify_binders(t, supply);
        NameSet fv = free_vars(t);
        Name x = fv.empty() ? "x" : *fv.begin();
        for (const Name& y : {Name("a"), Name("b"), Name("w")}) {
          ++r.instances;
          if (!alpha_eq(rename(t, x, y), rename(variant, x, y)))
            r.fail(show(t) + " with " + x + " -> " + y);
        }
      }));

  out.push_back(parallel_check(
      "print then parse is the identity", corpus, vsc.size(), o.threads,
      [&](std::size_t i, CheckReport& r) {
        const Term& t = vsc[i];
        std::string text = show(t);
        Term back = parse_term(text);
        ++r.instances;
        if (!alpha_eq(back, t) || show(back) != text) r.fail(text);
      }));

  out.push_back(parallel_check(
      "alpha key agrees with alpha equality", corpus, vsc.size(), o.threads,
      [&](std::size_t i, CheckReport& r) {
        const Term& t = vsc[i];
        NameSupply supply(t, 3);
        Term variant = uniquify_binders(t, supply);
        ++r.instances;
        if (!alpha_eq(t, variant) || alpha_key(t) != alpha_key(variant)) r.fail(show(t));
        if (i > 0) {
          ++r.instances;
          if (alpha_eq(t, vsc[i - 1]) != (alpha_key(t) == alpha_key(vsc[i - 1])))
            r.fail(show(t) + " vs " + show(vsc[i - 1]));
        }
      }));

  out.push_back(parallel_check(
      "redex enumeration is stable under alpha", corpus, vsc.size(), o.threads,
      [&](std::size_t i, CheckReport& r) {
        const Term& t = vsc[i];
        NameSupply supply(t, 5);
        Term variant = uniquify_binders(t, supply);
        ++r.instances;
        if (enumerate_redexes(t, VscCalculus::Vsc) != enumerate_redexes(variant, VscCalculus::Vsc))
          r.fail(show(t));
      }));

  std::string xcorpus = enum_corpus("explicit positive", size + 2);
  out.push_back(parallel_check(
      "grammar inclusions", xcorpus + " and " + corpus, xpos.size() + vsc.size(), o.threads,
      [&](std::size_t i, CheckReport& r) {
        const Term& t = i < xpos.size() ? xpos[i] : vsc[i - xpos.size()];
        TermFlags f = classify_term(t);
        ++r.instances;
        bool ok = (!f.is_positive || f.is_explicit_positive) &&
                  (!f.is_answer || f.is_almost_answer) &&
                  (i >= xpos.size() || f.is_explicit_positive);
        if (!ok) r.fail(show(t));
      }));

  out.push_back(parallel_check(
      "decomposition of explicit positive terms", xcorpus, xpos.size(), o.threads,
      [&](std::size_t i, CheckReport& r) {
        const Term& t = xpos[i];
        Decomposition d = decompose_positive(t);
        ++r.instances;
        bool spine = std::all_of(d.hole.begin(), d.hole.end(),
                                 [](Step s) { return s == Step::EsBody; });
        const Term& at = subterm_at(t, d.hole);
        if (!spine || !at.is_var() || at.name() != d.head ||
            !alpha_eq(replace_at(t, d.hole, Term::var(d.head)), t))
          r.fail(show(t));
      }));
  return out;
}

// ---------------------------------------------------------- context class

std::vector<CheckReport> suite_context_class(const CheckOptions& o) {
  const std::size_t size = pick(o.size, 7);
  std::vector<Term> vsc = enumerate_terms(Grammar::Vsc, size);
  return {parallel_check(
      "context classifiers agree (grammar and recursion)", enum_corpus("vsc", size), vsc.size(),
      o.threads, [&](std::size_t i, CheckReport& r) {
        std::vector<Path> paths;
        Path here;
        open_paths(vsc[i], here, paths);
        for (const Path& p : paths) {
          ++r.instances;
          ContextClass a = context_class_grammar(p), b = context_class_recursive(p),
                       c = context_class(vsc[i], p);
          if (!(a == b) || !(a == c))
            r.fail(show(vsc[i]) + " at '" + path_to_string(p) + "'");
        }
      })};
}

// ------------------------------------------------------------------ bench

std::vector<CheckReport> suite_bench(const CheckOptions&) {
  std::vector<CheckReport> out;
  auto run = [&](OmegaVariant v, std::string property,
                 const std::function<bool(std::size_t, std::size_t)>& expect) {
    CheckReport r;
    r.property = std::move(property);
    r.corpus = "looping combinator, m steps 2..20";
    for (std::size_t n = 2; n <= 20; ++n) {
      ++r.instances;
      OmegaCounts c = bench_omega(n, v);
      if (!expect(n, c.e_steps))
        r.fail("n=" + std::to_string(n) + " gives " + std::to_string(c.e_steps) +
               " exponential steps");
    }
    out.push_back(std::move(r));
  };
  run(OmegaVariant::VarsAsValues, "quadratic chain overhead: e = n(n-1)/2",
      [](std::size_t n, std::size_t e) { return e == n * (n - 1) / 2; });
  run(OmegaVariant::NoVarValues, "linear overhead without variable values: e <= 2n",
      [](std::size_t n, std::size_t e) { return e <= 2 * n; });
  run(OmegaVariant::Oxpos, "linear overhead in the explicit positive calculus: e+ = n-1",
      [](std::size_t n, std::size_t e) { return e == n - 1; });
  return out;
}

// ---------------------------------------------------------------- diamond

std::vector<CheckReport> suite_diamond(const CheckOptions& o) {
  const std::size_t size = pick(o.size, 9);
  const std::size_t count = pick(o.count, 10000);
  const Relation ox{Calculus::Oxpos, true};
  std::vector<Term> corpus = enumerate_terms(Grammar::XPositive, size);
  const std::size_t enumerated = corpus.size();
  for (Term& t : random_terms(Grammar::XPositive, o.seed, 20, count)) corpus.push_back(t);
  std::string desc = enum_corpus("explicit positive", size) + " plus " +
                     random_corpus("explicit positive terms of size <= 20", count, o.seed);
  std::vector<CheckReport> out;
  out.push_back(parallel_check(
      "explicit positive peaks join in one step", desc, corpus.size(), o.threads,
      [&](std::size_t i, CheckReport& r) {
        DiamondReport d = check_local_diamond(ox, corpus[i]);
        ++r.instances;
        if (!d.diamond()) r.fail(d.witnesses.front());
      }));
  out.push_back(parallel_check(
      "explicit positive peaks join in one step on reachable terms",
      enum_corpus("explicit positive", size) + ", graphs capped at 200 nodes", enumerated,
      o.threads, [&](std::size_t i, CheckReport& r) {
        ReductionGraph g = reduction_graph(corpus[i], ox, 200, 1000);
        DiamondReport d = check_diamond(g);
        r.instances += d.peaks;
        if (!d.diamond()) r.fail(d.witnesses.front());
      }));
  return out;
}

// ------------------------------------------------------------ non-diamond

std::vector<CheckReport> suite_non_diamond(const CheckOptions&) {
  CheckReport r;
  r.property = "value substitution is not diamond";
  r.corpus = "(x z)[x <- y][y <- \\w. w]";
  r.instances = 1;
  const Relation vsc{Calculus::Vsc, true};
  Term t = parse_term(r.corpus);
  std::vector<Redex> rs = enumerate(vsc, t);
  const Redex* on_y = nullptr;
  const Redex* on_x = nullptr;
  for (const auto& x : rs) {
    if (x.label == Label::EAbs) on_y = &x;
    if (x.label == Label::EVar) on_x = &x;
  }
  if (rs.size() != 2 || !on_y || !on_x) {
    r.fail("expected one e_abs and one e_var redex, got " + std::to_string(rs.size()));
    return {r};
  }
  Term u1 = apply(vsc, t, *on_y), u2 = apply(vsc, t, *on_x);
  auto exp = [](Label l) { return is_exponential(l); };
  std::set<std::string> one1 = reduct_keys(vsc, u1, exp), one2 = reduct_keys(vsc, u2, exp);
  std::set<std::string> two2;
  for (const auto& x : reducts(vsc, u2))
    if (exp(x.redex.label))
      for (const auto& k : reduct_keys(vsc, x.term, exp)) two2.insert(k);
  bool one_step_join = std::any_of(one1.begin(), one1.end(),
                                   [&](const std::string& k) { return one2.count(k) > 0; });
  bool two_step_join = std::any_of(one1.begin(), one1.end(),
                                   [&](const std::string& k) { return two2.count(k) > 0; });
  if (alpha_eq(u1, u2)) r.fail("the two reducts coincide");
  if (one_step_join) r.fail("the peak joins in one step");
  if (!two_step_join) r.fail("no join with one step against two");
  if (r.passed())
    r.witnesses.push_back("peak " + show(u1) + " <- " + show(t) + " -> " + show(u2) +
                          " joins only one step against two");
  return {r};
}

// ------------------------------------------------------------ postpone gc

void verify_postponement(const Trace& d, CheckReport& r) {
  ++r.instances;
  auto [e, f] = postpone_gc(d);
  std::string where = show(d.start) + " via " + trace_labels(d);
  if (e.count_gc() != 0) return r.fail("gc left in prefix: " + where);
  if (f.count_gc() != f.size()) return r.fail("non-gc step in suffix: " + where);
  if (!alpha_eq(e.end(), f.start) || !alpha_eq(f.end(), d.end()))
    return r.fail("endpoint mismatch: " + where);
  if (e.count_multiplicative() != d.count_multiplicative() ||
      e.count_exponential() != d.count_exponential() || f.size() != d.count_gc())
    return r.fail("counters differ: " + where);
  if (auto bad = validate_trace(e)) return r.fail(*bad + ": " + where);
  if (auto bad = validate_trace(f)) return r.fail(*bad + ": " + where);
}

std::vector<CheckReport> suite_postpone_gc(const CheckOptions& o) {
  const std::size_t count = pick(o.count, 1000);
  std::vector<CheckReport> out;
  struct Lane {
    const char* name;
    Relation rel;
    Grammar grammar;
    std::size_t term_size;
  };
  for (const Lane& lane : {Lane{"vsc", {Calculus::Vsc, true}, Grammar::Vsc, 26},
                           Lane{"oxpos", {Calculus::Oxpos, true}, Grammar::XPositive, 26}}) {
    out.push_back(parallel_check(
        std::string("gc postponement in ") + lane.name,
        random_corpus(std::string(lane.name) + " traces of length <= 30", count, o.seed),
        count, o.threads, [&](std::size_t i, CheckReport& r) {
          Rng rng(mix(o.seed, i));
          Term t = i % 2 == 0 || lane.rel.calculus == Calculus::Vsc
                       ? busy_term(lane.grammar, 12, lane.term_size, lane.rel, rng)
                       : translate(busy_term(Grammar::ClosedVsc, 12, 26, {Calculus::Vsc, true}, rng));
          Trace d = random_trace(t, lane.rel, rng, 1 + rng.below(30));
          verify_postponement(d, r);
        }));
  }
  return out;
}

// -------------------------------------------------------------- factorize

void verify_factorization(const Trace& d, CheckReport& r) {
  ++r.instances;
  Trace e = factorize_core(d);
  std::string where = show(d.start) + " via " + trace_labels(d);
  if (!alpha_eq(e.end(), d.end())) return r.fail("endpoint mismatch: " + where);
  if (e.count(Label::M) != d.count(Label::M)) return r.fail("m counter differs: " + where);
  if (auto bad = validate_trace(e)) return r.fail(*bad + ": " + where);
  bool suffix = false;
  for (std::size_t i = 0; i < e.size(); ++i) {
    CoreKind k = core_kind(e.before(i), e.steps[i].redex);
    if (k == CoreKind::Nonuseful) suffix = true;
    else if (suffix) return r.fail("core step after a non-useful one: " + where);
  }
}

std::vector<CheckReport> suite_factorize(const CheckOptions& o) {
  const std::size_t count = pick(o.count, 1000);
  const Relation vsc{Calculus::Vsc, true};
  std::vector<CheckReport> out;

  CheckReport fixed;
  fixed.property = "factorization of a non-useful step before a useful one";
  fixed.corpus = "(x t)[x <- y][y <- \\z. u]";
  try {
    Term t = parse_term(fixed.corpus);
    Trace d(vsc, t);
    auto step = [&](CoreKind want) {
      for (const auto& r : enumerate(vsc, d.end()))
        if (core_kind(d.end(), r) == want) {
          Term next = apply(vsc, d.end(), r);
          d.push(r, next);
          return true;
        }
      return false;
    };
    if (!step(CoreKind::Nonuseful) || !step(CoreKind::Useful)) {
      fixed.fail("the non-useful then useful sequence does not exist");
    } else {
      verify_factorization(d, fixed);
      Trace e = factorize_core(d);
      std::vector<CoreKind> kinds;
      for (std::size_t i = 0; i < e.size(); ++i) kinds.push_back(core_kind(e.before(i), e.steps[i].redex));
      if (kinds != std::vector<CoreKind>{CoreKind::EVar, CoreKind::Useful, CoreKind::Nonuseful})
        fixed.fail("expected e_var, useful, non-useful; got " + trace_labels(e));
      else
        fixed.witnesses.push_back(trace_labels(d) + " becomes " + trace_labels(e));
    }
  } catch (const std::exception& e) {
    fixed.fail(e.what());
  }
  out.push_back(std::move(fixed));

  out.push_back(parallel_check(
      "core factorization", random_corpus("gc-free vsc traces of length <= 30", count, o.seed),
      count, o.threads, [&](std::size_t i, CheckReport& r) {
        Rng rng(mix(o.seed, i));
        Term t = busy_term(i % 2 ? Grammar::ClosedVsc : Grammar::Vsc, 12, 26, vsc, rng);
        Trace d = random_trace(t, vsc, rng, 1 + rng.below(30),
                               [](const Term&, const Redex& x) { return !is_gc(x.label); });
        verify_factorization(d, r);
      }));
  return out;
}

// --------------------------------------------------------------- simulate

void verify_simulation(const Trace& d, CheckReport& r) {
  ++r.instances;
  Trace e = simulate_core(d);
  std::string where = show(d.start) + " via " + trace_labels(d);
  if (!alpha_eq(e.start, translate(d.start)) || !alpha_eq(e.end(), translate(d.end())))
    return r.fail("endpoints are not translations: " + where);
  if (e.count(Label::MPlus) != d.count(Label::M)) return r.fail("m counters differ: " + where);
  std::size_t m_or_useful = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    CoreKind k = core_kind(d.before(i), d.steps[i].redex);
    if (k == CoreKind::M || k == CoreKind::Useful) ++m_or_useful;
  }
  if (e.size() < m_or_useful || e.size() > 3 * d.size())
    return r.fail("length " + std::to_string(e.size()) + " out of bounds: " + where);
  if (auto bad = validate_trace(e)) return r.fail(*bad + ": " + where);
}

std::vector<CheckReport> suite_simulate(const CheckOptions& o) {
  const std::size_t count = pick(o.count, 1000);
  const Relation core{Calculus::VscCore, true};
  std::vector<CheckReport> out;

  CheckReport fixed;
  fixed.property = "simulation of fixed core steps";
  fixed.corpus = "x[x <- y]; (\\x. \\y. y) z w";
  try {
    Trace var(core, parse_term("x[x <- y]"));
    Trace beta(core, parse_term("(\\x. \\y. y) z w"));
    for (Trace* d : {&var, &beta}) {
      auto rs = enumerate(core, d->start);
      if (rs.empty()) {
        fixed.fail("no core redex in " + show(d->start));
        continue;
      }
      d->push(rs.front(), apply(core, d->start, rs.front()));
      verify_simulation(*d, fixed);
    }
    std::size_t absorbed = simulate_core(var).size();
    Trace three = simulate_core(beta);
    if (absorbed != 0) fixed.fail("a variable step is simulated by " + std::to_string(absorbed) + " steps");
    if (trace_labels(three) != "m_plus e_plus gc_plus")
      fixed.fail("the answer-creating m step gives " + trace_labels(three));
  } catch (const std::exception& e) {
    fixed.fail(e.what());
  }
  out.push_back(std::move(fixed));

  out.push_back(parallel_check(
      "simulation of core sequences", random_corpus("core traces of length <= 50", count, o.seed),
      count, o.threads, [&](std::size_t i, CheckReport& r) {
        Rng rng(mix(o.seed, i));
        Term t = busy_term(i % 2 ? Grammar::ClosedVsc : Grammar::Vsc, 12, 30, core, rng);
        Trace d = random_trace(t, core, rng, 1 + rng.below(50));
        verify_simulation(d, r);
      }));
  return out;
}

// --------------------------------------------------- normal forms and more

std::vector<CheckReport> suite_normal_forms(const CheckOptions& o) {
  const std::size_t size = pick(o.size, 8);
  std::vector<Term> vsc = enumerate_terms(Grammar::Vsc, size);
  const Relation core{Calculus::VscCore, true};
  return {parallel_check("core normal forms match their grammar", enum_corpus("vsc", size),
                         vsc.size(), o.threads, [&](std::size_t i, CheckReport& r) {
                           ++r.instances;
                           bool grammar = is_core_normal(vsc[i]);
                           bool none = enumerate(core, vsc[i]).empty();
                           if (grammar != none)
                             r.fail(show(vsc[i]) + (grammar ? " is in the grammar but reduces"
                                                            : " is normal but not in the grammar"));
                         })};
}

std::vector<CheckReport> suite_preservation(const CheckOptions& o) {
  const std::size_t size = pick(o.size, 8);
  std::vector<Term> vsc = enumerate_terms(Grammar::Vsc, size);
  const Relation core{Calculus::VscCore, true}, ox{Calculus::Oxpos, true};
  return {parallel_check(
      "translations of core normal forms are normal up to gc", enum_corpus("vsc", size),
      vsc.size(), o.threads, [&](std::size_t i, CheckReport& r) {
        if (!enumerate(core, vsc[i]).empty()) return;
        ++r.instances;
        Term u = translate(vsc[i]);
        for (const auto& x : enumerate(ox, u))
          if (!is_gc(x.label)) return r.fail(show(vsc[i]) + " translates to " + show(u));
      })};
}

std::vector<CheckReport> suite_useful_alt(const CheckOptions& o) {
  const std::size_t size = pick(o.size, 8);
  std::vector<Term> vsc = enumerate_terms(Grammar::Vsc, size);
  return {parallel_check(
      "useful steps by classification and by root rules agree", enum_corpus("vsc", size),
      vsc.size(), o.threads, [&](std::size_t i, CheckReport& r) {
        const Term& t = vsc[i];
        std::set<std::string> classified, rooted;
        for (const auto& x : enumerate_redexes(t, VscCalculus::Vsc))
          if (x.label == Label::EAbs && classify_usefulness(t, x) == Verdict::Useful)
            classified.insert(alpha_key(apply_redex(t, x)));
        for (const auto& x : enumerate_useful_alt(t)) rooted.insert(alpha_key(apply_redex(t, x)));
        ++r.instances;
        if (classified != rooted)
          r.fail(show(t) + ": " + std::to_string(classified.size()) + " vs " +
                 std::to_string(rooted.size()) + " reducts");
      })};
}

// ------------------------------------------------------------ termination

struct Outcome {
  Termination full, core, ox;
};

// Termination of each corpus term in vsc, in its core and, after translation,
// in the explicit positive calculus; then the two pairwise equivalences.
std::vector<CheckReport> termination_on(const std::vector<Term>& corpus, std::string desc,
                                        unsigned threads) {
  const std::size_t cap = 10000;
  const Relation full{Calculus::Vsc, true}, core{Calculus::VscCore, true},
      ox{Calculus::Oxpos, true};
  std::vector<Outcome> outcomes(corpus.size());
  CheckReport explore = parallel_check(
      "reduction graphs explored", desc, corpus.size(), threads,
      [&](std::size_t i, CheckReport& r) {
        ++r.instances;
        Outcome& o = outcomes[i];
        o.full = analyze_termination(reduction_graph(corpus[i], full, cap, cap));
        o.core = analyze_termination(reduction_graph(corpus[i], core, cap, cap));
        o.ox = analyze_termination(reduction_graph(translate(corpus[i]), ox, cap, cap));
        if (!o.full.decided || !o.core.decided || !o.ox.decided) ++r.excluded;
      });
  // Undecided terms must stay under one percent of the corpus.
  if (explore.excluded * 100 >= corpus.size())
    explore.fail(std::to_string(explore.excluded) + " undecided terms");
  std::size_t normalizing = 0, diverging = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const Outcome& o = outcomes[i];
    normalizing += o.full.decided && o.full.normalizing;
    diverging += o.full.decided && o.full.diverging;
    if ((!o.full.decided || !o.core.decided || !o.ox.decided) && explore.notes.size() < 5)
      explore.notes.push_back("undecided: " + show(corpus[i]));
  }
  explore.notes.push_back(std::to_string(normalizing) + " weakly normalizing, " +
                          std::to_string(diverging) + " with a diverging sequence");

  auto compare = [&](std::string property, Termination Outcome::*left,
                     Termination Outcome::*right) {
    CheckReport r;
    r.property = std::move(property);
    r.corpus = desc;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      const Termination& a = outcomes[i].*left;
      const Termination& b = outcomes[i].*right;
      if (!a.decided || !b.decided) {
        ++r.excluded;
        continue;
      }
      ++r.instances;
      if (a.normalizing != b.normalizing || a.diverging != b.diverging)
        r.fail(show(corpus[i]));
    }
    return r;
  };
  std::vector<CheckReport> out;
  out.push_back(std::move(explore));
  out.push_back(compare("termination equivalence of vsc and its core", &Outcome::full,
                        &Outcome::core));
  out.push_back(compare("termination equivalence of the core and the explicit positive calculus",
                        &Outcome::core, &Outcome::ox));
  return out;
}

std::vector<CheckReport> suite_termination(const CheckOptions& o) {
  const std::size_t size = pick(o.size, 7);
  std::vector<CheckReport> out =
      termination_on(enumerate_terms(Grammar::Vsc, size),
                     enum_corpus("vsc", size) + ", graphs capped at 10000 nodes", o.threads);
  for (auto& r : termination_on(enumerate_terms(Grammar::ClosedVsc, size + 2),
                                enum_corpus("closed vsc", size + 2) +
                                    ", graphs capped at 10000 nodes",
                                o.threads))
    out.push_back(std::move(r));
  return out;
}

// ------------------------------------------------------ local termination

// Reduces with only the kept labels, first by lo then by random choice.
bool restricted_terminates(const Term& t, const Relation& rel,
                           const std::function<bool(Label)>& keep, std::uint64_t seed,
                           std::size_t fuel) {
  for (int pass = 0; pass < 2; ++pass) {
    Rng rng(seed);
    Term cur = t;
    std::size_t steps = 0;
    for (;;) {
      std::vector<Redex> rs = enumerate(rel, cur);
      rs.erase(std::remove_if(rs.begin(), rs.end(), [&](const Redex& r) { return !keep(r.label); }),
               rs.end());
      if (rs.empty()) break;
      if (++steps > fuel) return false;
      cur = apply(rel, cur, pass == 0 ? rs.front() : rs[rng.below(rs.size())]);
    }
  }
  return true;
}

std::vector<CheckReport> suite_local_termination(const CheckOptions& o) {
  const std::size_t size = pick(o.size, 8);
  const std::size_t fuel = 10000;
  std::vector<CheckReport> out;
  struct Family {
    const char* name;
    std::function<bool(Label)> keep;
  };
  std::vector<Term> vsc = enumerate_terms(Grammar::Vsc, size);
  std::vector<Term> xpos = enumerate_terms(Grammar::XPositive, size + 1);
  const Relation full{Calculus::Vsc, true}, ox{Calculus::Oxpos, true};
  std::vector<Family> vsc_families{
      {"m", [](Label l) { return l == Label::M; }},
      {"e", [](Label l) { return l == Label::EAbs || l == Label::EVar; }},
      {"gc", [](Label l) { return is_gc(l); }},
      {"e and gc", [](Label l) { return !is_multiplicative(l); }}};
  std::vector<Family> ox_families{
      {"m_plus", [](Label l) { return l == Label::MPlus; }},
      {"e_plus", [](Label l) { return l == Label::EPlus; }},
      {"gc_plus", [](Label l) { return l == Label::GcPlus; }},
      {"e_plus and gc_plus", [](Label l) { return l != Label::MPlus; }}};
  out.push_back(parallel_check(
      "single-rule and e+gc reduction terminate in vsc", enum_corpus("vsc", size) + ", fuel 10000",
      vsc.size(), o.threads, [&](std::size_t i, CheckReport& r) {
        for (const auto& f : vsc_families) {
          ++r.instances;
          if (!restricted_terminates(vsc[i], full, f.keep, mix(o.seed, i), fuel))
            r.fail(std::string(f.name) + " on " + show(vsc[i]));
        }
      }));
  out.push_back(parallel_check(
      "single-rule and e+gc reduction terminate in oxpos",
      enum_corpus("explicit positive", size + 1) + ", fuel 10000", xpos.size(), o.threads,
      [&](std::size_t i, CheckReport& r) {
        for (const auto& f : ox_families) {
          ++r.instances;
          if (!restricted_terminates(xpos[i], ox, f.keep, mix(o.seed, i), fuel))
            r.fail(std::string(f.name) + " on " + show(xpos[i]));
        }
      }));
  out.push_back(parallel_check(
      "paths to normal form have one length in oxpos",
      enum_corpus("explicit positive", size + 1) + ", graphs capped at 2000 nodes", xpos.size(),
      o.threads, [&](std::size_t i, CheckReport& r) {
        DiamondReport d = check_diamond(reduction_graph(xpos[i], ox, 2000, 2000));
        r.instances += d.length_checks;
        if (!d.ok()) r.fail(d.witnesses.empty() ? show(xpos[i]) : d.witnesses.front());
      }));
  const std::size_t small = std::min<std::size_t>(size, 7);
  std::vector<Term> vsc_small = enumerate_terms(Grammar::Vsc, small);
  for (Relation rel : {full, Relation{Calculus::VscCore, true}}) {
    out.push_back(parallel_check(
        std::string("uniform normalization in ") + std::string(calculus_name(rel.calculus)),
        enum_corpus("vsc", small) + ", graphs capped at 2000 nodes", vsc_small.size(),
        o.threads, [&](std::size_t i, CheckReport& r) {
          Termination term = analyze_termination(reduction_graph(vsc_small[i], rel, 2000, 2000));
          if (!term.decided) return;
          ++r.instances;
          if (term.normalizing && term.diverging) r.fail(show(vsc_small[i]));
        }));
  }
  return out;
}

// ---------------------------------------------------------- decomposition

std::vector<CheckReport> suite_decomposition(const CheckOptions& o) {
  const std::size_t count = pick(o.count, 1000);
  const Relation pos{Calculus::Opos, true}, ox{Calculus::Oxpos, true};
  return {parallel_check(
      "eme_plus factors as e_plus then m_plus",
      random_corpus("positive terms of size <= 20, each followed for 10 steps", count, o.seed),
      count, o.threads, [&](std::size_t i, CheckReport& r) {
        Rng rng(mix(o.seed, i));
        Term cur = busy_term(Grammar::Positive, 8, 20, pos, rng);
        for (int step = 0; step < 10; ++step) {
          std::vector<Redex> rs = enumerate(pos, cur);
          if (rs.empty()) break;
          for (const auto& x : rs) {
            if (x.label != Label::EmePlus) continue;
            ++r.instances;
            std::string target = alpha_key(apply(pos, cur, x));
            bool found = false;
            for (const auto& e : reducts(ox, cur)) {
              if (e.redex.label != Label::EPlus) continue;
              for (const auto& m : reducts(ox, e.term))
                found = found || (m.redex.label == Label::MPlus && alpha_key(m.term) == target);
            }
            if (!found) r.fail(show(cur));
          }
          cur = apply(pos, cur, rs[rng.below(rs.size())]);
        }
      })};
}

// ----------------------------------------------------------------- typing

// Typing restricted to the given variables, in canonical form.
std::string restricted_typing(const Typing& t, const NameSet& keep) {
  Typing out = t;
  for (auto it = out.env.begin(); it != out.env.end();)
    it = keep.count(it->first) ? std::next(it) : out.env.erase(it);
  return canonical_typing(out);
}

std::vector<CheckReport> suite_typing(const CheckOptions& o) {
  const std::size_t count = pick(o.count, 100);
  std::vector<CheckReport> out;
  CheckReport fixed;
  fixed.property = "fixed positive typings";
  fixed.corpus = "translation of \\x. x; w[w <- x x]; z[z <- \\y. y]";
  fixed.instances = 3;
  TypeResult id = infer_type_positive(translate(parse_term("\\x. x")));
  if (!id.typable() || canonical_typing(*id.typing) != "|- a -> a")
    fixed.fail("identity: " + (id.typable() ? canonical_typing(*id.typing) : id.error));
  TypeResult self = infer_type_positive(parse_term("w[w <- x x]"));
  if (self.typable()) fixed.fail("self application typed as " + canonical_typing(*self.typing));
  TypeResult z = infer_type_positive(parse_term("z[z <- \\y. y]"));
  if (!z.typable() || canonical_typing(*z.typing) != "|- a -> a") fixed.fail("z[z <- \\y. y]");
  out.push_back(std::move(fixed));

  CheckReport r;
  r.property = "translation preserves principal typings";
  r.corpus = random_corpus("typable vsc terms of size <= 14", count, o.seed);
  Rng rng(o.seed);
  for (std::size_t tries = 0; r.instances < count && tries < 1000000; ++tries) {
    Term t = random_term(Grammar::Vsc, 14, rng);
    TypeResult src = infer_type_source(t);
    if (!src.typable() || t.size() < 4) continue;
    ++r.instances;
    Term u = translate(t);
    TypeResult dst = infer_type_positive(u);
    NameSet fv = free_vars(u);
    if (!dst.typable()) {
      r.fail(show(t) + " translates to untypable " + show(u));
      continue;
    }
    std::string a = restricted_typing(*src.typing, fv), b = restricted_typing(*dst.typing, fv);
    if (a != b) r.fail(show(t) + ": " + a + " vs " + b);
  }
  if (r.instances < count) r.fail("only " + std::to_string(r.instances) + " typable terms found");
  out.push_back(std::move(r));
  return out;
}

// ------------------------------------------------------------ translation

std::vector<CheckReport> suite_translation(const CheckOptions& o) {
  const std::size_t size = pick(o.size, 7);
  const std::size_t count = pick(o.count, 1000);
  std::vector<Term> vsc = enumerate_terms(Grammar::Vsc, size);
  std::vector<Term> pos = enumerate_terms(Grammar::Positive, size + 2);
  const Relation full{Calculus::Vsc, true};
  std::string corpus = enum_corpus("vsc", size);
  std::vector<CheckReport> out;
  out.push_back(parallel_check("translations are explicit positive", corpus, vsc.size(),
                               o.threads, [&](std::size_t i, CheckReport& r) {
                                 ++r.instances;
                                 if (!is_explicit_positive(translate(vsc[i]))) r.fail(show(vsc[i]));
                               }));
  out.push_back(parallel_check(
      "variable steps are absorbed by the translation", corpus, vsc.size(), o.threads,
      [&](std::size_t i, CheckReport& r) {
        Term image = translate(vsc[i]);
        for (const auto& x : reducts(full, vsc[i])) {
          if (x.redex.label != Label::EVar && x.redex.label != Label::GcVar) continue;
          ++r.instances;
          if (!alpha_eq(image, translate(x.term)))
            r.fail(std::string(label_name(x.redex.label)) + " on " + show(vsc[i]));
        }
      }));
  out.push_back(parallel_check(
      "translation is the identity on positive terms", enum_corpus("positive", size + 2),
      pos.size(), o.threads, [&](std::size_t i, CheckReport& r) {
        ++r.instances;
        if (!alpha_eq(translate(pos[i]), pos[i])) r.fail(show(pos[i]));
      }));
  out.push_back(parallel_check(
      "translation commutes with substitution contexts",
      random_corpus("pairs of a substitution context and a term", count, o.seed), count,
      o.threads, [&](std::size_t i, CheckReport& r) {
        Rng rng(mix(o.seed, i));
        SubstCtx l;
        const std::size_t frames = 1 + rng.below(3);
        const char* binders[] = {"x", "y", "z", "w"};
        for (std::size_t k = 0; k < frames; ++k)
          l.frames.push_back({binders[rng.below(4)], random_term(Grammar::Vsc, 7, rng)});
        Term body = random_term(Grammar::Vsc, 9, rng);
        // Make every binder unique, then cut the context back off.
        NameSupply supply(plug(l, body), 1);
        Term whole = uniquify_binders(plug(l, body), supply);
        SubstCtx clean;
        Term cur = whole;
        for (std::size_t k = 0; k < frames; ++k) {
          clean.frames.insert(clean.frames.begin(), {cur.name(), cur.content()});
          cur = cur.body();
        }
        ++r.instances;
        CtxTranslation c = translate_subst_ctx(clean);
        NameSupply names(whole, 1);
        Term image = translate(cur);
        names.reserve(image);
        Term expected = plug(c.ctx, rename(image, c.renaming, names));
        if (!alpha_eq(translate(whole), expected)) r.fail(show(whole));
      }));
  return out;
}

// --------------------------------------------------------------- positive

std::vector<CheckReport> suite_positive(const CheckOptions& o) {
  const std::size_t count = pick(o.count, 1000);
  const Relation pos{Calculus::Opos, true}, ox{Calculus::Oxpos, true};
  std::vector<CheckReport> out;
  out.push_back(parallel_check(
      "positive grammars are preserved by reduction",
      random_corpus("positive and explicit positive traces of length <= 20", count, o.seed),
      count, o.threads, [&](std::size_t i, CheckReport& r) {
        Rng rng(mix(o.seed, i));
        Trace a = random_trace(busy_term(Grammar::Positive, 8, 20, pos, rng), pos, rng, 20);
        Trace b = random_trace(busy_term(Grammar::XPositive, 8, 20, ox, rng), ox, rng, 20);
        for (const auto& s : a.steps) {
          ++r.instances;
          if (!is_positive(s.term)) r.fail(show(s.term));
        }
        for (const auto& s : b.steps) {
          ++r.instances;
          if (!is_explicit_positive(s.term)) r.fail(show(s.term));
        }
      }));
  out.push_back(parallel_check(
      "explicit positive steps are stable under renaming",
      random_corpus("explicit positive steps and renamings", count, o.seed), count, o.threads,
      [&](std::size_t i, CheckReport& r) {
        Rng rng(mix(o.seed, i));
        Term t = busy_term(Grammar::XPositive, 8, 20, ox, rng);
        std::vector<Reduct> rs = reducts(ox, t);
        if (rs.empty()) return;
        const Reduct& step = rs[rng.below(rs.size())];
        NameSet present = all_names(t);
        std::vector<Name> names(present.begin(), present.end());
        names.push_back("v");
        Name x = names[rng.below(names.size())], y = names[rng.below(names.size())];
        if (x == y) return;
        ++r.instances;
        std::string target = alpha_key(rename(step.term, x, y));
        Term source = rename(t, x, y);
        bool found = false;
        for (const auto& s : reducts(ox, source)) found = found || alpha_key(s.term) == target;
        if (!found) r.fail(show(t) + " with " + x + " -> " + y);
      }));
  return out;
}

using Suite = std::function<std::vector<CheckReport>(const CheckOptions&)>;

const std::vector<std::pair<std::string, Suite>>& suites() {
  static const std::vector<std::pair<std::string, Suite>> table{
      {"syntax", suite_syntax},
      {"context-class", suite_context_class},
      {"bench", suite_bench},
      {"diamond", suite_diamond},
      {"non-diamond", suite_non_diamond},
      {"postpone-gc", suite_postpone_gc},
      {"factorize", suite_factorize},
      {"simulate", suite_simulate},
      {"normal-forms", suite_normal_forms},
      {"preservation", suite_preservation},
      {"useful-alt", suite_useful_alt},
      {"termination", suite_termination},
      {"local-termination", suite_local_termination},
      {"decomposition", suite_decomposition},
      {"typing", suite_typing},
      {"translation", suite_translation},
      {"positive", suite_positive},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, _] : suites()) out.push_back(name);
    out.push_back("all");
    return out;
  }();
  return names;
}

std::vector<CheckReport> run_suite(std::string_view name, const CheckOptions& opts) {
  std::vector<CheckReport> out;
  for (const auto& [n, suite] : suites()) {
    if (name != "all" && name != n) continue;
    for (auto& r : suite(opts)) out.push_back(std::move(r));
    if (name != "all") return out;
  }
  if (name != "all") throw PreconditionError("unknown suite '" + std::string(name) + "'");
  return out;
}

}  // namespace poslam
