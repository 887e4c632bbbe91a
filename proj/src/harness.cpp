#include "poslam/harness.hpp"

#include <functional>

#include "poslam/error.hpp"
#include "poslam/generate.hpp"
#include "poslam/syntax.hpp"
#include "poslam/text.hpp"
#include "poslam/translate.hpp"
#include "poslam/vsc.hpp"

namespace poslam {

std::size_t Trace::count(Label l) const {
  auto it = counters.find(l);
  return it == counters.end() ? 0 : it->second;
}

std::size_t Trace::count_multiplicative() const {
  std::size_t n = 0;
  for (const auto& [l, c] : counters)
    if (is_multiplicative(l)) n += c;
  return n;
}

std::size_t Trace::count_exponential() const {
  std::size_t n = 0;
  for (const auto& [l, c] : counters)
    if (is_exponential(l)) n += c;
  return n;
}

std::size_t Trace::count_gc() const {
  std::size_t n = 0;
  for (const auto& [l, c] : counters)
    if (is_gc(l)) n += c;
  return n;
}

void Trace::push(Redex r, Term t) {
  ++counters[r.label];
  steps.push_back({std::move(r), std::move(t)});
}

void Trace::recount() {
  counters.clear();
  for (const auto& s : steps) ++counters[s.redex.label];
}

std::optional<std::string> validate_trace(const Trace& d) {
  Counters recount;
  for (std::size_t i = 0; i < d.steps.size(); ++i) {
    const auto& s = d.steps[i];
    try {
      Term u = apply(d.relation, d.before(i), s.redex);
      if (!alpha_eq(u, s.term))
        return "step " + std::to_string(i + 1) + " does not produce the recorded term";
    } catch (const Error& e) {
      return "step " + std::to_string(i + 1) + ": " + e.what();
    }
    ++recount[s.redex.label];
  }
  if (recount != d.counters) return "counters differ from the recounted labels";
  return std::nullopt;
}

Trace run_strategy(const Term& t, const Relation& rel, const Strategy& strategy,
                   std::size_t fuel) {
  if (!accepts(rel, t))
    throw PreconditionError("term is not in the grammar of " +
                            std::string(calculus_name(rel.calculus)));
  Trace d(rel, t);
  Rng rng(strategy.seed);
  Term cur = t;
  for (;;) {
    std::vector<Redex> rs = enumerate(rel, cur);
    if (rs.empty()) {
      d.normal = true;
      break;
    }
    if (d.steps.size() >= fuel) {
      d.fuel_exhausted = true;
      break;
    }
    std::size_t pick = 0;
    switch (strategy.kind) {
      case Strategy::Kind::Lo: break;
      case Strategy::Kind::Random: pick = rng.below(rs.size()); break;
      case Strategy::Kind::Priority: {
        std::size_t best = strategy.priority.size();
        for (std::size_t i = 0; i < rs.size(); ++i) {
          std::size_t rank = strategy.priority.size();
          for (std::size_t k = 0; k < strategy.priority.size(); ++k)
            if (strategy.priority[k] == rs[i].label) rank = k;
          if (rank < best) {
            best = rank;
            pick = i;
          }
        }
        break;
      }
    }
    cur = apply(rel, cur, rs[pick]);
    d.push(std::move(rs[pick]), cur);
  }
  return d;
}

namespace {

using StepPred = std::function<bool(const Term& source, const Redex& r)>;

// Depth-first search for steps from `from`, the k-th one satisfying
// preds[k], ending alpha-equal to `to`.
bool find_steps(const Relation& rel, const Term& from, const Term& to,
                const std::vector<StepPred>& preds, std::size_t k,
                std::vector<TraceStep>& out) {
  if (k == preds.size()) return alpha_eq(from, to);
  for (auto& r : enumerate(rel, from)) {
    if (!preds[k](from, r)) continue;
    Term next = apply(rel, from, r);
    out.push_back({r, next});
    if (find_steps(rel, next, to, preds, k + 1, out)) return true;
    out.pop_back();
  }
  return false;
}

int family(Label l) {
  if (is_gc(l)) return 2;
  return is_multiplicative(l) ? 0 : 1;
}

std::string describe(const Term& t) { return print_term(t); }

// Splices `replacement` over steps [i, i + n), keeping the original last term
// so the downstream steps stay valid.
void splice(std::vector<TraceStep>& steps, std::size_t i, std::size_t n,
            std::vector<TraceStep> replacement) {
  Term keep = steps[i + n - 1].term;
  replacement.back().term = keep;
  steps.erase(steps.begin() + i, steps.begin() + i + n);
  steps.insert(steps.begin() + i, replacement.begin(), replacement.end());
}

const Term& source_of(const Trace& d, const std::vector<TraceStep>& steps, std::size_t i) {
  return i == 0 ? d.start : steps[i - 1].term;
}

}  // namespace

std::pair<Trace, Trace> postpone_gc(const Trace& d) {
  std::vector<TraceStep> steps = d.steps;
  const Relation& rel = d.relation;
  for (;;) {
    std::size_t i = steps.size();
    for (std::size_t k = steps.size(); k-- > 1;) {
      if (is_gc(steps[k - 1].redex.label) && !is_gc(steps[k].redex.label)) {
        i = k - 1;
        break;
      }
    }
    if (i == steps.size()) break;
    const Term& src = source_of(d, steps, i);
    const Term& target = steps[i + 1].term;
    Label a = steps[i + 1].redex.label;
    auto gc = [](const Term&, const Redex& r) { return is_gc(r.label); };
    std::vector<TraceStep> found;
    bool ok = find_steps(rel, src, target,
                         {[a](const Term&, const Redex& r) { return r.label == a; }, gc}, 0,
                         found);
    if (!ok)
      ok = find_steps(rel, src, target,
                      {[a](const Term&, const Redex& r) {
                         return !is_gc(r.label) && family(r.label) == family(a);
                       },
                       gc},
                      0, found);
    if (!ok)
      throw HarnessError("postpone_gc: cannot swap " +
                         std::string(label_name(steps[i].redex.label)) + ";" +
                         std::string(label_name(a)) + " from " + describe(src));
    splice(steps, i, 2, std::move(found));
  }
  Trace e(rel, d.start), f(rel, d.start);
  std::size_t k = 0;
  for (; k < steps.size() && !is_gc(steps[k].redex.label); ++k) e.push(steps[k].redex, steps[k].term);
  f.start = e.end();
  for (; k < steps.size(); ++k) f.push(steps[k].redex, steps[k].term);
  e.normal = f.steps.empty() && d.normal;
  f.normal = d.normal;
  return {std::move(e), std::move(f)};
}

CoreKind core_kind(const Term& source, const Redex& r) {
  switch (r.label) {
    case Label::M: return CoreKind::M;
    case Label::EVar: return CoreKind::EVar;
    case Label::EU1:
    case Label::EU2: return CoreKind::Useful;
    case Label::EAbs:
      return classify_usefulness(source, r) == Verdict::Useful ? CoreKind::Useful
                                                               : CoreKind::Nonuseful;
    default: return CoreKind::Other;
  }
}

namespace {

bool is_core(CoreKind k) { return k == CoreKind::M || k == CoreKind::Useful || k == CoreKind::EVar; }

StepPred kind_is(CoreKind k) {
  return [k](const Term& src, const Redex& r) { return core_kind(src, r) == k; };
}

}  // namespace

Trace factorize_core(const Trace& d) {
  if (d.relation.calculus != Calculus::Vsc && d.relation.calculus != Calculus::VscCore)
    throw PreconditionError("factorize_core: not a VSC trace");
  Relation rel{Calculus::Vsc, d.relation.vars_are_values};
  std::vector<TraceStep> steps = d.steps;
  std::vector<CoreKind> kinds;
  auto reclassify = [&] {
    kinds.clear();
    for (std::size_t i = 0; i < steps.size(); ++i)
      kinds.push_back(core_kind(source_of(d, steps, i), steps[i].redex));
  };
  reclassify();
  for (CoreKind k : kinds)
    if (k == CoreKind::Other) throw PreconditionError("factorize_core: trace contains gc steps");
  for (;;) {
    std::size_t i = steps.size();
    for (std::size_t k = steps.size(); k-- > 1;) {
      if (kinds[k - 1] == CoreKind::Nonuseful && is_core(kinds[k])) {
        i = k - 1;
        break;
      }
    }
    if (i == steps.size()) break;
    const Term& src = source_of(d, steps, i);
    const Term& target = steps[i + 1].term;
    CoreKind c = kinds[i + 1];
    StepPred nu = kind_is(CoreKind::Nonuseful);
    std::vector<TraceStep> found;
    bool ok = find_steps(rel, src, target, {kind_is(c), nu}, 0, found);
    if (!ok && c == CoreKind::Useful)
      ok = find_steps(rel, src, target,
                      {kind_is(CoreKind::EVar), kind_is(CoreKind::Useful), nu}, 0, found);
    if (!ok)
      throw HarnessError("factorize_core: no local postponement diagram for a non-useful step "
                         "followed by " +
                         std::string(label_name(steps[i + 1].redex.label)) + " from " +
                         describe(src));
    splice(steps, i, 2, std::move(found));
    reclassify();
  }
  Trace out(rel, d.start);
  for (auto& s : steps) out.push(s.redex, s.term);
  out.normal = d.normal;
  return out;
}

Trace simulate_core(const Trace& d) {
  if (d.relation.calculus != Calculus::Vsc && d.relation.calculus != Calculus::VscCore)
    throw PreconditionError("simulate_core: not a VSC trace");
  const Relation target_rel{Calculus::Oxpos, true};
  Trace out(target_rel, translate(d.start));
  auto label_is = [](Label l) {
    return [l](const Term&, const Redex& r) { return r.label == l; };
  };
  Term cur = out.start;
  for (std::size_t i = 0; i < d.steps.size(); ++i) {
    const Term& src = d.before(i);
    const auto& step = d.steps[i];
    Term goal = translate(step.term);
    std::vector<StepPred> shape;
    switch (core_kind(src, step.redex)) {
      case CoreKind::EVar: break;
      case CoreKind::Useful: shape = {label_is(Label::EPlus)}; break;
      case CoreKind::M: {
        bool answer = is_answer(subterm_at(step.term, step.redex.anchor));
        bool useful = context_class(src, step.redex.anchor).useful;
        if (answer && useful)
          shape = {label_is(Label::MPlus), label_is(Label::EPlus), label_is(Label::GcPlus)};
        else
          shape = {label_is(Label::MPlus)};
        break;
      }
      default:
        throw PreconditionError("simulate_core: step " + std::to_string(i + 1) +
                                " is not a core step");
    }
    std::vector<TraceStep> found;
    if (!find_steps(target_rel, cur, goal, shape, 0, found))
      throw HarnessError("simulate_core: step " + std::to_string(i + 1) + " (" +
                         std::string(label_name(step.redex.label)) + " on " + describe(src) +
                         ") is not simulated from " + describe(cur));
    for (auto& s : found) out.push(s.redex, s.term);
    cur = out.end();
  }
  return out;
}

std::optional<OmegaVariant> omega_variant_from_name(std::string_view name) {
  for (OmegaVariant v : {OmegaVariant::VarsAsValues, OmegaVariant::NoVarValues, OmegaVariant::Oxpos})
    if (omega_variant_name(v) == name) return v;
  return std::nullopt;
}

std::string_view omega_variant_name(OmegaVariant v) {
  switch (v) {
    case OmegaVariant::VarsAsValues: return "vars-as-values";
    case OmegaVariant::NoVarValues: return "no-var-values";
    case OmegaVariant::Oxpos: return "oxpos";
  }
  return "?";
}

Term omega() {
  Term delta = Term::abs("x", Term::app(Term::var("x"), Term::var("x")));
  return Term::app(delta, delta);
}

OmegaCounts bench_omega(std::size_t n_m_steps, OmegaVariant variant) {
  if (n_m_steps == 0) throw PreconditionError("bench_omega: need at least one m step");
  Relation rel{Calculus::Vsc, variant != OmegaVariant::NoVarValues};
  Term cur = omega();
  if (variant == OmegaVariant::Oxpos) {
    rel.calculus = Calculus::Oxpos;
    cur = translate(cur);
  }
  OmegaCounts counts;
  while (counts.m_steps < n_m_steps) {
    std::vector<Redex> rs = enumerate(rel, cur);
    if (rs.empty()) throw HarnessError("bench_omega: reached a normal form");
    const Redex& r = rs.front();
    cur = apply(rel, cur, r);
    ++counts.total_steps;
    if (is_multiplicative(r.label)) ++counts.m_steps;
    else if (is_gc(r.label)) ++counts.gc_steps;
    else ++counts.e_steps;
  }
  return counts;
}

}  // namespace poslam
