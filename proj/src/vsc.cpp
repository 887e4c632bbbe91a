#include "poslam/vsc.hpp"

#include <algorithm>

#include "poslam/error.hpp"
#include "poslam/syntax.hpp"
#include "rewrite.hpp"

namespace poslam {

namespace {

Path tail(PathView p) { return Path(p.begin() + 1, p.end()); }

void collect(const Term& t, Path& p, VscOptions opts, std::vector<Redex>& out) {
  switch (t.kind()) {
    case Kind::Var:
    case Kind::Abs: return;
    case Kind::App:
      if (is_answer(t.fun())) out.push_back({Label::M, p, std::nullopt});
      p.push_back(Step::AppFun);
      collect(t.fun(), p, opts, out);
      p.back() = Step::AppArg;
      collect(t.arg(), p, opts, out);
      p.pop_back();
      return;
    case Kind::Es: {
      const Term* head = &t.content();
      while (head->is_es()) head = &head->body();
      bool abs = head->is_abs();
      if (abs || (head->is_var() && opts.vars_are_values)) {
        std::vector<Path> occs;
        Path rel{Step::EsBody};
        detail::free_occurrences(t.body(), t.name(), rel, occs);
        for (auto& o : occs) out.push_back({abs ? Label::EAbs : Label::EVar, p, std::move(o)});
        if (!occurs_free(t.body(), t.name()))
          out.push_back({abs ? Label::GcAbs : Label::GcVar, p, std::nullopt});
      }
      p.push_back(Step::EsBody);
      collect(t.body(), p, opts, out);
      p.back() = Step::EsContent;
      collect(t.content(), p, opts, out);
      p.pop_back();
      return;
    }
  }
}

void sort_redexes(std::vector<Redex>& rs) {
  std::stable_sort(rs.begin(), rs.end(), [](const Redex& a, const Redex& b) {
    if (is_gc(a.label) != is_gc(b.label)) return !is_gc(a.label);
    return redex_before(a, b);
  });
}

[[noreturn]] void stale(const Redex& r, const std::string& why) {
  throw StaleRedexError(std::string(label_name(r.label)) + " at '" +
                        path_to_string(r.anchor) + "': " + why);
}

const Term& anchored(const Term& t, const Redex& r) {
  if (!is_open_path(r.anchor) || !is_valid_path(t, r.anchor))
    stale(r, "anchor is not an open position");
  return subterm_at(t, r.anchor);
}

const Term& content_head(const Term& es) {
  const Term* h = &es.content();
  while (h->is_es()) h = &h->body();
  return *h;
}

Term contract_m(const Term& t, const Redex& r) {
  const Term& redex = anchored(t, r);
  if (!redex.is_app() || !is_answer(redex.fun())) stale(r, "not an applied answer");
  NameSupply supply(t);
  Term f = detail::freshen_spine(redex.fun(), free_vars(redex.arg()), supply);
  Spine sp = split_spine(f);
  Name x = sp.head.name();
  Term body = sp.head.body();
  // Keeps traces readable: a binder that is shared by several abstractions
  // gets a numbered name when it becomes an ES (x -> x1, x2, ...).
  if (detail::binder_count(t, x) > 1 || occurs_free(t, x)) {
    Name nx = supply.fresh(x);
    body = rename(body, x, nx, supply);
    x = nx;
  }
  return replace_at(t, r.anchor, plug(sp.ctx, Term::es(body, x, redex.arg())));
}

Term contract_e(const Term& t, PathView anchor, PathView occ) {
  const Term& redex = subterm_at(t, anchor);
  Name x = redex.name();
  NameSupply supply(t);
  NameSet avoid = free_vars(redex.body());
  avoid.insert(x);
  Spine sp = split_spine(detail::freshen_spine(redex.content(), avoid, supply));
  const Term& v = sp.head;
  const NameSet value_fv = free_vars(v);
  Path inner = tail(occ);
  Term body = redex.body();
  detail::rebind_away(body, x, value_fv, supply);
  body = detail::freshen_along(body, inner, value_fv, supply);
  body = replace_at(body, inner, v);
  return replace_at(t, anchor, plug(sp.ctx, Term::es(body, x, v)));
}

Term contract_gc(const Term& t, const Redex& r, bool want_abs) {
  const Term& redex = anchored(t, r);
  if (!redex.is_es()) stale(r, "not an ES");
  const Term& h = content_head(redex);
  if (want_abs ? !h.is_abs() : !h.is_var()) stale(r, "content is not the right kind of answer");
  if (occurs_free(redex.body(), redex.name())) stale(r, "binder occurs in the body");
  NameSupply supply(t);
  Spine sp = split_spine(detail::freshen_spine(redex.content(), free_vars(redex.body()), supply));
  return replace_at(t, r.anchor, plug(sp.ctx, redex.body()));
}

// e_u2 seen as the e_abs step it denotes: anchor of the acting ES and the
// occurrence relative to it.
std::pair<Path, Path> eu2_as_eabs(const Term& t, const Redex& r) {
  const Term& app = anchored(t, r);
  if (!app.is_app() || !r.occurrence || r.occurrence->empty() ||
      r.occurrence->front() != Step::AppFun)
    stale(r, "not an application");
  const Path& occ = *r.occurrence;
  for (std::size_t i = 1; i < occ.size(); ++i)
    if (occ[i] != Step::EsBody) stale(r, "occurrence is not the spine head");
  Spine sp = split_spine(app.fun());
  if (occ.size() - 1 != sp.ctx.frames.size() || !sp.head.is_var())
    stale(r, "occurrence is not the spine head");
  const Name& x = sp.head.name();
  // frames are innermost first; k = number of frames outside the acting one
  std::size_t n = sp.ctx.frames.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (sp.ctx.frames[i].binder != x) continue;
    if (!is_answer(sp.ctx.frames[i].content)) stale(r, "content is not an answer");
    std::size_t k = n - 1 - i;
    Path anchor = r.anchor;
    anchor.push_back(Step::AppFun);
    anchor.insert(anchor.end(), k, Step::EsBody);
    return {anchor, Path(n - k, Step::EsBody)};
  }
  stale(r, "head variable is not bound by the spine");
}

}  // namespace

std::vector<Redex> enumerate_redexes(const Term& t, VscCalculus calculus, VscOptions opts) {
  std::vector<Redex> out;
  Path p;
  collect(t, p, opts, out);
  if (calculus == VscCalculus::VscCore) {
    std::erase_if(out, [&](const Redex& r) {
      if (r.label == Label::M || r.label == Label::EVar) return false;
      if (r.label == Label::EAbs) return classify_usefulness(t, r) != Verdict::Useful;
      return true;
    });
  }
  sort_redexes(out);
  return out;
}

Term apply_redex(const Term& t, const Redex& r, VscOptions opts) {
  switch (r.label) {
    case Label::M: return contract_m(t, r);
    case Label::EAbs:
    case Label::EVar:
    case Label::EU1: {
      const Term& redex = anchored(t, r);
      if (!r.occurrence || !detail::occurrence_bound_by_root(redex, *r.occurrence))
        stale(r, "occurrence is not bound by the acting ES");
      const Term& h = content_head(redex);
      if (r.label == Label::EVar) {
        if (!opts.vars_are_values) stale(r, "variables are not values");
        if (!h.is_var()) stale(r, "content is not a variable answer");
      } else if (!h.is_abs()) {
        stale(r, "content is not an answer");
      }
      if (r.label == Label::EU1 && !context_class_grammar(tail(*r.occurrence)).useful)
        stale(r, "occurrence is not in a useful position");
      return contract_e(t, r.anchor, *r.occurrence);
    }
    case Label::EU2: {
      auto [anchor, occ] = eu2_as_eabs(t, r);
      return contract_e(t, anchor, occ);
    }
    case Label::GcAbs: return contract_gc(t, r, true);
    case Label::GcVar:
      if (!opts.vars_are_values) stale(r, "variables are not values");
      return contract_gc(t, r, false);
    default:
      throw StaleRedexError(std::string(label_name(r.label)) + " is not a VSC rule");
  }
}

ContextClass context_class_grammar(PathView hole) {
  for (std::size_t i = hole.size(); i-- > 0;) {
    if (hole[i] == Step::EsBody) continue;
    return {hole[i] == Step::AppFun, false};
  }
  return {false, true};
}

ContextClass context_class_recursive(PathView hole) {
  if (hole.empty()) return {false, true};
  ContextClass rest = context_class_recursive(hole.subspan(1));
  switch (hole.front()) {
    case Step::AppFun: return {rest.useful || rest.sub, false};
    case Step::EsBody: return {rest.useful, rest.sub};
    case Step::AppArg:
    case Step::EsContent: return {rest.useful, false};
    case Step::AbsBody: break;
  }
  throw PreconditionError("context_class: position under an abstraction");
}

ContextClass context_class(const Term& t, PathView hole) {
  if (!is_open_path(hole)) throw PreconditionError("context_class: position under an abstraction");
  if (!is_valid_path(t, hole)) throw PreconditionError("context_class: invalid position");
  return context_class_grammar(hole);
}

Verdict classify_usefulness(const Term& t, const Redex& r) {
  (void)t;
  if (r.label != Label::EAbs) return Verdict::Unclassified;
  // The acting ES is transparent: classify O1<O2>.
  Path composite = concat(r.anchor, tail(*r.occurrence));
  return context_class_grammar(composite).useful ? Verdict::Useful : Verdict::Nonuseful;
}

namespace {

void collect_alt(const Term& t, Path& p, std::vector<Redex>& out) {
  switch (t.kind()) {
    case Kind::Var:
    case Kind::Abs: return;
    case Kind::App: {
      Spine sp = split_spine(t.fun());
      if (sp.head.is_var()) {
        for (const auto& f : sp.ctx.frames) {
          if (f.binder != sp.head.name()) continue;
          if (is_answer(f.content)) {
            Path occ{Step::AppFun};
            occ.insert(occ.end(), sp.ctx.frames.size(), Step::EsBody);
            out.push_back({Label::EU2, p, std::move(occ)});
          }
          break;
        }
      }
      p.push_back(Step::AppFun);
      collect_alt(t.fun(), p, out);
      p.back() = Step::AppArg;
      collect_alt(t.arg(), p, out);
      p.pop_back();
      return;
    }
    case Kind::Es: {
      if (is_answer(t.content())) {
        std::vector<Path> occs;
        Path rel{Step::EsBody};
        detail::free_occurrences(t.body(), t.name(), rel, occs);
        for (auto& o : occs)
          if (context_class_grammar(tail(o)).useful) out.push_back({Label::EU1, p, std::move(o)});
      }
      p.push_back(Step::EsBody);
      collect_alt(t.body(), p, out);
      p.back() = Step::EsContent;
      collect_alt(t.content(), p, out);
      p.pop_back();
      return;
    }
  }
}

}  // namespace

std::vector<Redex> enumerate_useful_alt(const Term& t) {
  std::vector<Redex> out;
  Path p;
  collect_alt(t, p, out);
  sort_redexes(out);
  return out;
}

bool is_core_normal(const Term& t) {
  switch (t.kind()) {
    case Kind::Var:
    case Kind::Abs: return true;
    case Kind::App:
      return is_core_normal(t.fun()) && is_core_normal(t.arg()) && !is_almost_answer(t.fun());
    case Kind::Es: {
      if (!is_core_normal(t.body()) || !is_core_normal(t.content())) return false;
      const Term& h = content_head(t);
      if (h.is_abs()) return !free_vars(t.body(), FvMode::AppliedOpen).count(t.name());
      if (h.is_var()) return !free_vars(t.body(), FvMode::Open).count(t.name());
      return true;
    }
  }
  return false;
}

}  // namespace poslam
