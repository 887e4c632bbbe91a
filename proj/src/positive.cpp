#include "poslam/positive.hpp"

#include <algorithm>

#include "poslam/error.hpp"
#include "poslam/syntax.hpp"
#include "rewrite.hpp"

namespace poslam {

namespace {

[[noreturn]] void stale(const Redex& r, const std::string& why) {
  throw StaleRedexError(std::string(label_name(r.label)) + " at '" +
                        path_to_string(r.anchor) + "': " + why);
}

// Occurrences of y as the function of an [x <- y z] frame on the spine below
// an ES binding y. Paths are relative to that ES.
std::vector<Path> applied_spine_occurrences(const Term& es) {
  std::vector<Path> out;
  const Name& y = es.name();
  Path p{Step::EsBody};
  const Term* cur = &es.body();
  while (cur->is_es()) {
    const Term& c = cur->content();
    if (c.is_app() && c.fun().is_var() && c.fun().name() == y) {
      Path occ = p;
      occ.push_back(Step::EsContent);
      occ.push_back(Step::AppFun);
      out.push_back(std::move(occ));
    }
    if (cur->name() == y) break;
    p.push_back(Step::EsBody);
    cur = &cur->body();
  }
  return out;
}

void sort_redexes(std::vector<Redex>& rs) {
  std::stable_sort(rs.begin(), rs.end(), [](const Redex& a, const Redex& b) {
    if (is_gc(a.label) != is_gc(b.label)) return !is_gc(a.label);
    return redex_before(a, b);
  });
}

std::vector<Redex> enumerate_spine(const Term& t, bool explicit_calculus) {
  std::vector<Redex> out;
  Path p;
  const Term* cur = &t;
  while (cur->is_es()) {
    const Term& c = cur->content();
    if (c.is_abs()) {
      for (auto& occ : applied_spine_occurrences(*cur))
        out.push_back({explicit_calculus ? Label::EPlus : Label::EmePlus, p, std::move(occ)});
      if (!occurs_free(cur->body(), cur->name()))
        out.push_back({Label::GcPlus, p, std::nullopt});
    } else if (explicit_calculus && c.is_app() && c.fun().is_abs()) {
      out.push_back({Label::MPlus, p, std::nullopt});
    }
    p.push_back(Step::EsBody);
    cur = &cur->body();
  }
  sort_redexes(out);
  return out;
}

const Term& spine_es(const Term& t, const Redex& r) {
  for (Step s : r.anchor)
    if (s != Step::EsBody) stale(r, "anchor is not on the spine");
  if (!is_valid_path(t, r.anchor)) stale(r, "invalid anchor");
  const Term& es = subterm_at(t, r.anchor);
  if (!es.is_es()) stale(r, "anchor is not an ES");
  return es;
}

// Position (relative to the acting ES) of the [x <- y z] frame addressed by an
// e_plus / eme_plus occurrence, after validation.
Path app_frame(const Term& es, const Redex& r) {
  if (!es.content().is_abs()) stale(r, "content is not an abstraction");
  if (!r.occurrence) stale(r, "missing occurrence");
  for (const auto& occ : applied_spine_occurrences(es))
    if (occ == *r.occurrence) return Path(occ.begin(), occ.end() - 2);
  stale(r, "occurrence is not an applied spine occurrence of the binder");
}

Term contract_gc_plus(const Term& t, const Redex& r) {
  const Term& es = spine_es(t, r);
  if (!es.content().is_abs()) stale(r, "content is not an abstraction");
  if (occurs_free(es.body(), es.name())) stale(r, "binder occurs in the body");
  return replace_at(t, r.anchor, es.body());
}

Term contract_e_plus(const Term& t, const Redex& r) {
  const Term& es = spine_es(t, r);
  Path frame = app_frame(es, r);
  NameSupply supply(t);
  const Term& lam = es.content();
  const NameSet lam_fv = free_vars(lam);
  Path occ_in_body(r.occurrence->begin() + 1, r.occurrence->end());
  Term body = es.body();
  Name y = es.name();
  detail::rebind_away(body, y, lam_fv, supply);
  body = detail::freshen_along(body, occ_in_body, lam_fv, supply);
  body = replace_at(body, occ_in_body, lam);
  return replace_at(t, r.anchor, Term::es(body, y, lam));
}

// t[x <- (\y. E<z>) w]  ->  E<t{x<-z}>{y<-w}, with `frame` the ES node
// t[x <- ...] and `lam`, `arg` the two halves of its content.
Term fire_beta(const Term& frame, const Term& lam, const Name& arg, NameSupply& supply) {
  const Term& t = frame.body();
  const Name& x = frame.name();
  NameSet avoid = free_vars(t);
  avoid.erase(x);
  Name y = lam.name();
  Term inner = lam.body();
  if (avoid.count(y)) {
    Name ny = supply.fresh(y);
    inner = rename(inner, y, ny, supply);
    y = ny;
  }
  Spine sp = split_spine(detail::freshen_spine(inner, avoid, supply));
  if (!sp.head.is_var()) throw PreconditionError("abstraction body is not explicit positive");
  Term plugged = plug(sp.ctx, rename(t, x, sp.head.name(), supply));
  return rename(plugged, y, arg, supply);
}

Term contract_m_plus(const Term& t, const Redex& r) {
  const Term& es = spine_es(t, r);
  const Term& c = es.content();
  if (!c.is_app() || !c.fun().is_abs() || !c.arg().is_var()) stale(r, "not an explicit redex");
  NameSupply supply(t);
  return replace_at(t, r.anchor, fire_beta(es, c.fun(), c.arg().name(), supply));
}

// E<t[x <- y z]>[y <- \w.E'<w'>]  ->  E<(E'<t{x<-w'}>){w<-z}>[y <- \w.E'<w'>]
Term contract_eme_plus(const Term& t, const Redex& r) {
  const Term& es = spine_es(t, r);
  Path frame = app_frame(es, r);
  NameSupply supply(t);
  const Term& lam = es.content();
  const NameSet lam_fv = free_vars(lam);
  Path frame_in_body(frame.begin() + 1, frame.end());
  Term body = es.body();
  Name y = es.name();
  detail::rebind_away(body, y, lam_fv, supply);
  // The abstraction moves under the ESs of E: rename those that capture it.
  body = detail::freshen_along(body, frame_in_body, lam_fv, supply);
  const Term& app_es = subterm_at(body, frame_in_body);
  Term fired = fire_beta(app_es, lam, app_es.content().arg().name(), supply);
  body = replace_at(body, frame_in_body, fired);
  return replace_at(t, r.anchor, Term::es(body, y, lam));
}

}  // namespace

std::vector<Redex> enumerate_opos_redexes(const Term& t) {
  if (!is_positive(t)) throw PreconditionError("not a positive term");
  return enumerate_spine(t, false);
}

Term apply_opos_redex(const Term& t, const Redex& r) {
  if (!is_positive(t)) throw PreconditionError("not a positive term");
  switch (r.label) {
    case Label::EmePlus: return contract_eme_plus(t, r);
    case Label::GcPlus: return contract_gc_plus(t, r);
    default: throw StaleRedexError(std::string(label_name(r.label)) + " is not a positive rule");
  }
}

std::vector<Redex> enumerate_oxpos_redexes(const Term& t) {
  if (!is_explicit_positive(t)) throw PreconditionError("not an explicit positive term");
  return enumerate_spine(t, true);
}

Term apply_oxpos_redex(const Term& t, const Redex& r) {
  if (!is_explicit_positive(t)) throw PreconditionError("not an explicit positive term");
  switch (r.label) {
    case Label::MPlus: return contract_m_plus(t, r);
    case Label::EPlus: return contract_e_plus(t, r);
    case Label::GcPlus: return contract_gc_plus(t, r);
    default:
      throw StaleRedexError(std::string(label_name(r.label)) +
                            " is not an explicit positive rule");
  }
}

}  // namespace poslam
