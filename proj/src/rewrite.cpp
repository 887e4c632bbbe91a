#include "rewrite.hpp"

#include "poslam/error.hpp"

namespace poslam::detail {

Term freshen_spine(const Term& t, const NameSet& avoid, NameSupply& supply) {
  if (!t.is_es()) return t;
  Name b = t.name();
  Term body = t.body();
  if (avoid.count(b)) {
    Name nb = supply.fresh(b);
    body = rename(body, b, nb, supply);
    b = nb;
  }
  return Term::es(freshen_spine(body, avoid, supply), b, t.content());
}

Term freshen_along(const Term& t, PathView path, const NameSet& avoid,
                   NameSupply& supply) {
  if (path.empty()) return t;
  Step s = path.front();
  PathView rest = path.subspan(1);
  switch (s) {
    case Step::AbsBody:
    case Step::EsBody: {
      Name b = t.name();
      Term body = t.body();
      if (avoid.count(b)) {
        Name nb = supply.fresh(b);
        body = rename(body, b, nb, supply);
        b = nb;
      }
      body = freshen_along(body, rest, avoid, supply);
      if (t.is_abs()) return Term::abs(b, body);
      return Term::es(body, b, t.content());
    }
    case Step::AppFun:
      return Term::app(freshen_along(t.fun(), rest, avoid, supply), t.arg());
    case Step::AppArg:
      return Term::app(t.fun(), freshen_along(t.arg(), rest, avoid, supply));
    case Step::EsContent:
      return Term::es(t.body(), t.name(), freshen_along(t.content(), rest, avoid, supply));
  }
  return t;
}

std::size_t binder_count(const Term& t, const Name& x) {
  switch (t.kind()) {
    case Kind::Var: return 0;
    case Kind::Abs: return (t.name() == x) + binder_count(t.body(), x);
    case Kind::App: return binder_count(t.fun(), x) + binder_count(t.arg(), x);
    case Kind::Es:
      return (t.name() == x) + binder_count(t.body(), x) + binder_count(t.content(), x);
  }
  return 0;
}

bool occurrence_bound_by_root(const Term& t, PathView path) {
  if (!t.is_es() || path.empty() || path.front() != Step::EsBody) return false;
  if (!is_open_path(path) || !is_valid_path(t, path)) return false;
  const Name& x = t.name();
  const Term* cur = &t.body();
  for (std::size_t i = 1; i < path.size(); ++i) {
    Step s = path[i];
    if (s == Step::EsBody && cur->name() == x) return false;
    switch (s) {
      case Step::AppFun: cur = &cur->fun(); break;
      case Step::AppArg: cur = &cur->arg(); break;
      case Step::EsBody: cur = &cur->body(); break;
      case Step::EsContent: cur = &cur->content(); break;
      case Step::AbsBody: return false;
    }
  }
  return cur->is_var() && cur->name() == x;
}

void rebind_away(Term& body, Name& x, const NameSet& value_fv, NameSupply& supply) {
  if (!value_fv.count(x)) return;
  Name nx = supply.fresh(x);
  body = rename(body, x, nx, supply);
  x = nx;
}

void free_occurrences(const Term& t, const Name& x, Path& prefix, std::vector<Path>& out) {
  switch (t.kind()) {
    case Kind::Var:
      if (t.name() == x) out.push_back(prefix);
      return;
    case Kind::Abs: return;
    case Kind::App:
      prefix.push_back(Step::AppFun);
      free_occurrences(t.fun(), x, prefix, out);
      prefix.back() = Step::AppArg;
      free_occurrences(t.arg(), x, prefix, out);
      prefix.pop_back();
      return;
    case Kind::Es:
      if (t.name() != x) {
        prefix.push_back(Step::EsBody);
        free_occurrences(t.body(), x, prefix, out);
        prefix.pop_back();
      }
      prefix.push_back(Step::EsContent);
      free_occurrences(t.content(), x, prefix, out);
      prefix.pop_back();
      return;
  }
}

}  // namespace poslam::detail
