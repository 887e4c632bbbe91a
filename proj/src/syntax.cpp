#include "poslam/syntax.hpp"

#include <algorithm>
#include <unordered_map>

#include "poslam/error.hpp"

namespace poslam {

namespace {

void fv_all(const Term& t, std::vector<Name>& bound, NameSet& out) {
  switch (t.kind()) {
    case Kind::Var:
      if (std::find(bound.begin(), bound.end(), t.name()) == bound.end())
        out.insert(t.name());
      return;
    case Kind::Abs:
      bound.push_back(t.name());
      fv_all(t.body(), bound, out);
      bound.pop_back();
      return;
    case Kind::App:
      fv_all(t.fun(), bound, out);
      fv_all(t.arg(), bound, out);
      return;
    case Kind::Es:
      fv_all(t.content(), bound, out);
      bound.push_back(t.name());
      fv_all(t.body(), bound, out);
      bound.pop_back();
      return;
  }
}

NameSet ofv(const Term& t) {
  switch (t.kind()) {
    case Kind::Var: return {t.name()};
    case Kind::Abs: return {};
    case Kind::App: {
      NameSet out = ofv(t.fun());
      NameSet r = ofv(t.arg());
      out.insert(r.begin(), r.end());
      return out;
    }
    case Kind::Es: {
      NameSet out = ofv(t.body());
      out.erase(t.name());
      NameSet r = ofv(t.content());
      out.insert(r.begin(), r.end());
      return out;
    }
  }
  return {};
}

NameSet aofv(const Term& t) {
  switch (t.kind()) {
    case Kind::Var:
    case Kind::Abs: return {};
    case Kind::App: {
      NameSet out = aofv(t.fun());
      NameSet r = aofv(t.arg());
      out.insert(r.begin(), r.end());
      if (auto x = free_head(t.fun())) out.insert(*x);
      return out;
    }
    case Kind::Es: {
      NameSet out = aofv(t.body());
      out.erase(t.name());
      NameSet r = aofv(t.content());
      out.insert(r.begin(), r.end());
      return out;
    }
  }
  return {};
}

bool occurs_free_rec(const Term& t, const Name& x) {
  switch (t.kind()) {
    case Kind::Var: return t.name() == x;
    case Kind::Abs: return t.name() != x && occurs_free_rec(t.body(), x);
    case Kind::App: return occurs_free_rec(t.fun(), x) || occurs_free_rec(t.arg(), x);
    case Kind::Es:
      return occurs_free_rec(t.content(), x) ||
             (t.name() != x && occurs_free_rec(t.body(), x));
  }
  return false;
}

void all_names_rec(const Term& t, NameSet& out) {
  out.insert(t.name());
  switch (t.kind()) {
    case Kind::Var: return;
    case Kind::Abs: all_names_rec(t.body(), out); return;
    case Kind::App:
      all_names_rec(t.fun(), out);
      all_names_rec(t.arg(), out);
      return;
    case Kind::Es:
      all_names_rec(t.body(), out);
      all_names_rec(t.content(), out);
      return;
  }
}

}  // namespace

NameSet free_vars(const Term& t, FvMode mode) {
  switch (mode) {
    case FvMode::All: {
      NameSet out;
      std::vector<Name> bound;
      fv_all(t, bound, out);
      return out;
    }
    case FvMode::Open: return ofv(t);
    case FvMode::AppliedOpen: return aofv(t);
  }
  return {};
}

bool occurs_free(const Term& t, const Name& x) { return occurs_free_rec(t, x); }

NameSet all_names(const Term& t) {
  NameSet out;
  all_names_rec(t, out);
  return out;
}

namespace {

using SubstMap = std::map<Name, Term>;

Term subst_rec(const Term& t, const SubstMap& sigma, NameSupply& supply);

// Pushes a substitution under a binder, renaming the binder if it would
// capture a free variable of the relevant part of the range.
std::pair<Name, Term> under_binder(const Name& x, const Term& body,
                                   const SubstMap& sigma, NameSupply& supply) {
  SubstMap inner;
  for (const auto& [k, v] : sigma)
    if (k != x && occurs_free(body, k)) inner.emplace(k, v);
  if (inner.empty()) return {x, body};
  bool clash = false;
  for (const auto& [k, v] : inner)
    if (occurs_free(v, x)) {
      clash = true;
      break;
    }
  if (!clash) return {x, subst_rec(body, inner, supply)};
  Name fresh = supply.fresh(x);
  inner.emplace(x, Term::var(fresh));
  return {fresh, subst_rec(body, inner, supply)};
}

Term subst_rec(const Term& t, const SubstMap& sigma, NameSupply& supply) {
  switch (t.kind()) {
    case Kind::Var: {
      auto it = sigma.find(t.name());
      return it == sigma.end() ? t : it->second;
    }
    case Kind::Abs: {
      auto [x, body] = under_binder(t.name(), t.body(), sigma, supply);
      if (x == t.name() && body.identical(t.body())) return t;
      return Term::abs(std::move(x), std::move(body));
    }
    case Kind::App: {
      Term f = subst_rec(t.fun(), sigma, supply);
      Term a = subst_rec(t.arg(), sigma, supply);
      if (f.identical(t.fun()) && a.identical(t.arg())) return t;
      return Term::app(std::move(f), std::move(a));
    }
    case Kind::Es: {
      Term c = subst_rec(t.content(), sigma, supply);
      auto [x, body] = under_binder(t.name(), t.body(), sigma, supply);
      if (x == t.name() && body.identical(t.body()) && c.identical(t.content())) return t;
      return Term::es(std::move(body), std::move(x), std::move(c));
    }
  }
  return t;
}

}  // namespace

Term substitute(const Term& t, const std::map<Name, Term>& sigma, NameSupply& supply) {
  SubstMap live;
  for (const auto& [k, v] : sigma) {
    supply.reserve(v);
    if (occurs_free(t, k)) live.emplace(k, v);
  }
  if (live.empty()) return t;
  return subst_rec(t, live, supply);
}

Term rename(const Term& t, const Name& x, const Name& y, NameSupply& supply) {
  if (x == y) return t;
  supply.reserve(y);
  return substitute(t, {{x, Term::var(y)}}, supply);
}

Term rename(const Term& t, const Name& x, const Name& y) {
  NameSupply supply(t);
  return rename(t, x, y, supply);
}

Term rename(const Term& t, const Renaming& r, NameSupply& supply) {
  SubstMap sigma;
  for (const auto& [k, v] : r.entries()) sigma.emplace(k, Term::var(v));
  return substitute(t, sigma, supply);
}

Term subst_value(const Term& t, const Name& x, const Term& v) {
  if (!v.is_value()) throw PreconditionError("subst_value: substituted term is not a value");
  NameSupply supply(t);
  return substitute(t, {{x, v}}, supply);
}

namespace {

long bound_index(const std::vector<const Name*>& stack, const Name& x) {
  for (std::size_t i = stack.size(); i-- > 0;)
    if (*stack[i] == x) return static_cast<long>(stack.size() - 1 - i);
  return -1;
}

bool alpha_rec(const Term& t, const Term& u, std::vector<const Name*>& st,
               std::vector<const Name*>& su) {
  if (t.kind() != u.kind()) return false;
  switch (t.kind()) {
    case Kind::Var: {
      long i = bound_index(st, t.name());
      long j = bound_index(su, u.name());
      if (i != j) return false;
      return i >= 0 || t.name() == u.name();
    }
    case Kind::Abs: {
      st.push_back(&t.name());
      su.push_back(&u.name());
      bool ok = alpha_rec(t.body(), u.body(), st, su);
      st.pop_back();
      su.pop_back();
      return ok;
    }
    case Kind::App:
      return alpha_rec(t.fun(), u.fun(), st, su) && alpha_rec(t.arg(), u.arg(), st, su);
    case Kind::Es: {
      if (!alpha_rec(t.content(), u.content(), st, su)) return false;
      st.push_back(&t.name());
      su.push_back(&u.name());
      bool ok = alpha_rec(t.body(), u.body(), st, su);
      st.pop_back();
      su.pop_back();
      return ok;
    }
  }
  return false;
}

void key_rec(const Term& t, std::vector<const Name*>& stack,
             std::unordered_map<Name, std::size_t>* free_ids, std::string& out) {
  switch (t.kind()) {
    case Kind::Var: {
      long i = bound_index(stack, t.name());
      if (i >= 0) {
        out += '#';
        out += std::to_string(i);
      } else if (free_ids) {
        auto [it, _] = free_ids->try_emplace(t.name(), free_ids->size());
        out += '$';
        out += std::to_string(it->second);
      } else {
        out += '$';
        out += t.name();
      }
      out += ' ';
      return;
    }
    case Kind::Abs:
      out += "L ";
      stack.push_back(&t.name());
      key_rec(t.body(), stack, free_ids, out);
      stack.pop_back();
      return;
    case Kind::App:
      out += "A ";
      key_rec(t.fun(), stack, free_ids, out);
      key_rec(t.arg(), stack, free_ids, out);
      return;
    case Kind::Es:
      // Body first so that free variables are numbered in print order.
      out += "E ";
      stack.push_back(&t.name());
      key_rec(t.body(), stack, free_ids, out);
      stack.pop_back();
      key_rec(t.content(), stack, free_ids, out);
      return;
  }
}

}  // namespace

bool alpha_eq(const Term& t, const Term& u) {
  if (t.identical(u)) return true;
  if (t.size() != u.size()) return false;
  std::vector<const Name*> st, su;
  return alpha_rec(t, u, st, su);
}

std::string alpha_key(const Term& t) {
  std::string out;
  out.reserve(t.size() * 3);
  std::vector<const Name*> stack;
  key_rec(t, stack, nullptr, out);
  return out;
}

std::string shape_key(const Term& t) {
  std::string out;
  std::vector<const Name*> stack;
  std::unordered_map<Name, std::size_t> ids;
  key_rec(t, stack, &ids, out);
  return out;
}

bool is_answer(const Term& t) {
  const Term* cur = &t;
  while (cur->is_es()) cur = &cur->body();
  return cur->is_abs();
}

bool is_almost_answer(const Term& t) {
  Spine s = split_spine(t);
  if (s.head.is_abs()) return true;
  if (!s.head.is_var()) return false;
  for (const auto& f : s.ctx.frames)
    if (f.binder == s.head.name()) return is_answer(f.content);
  return false;
}

std::optional<Name> free_head(const Term& t) {
  Spine s = split_spine(t);
  if (!s.head.is_var() || s.ctx.binds(s.head.name())) return std::nullopt;
  return s.head.name();
}

namespace {

bool positive_rec(const Term& t, bool explicit_redexes) {
  const Term* cur = &t;
  while (cur->is_es()) {
    const Term& c = cur->content();
    if (c.is_app()) {
      if (!c.arg().is_var()) return false;
      if (c.fun().is_var()) {
        // t[x<-yz]
      } else if (explicit_redexes && c.fun().is_abs()) {
        if (!positive_rec(c.fun().body(), true)) return false;
      } else {
        return false;
      }
    } else if (c.is_abs()) {
      if (!positive_rec(c.body(), explicit_redexes)) return false;
    } else {
      return false;
    }
    cur = &cur->body();
  }
  return cur->is_var();
}

}  // namespace

bool is_positive(const Term& t) { return positive_rec(t, false); }
bool is_explicit_positive(const Term& t) { return positive_rec(t, true); }

TermFlags classify_term(const Term& t) {
  TermFlags f;
  f.is_value = t.is_value();
  f.is_answer = is_answer(t);
  f.is_almost_answer = is_almost_answer(t);
  f.is_positive = is_positive(t);
  f.is_explicit_positive = f.is_positive || is_explicit_positive(t);
  return f;
}

Decomposition decompose_positive(const Term& t) {
  if (!is_explicit_positive(t))
    throw PreconditionError("decompose_positive: not an explicit positive term");
  Decomposition d;
  const Term* cur = &t;
  while (cur->is_es()) {
    d.hole.push_back(Step::EsBody);
    cur = &cur->body();
  }
  d.head = cur->name();
  return d;
}

namespace {

struct Uniquifier {
  NameSupply& supply;
  std::unordered_set<Name> taken;

  Name pick(const Name& x) {
    if (taken.insert(x).second) return x;
    Name fresh = supply.fresh(x);
    taken.insert(fresh);
    return fresh;
  }

  Term go(const Term& t, std::map<Name, Name>& env) {
    switch (t.kind()) {
      case Kind::Var: {
        auto it = env.find(t.name());
        return it == env.end() ? t : Term::var(it->second);
      }
      case Kind::Abs: {
        Name nx = pick(t.name());
        Term body = with_binder(t.name(), nx, t.body(), env);
        return Term::abs(std::move(nx), std::move(body));
      }
      case Kind::App: {
        Term f = go(t.fun(), env);
        Term a = go(t.arg(), env);
        return Term::app(std::move(f), std::move(a));
      }
      case Kind::Es: {
        Name nx = pick(t.name());
        Term body = with_binder(t.name(), nx, t.body(), env);
        Term c = go(t.content(), env);
        return Term::es(std::move(body), std::move(nx), std::move(c));
      }
    }
    return t;
  }

  Term with_binder(const Name& x, const Name& nx, const Term& body,
                   std::map<Name, Name>& env) {
    auto saved = env.find(x) == env.end() ? std::optional<Name>() : env[x];
    env[x] = nx;
    Term out = go(body, env);
    if (saved) env[x] = *saved;
    else env.erase(x);
    return out;
  }
};

void binder_names(const Term& t, std::vector<Name>& out) {
  switch (t.kind()) {
    case Kind::Var: return;
    case Kind::Abs:
      out.push_back(t.name());
      binder_names(t.body(), out);
      return;
    case Kind::App:
      binder_names(t.fun(), out);
      binder_names(t.arg(), out);
      return;
    case Kind::Es:
      out.push_back(t.name());
      binder_names(t.body(), out);
      binder_names(t.content(), out);
      return;
  }
}

}  // namespace

Term uniquify_binders(const Term& t, NameSupply& supply) {
  supply.reserve(t);
  Uniquifier u{supply, {}};
  for (const auto& x : free_vars(t)) u.taken.insert(x);
  std::map<Name, Name> env;
  return u.go(t, env);
}

bool is_barendregt(const Term& t) {
  std::vector<Name> binders;
  binder_names(t, binders);
  std::sort(binders.begin(), binders.end());
  if (std::adjacent_find(binders.begin(), binders.end()) != binders.end()) return false;
  NameSet fv = free_vars(t);
  for (const auto& b : binders)
    if (fv.count(b)) return false;
  return true;
}

}  // namespace poslam
