#include "oracle.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace oracle {

using poslam::Kind;

namespace {

void nameless_rec(const Term& t, std::vector<Name>& stack, std::string& out) {
  switch (t.kind()) {
    case Kind::Var: {
      auto it = std::find(stack.rbegin(), stack.rend(), t.name());
      if (it == stack.rend()) out += "f:" + t.name();
      else out += "#" + std::to_string(it - stack.rbegin());
      return;
    }
    case Kind::Abs:
      out += "L(";
      stack.push_back(t.name());
      nameless_rec(t.body(), stack, out);
      stack.pop_back();
      out += ")";
      return;
    case Kind::App:
      out += "A(";
      nameless_rec(t.fun(), stack, out);
      out += ",";
      nameless_rec(t.arg(), stack, out);
      out += ")";
      return;
    case Kind::Es:
      out += "S(";
      stack.push_back(t.name());
      nameless_rec(t.body(), stack, out);
      stack.pop_back();
      out += ",";
      nameless_rec(t.content(), stack, out);
      out += ")";
      return;
  }
}

// Strips the ES spine.
const Term& spine_head(const Term& t) {
  const Term* cur = &t;
  while (cur->is_es()) cur = &cur->body();
  return *cur;
}

bool spine_binds(const Term& t, const Name& x) {
  for (const Term* cur = &t; cur->is_es(); cur = &cur->body())
    if (cur->name() == x) return true;
  return false;
}

// t = L<<x>>: a variable head not captured by the spine.
bool free_variable_head(const Term& t) {
  const Term& h = spine_head(t);
  return h.is_var() && !spine_binds(t, h.name());
}

}  // namespace

std::string nameless(const Term& t) {
  std::vector<Name> stack;
  std::string out;
  nameless_rec(t, stack, out);
  return out;
}

bool alpha_equal(const Term& a, const Term& b) { return nameless(a) == nameless(b); }

std::set<Name> fv(const Term& t) {
  switch (t.kind()) {
    case Kind::Var: return {t.name()};
    case Kind::Abs: {
      auto s = fv(t.body());
      s.erase(t.name());
      return s;
    }
    case Kind::App: {
      auto s = fv(t.fun());
      auto r = fv(t.arg());
      s.insert(r.begin(), r.end());
      return s;
    }
    case Kind::Es: {
      auto s = fv(t.body());
      s.erase(t.name());
      auto r = fv(t.content());
      s.insert(r.begin(), r.end());
      return s;
    }
  }
  return {};
}

std::set<Name> ofv(const Term& t) {
  switch (t.kind()) {
    case Kind::Var: return {t.name()};
    case Kind::Abs: return {};
    case Kind::App: {
      auto s = ofv(t.fun());
      auto r = ofv(t.arg());
      s.insert(r.begin(), r.end());
      return s;
    }
    case Kind::Es: {
      auto s = ofv(t.body());
      s.erase(t.name());
      auto r = ofv(t.content());
      s.insert(r.begin(), r.end());
      return s;
    }
  }
  return {};
}

std::set<Name> aofv(const Term& t) {
  switch (t.kind()) {
    case Kind::Var:
    case Kind::Abs: return {};
    case Kind::App: {
      auto s = aofv(t.fun());
      auto r = aofv(t.arg());
      s.insert(r.begin(), r.end());
      if (free_variable_head(t.fun())) s.insert(spine_head(t.fun()).name());
      return s;
    }
    case Kind::Es: {
      auto s = aofv(t.body());
      s.erase(t.name());
      auto r = aofv(t.content());
      s.insert(r.begin(), r.end());
      return s;
    }
  }
  return {};
}

namespace {

struct Substituter {
  const Name& x;
  const Term& v;
  unsigned next = 0;

  // Underscore names cannot be written in concrete syntax, so they are
  // foreign to every parsed term.
  Name fresh() { return "_r" + std::to_string(++next); }

  Term run(const Term& t, std::map<Name, Name>& ren) {
    switch (t.kind()) {
      case Kind::Var: {
        auto it = ren.find(t.name());
        if (it != ren.end()) return Term::var(it->second);
        return t.name() == x ? v : t;
      }
      case Kind::Abs: {
        Name z = fresh();
        auto inner = ren;
        inner[t.name()] = z;
        return Term::abs(z, run(t.body(), inner));
      }
      case Kind::App: return Term::app(run(t.fun(), ren), run(t.arg(), ren));
      case Kind::Es: {
        Name z = fresh();
        auto inner = ren;
        inner[t.name()] = z;
        Term body = run(t.body(), inner);
        return Term::es(body, z, run(t.content(), ren));
      }
    }
    return t;
  }
};

}  // namespace

Term subst(const Term& t, const Name& x, const Term& v) {
  Substituter s{x, v};
  std::map<Name, Name> ren;
  return s.run(t, ren);
}

bool is_answer(const Term& t) { return spine_head(t).is_abs(); }

bool is_almost_answer(const Term& t) {
  if (is_answer(t)) return true;
  for (const Term* cur = &t; cur->is_es(); cur = &cur->body()) {
    const Term& inner = cur->body();
    const Term& h = spine_head(inner);
    if (is_answer(cur->content()) && h.is_var() && h.name() == cur->name() &&
        !spine_binds(inner, h.name()))
      return true;
  }
  return false;
}

bool core_normal(const Term& t) {
  switch (t.kind()) {
    case Kind::Var:
    case Kind::Abs: return true;
    case Kind::App:
      return core_normal(t.fun()) && core_normal(t.arg()) && !is_almost_answer(t.fun());
    case Kind::Es: {
      const Term& n = t.body();
      const Term& c = t.content();
      if (!core_normal(n) || !core_normal(c)) return false;
      const Term& h = spine_head(c);
      if (h.is_abs()) return aofv(n).count(t.name()) == 0;
      if (h.is_var()) return ofv(n).count(t.name()) == 0;
      return true;
    }
  }
  return false;
}

namespace {

// Type graph: node i is a variable when arrow[i] is unset.
struct Types {
  std::vector<std::optional<std::pair<int, int>>> arrow;
  std::vector<int> bound;

  int fresh() {
    arrow.emplace_back();
    bound.push_back(-1);
    return static_cast<int>(arrow.size()) - 1;
  }
  int make_arrow(int a, int b) {
    int n = fresh();
    arrow[n] = std::make_pair(a, b);
    return n;
  }
  int find(int n) const {
    while (!arrow[n] && bound[n] >= 0) n = bound[n];
    return n;
  }
  bool occurs(int var, int n) const {
    n = find(n);
    if (n == var) return true;
    if (!arrow[n]) return false;
    return occurs(var, arrow[n]->first) || occurs(var, arrow[n]->second);
  }
  bool unify(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return true;
    if (!arrow[a]) {
      if (occurs(a, b)) return false;
      bound[a] = b;
      return true;
    }
    if (!arrow[b]) return unify(b, a);
    auto [al, ar] = *arrow[a];
    auto [bl, br] = *arrow[b];
    return unify(al, bl) && unify(ar, br);
  }
};

struct Infer {
  Types types;
  std::map<Name, int> free;
  std::vector<std::pair<Name, int>> scope;

  std::optional<int> run(const Term& t) {
    switch (t.kind()) {
      case Kind::Var: {
        for (auto it = scope.rbegin(); it != scope.rend(); ++it)
          if (it->first == t.name()) return it->second;
        auto [it, fresh] = free.try_emplace(t.name(), 0);
        if (fresh) it->second = types.fresh();
        return it->second;
      }
      case Kind::Abs: {
        int a = types.fresh();
        scope.emplace_back(t.name(), a);
        auto b = run(t.body());
        scope.pop_back();
        if (!b) return {};
        return types.make_arrow(a, *b);
      }
      case Kind::App: {
        auto f = run(t.fun());
        if (!f) return {};
        auto a = run(t.arg());
        if (!a) return {};
        int r = types.fresh();
        if (!types.unify(*f, types.make_arrow(*a, r))) return {};
        return r;
      }
      case Kind::Es: {
        auto a = run(t.content());
        if (!a) return {};
        scope.emplace_back(t.name(), *a);
        auto b = run(t.body());
        scope.pop_back();
        return b;
      }
    }
    return {};
  }

  void print(int n, bool left, std::map<int, unsigned>& names, std::string& out) const {
    n = types.find(n);
    if (!types.arrow[n]) {
      auto [it, _] = names.try_emplace(n, static_cast<unsigned>(names.size()));
      unsigned id = it->second;
      out += static_cast<char>('a' + id % 26);
      if (id >= 26) out += std::to_string(id / 26);
      return;
    }
    if (left) out += '(';
    print(types.arrow[n]->first, true, names, out);
    out += " -> ";
    print(types.arrow[n]->second, false, names, out);
    if (left) out += ')';
  }
};

}  // namespace

std::optional<std::string> principal_typing(const Term& t,
                                            const std::optional<std::set<Name>>& keep) {
  Infer inf;
  auto ty = inf.run(t);
  if (!ty) return {};
  std::map<int, unsigned> names;
  std::string out;
  for (const auto& [x, n] : inf.free) {
    if (keep && !keep->count(x)) continue;
    out += x + " : ";
    inf.print(n, false, names, out);
    out += ", ";
  }
  out += "|- ";
  inf.print(*ty, false, names, out);
  return out;
}

}  // namespace oracle
