#include "poslam/types.hpp"

#include "poslam/error.hpp"
#include "poslam/syntax.hpp"

namespace poslam {

SimpleType SimpleType::atom(std::string name) {
  return SimpleType(std::make_shared<const Node>(Node{Kind::Atom, std::move(name), 0, {}}));
}

SimpleType SimpleType::meta(unsigned id) {
  return SimpleType(std::make_shared<const Node>(Node{Kind::Meta, {}, id, {}}));
}

SimpleType SimpleType::arrow(SimpleType left, SimpleType right) {
  return SimpleType(std::make_shared<const Node>(
      Node{Kind::Arrow, {}, 0, {std::move(left), std::move(right)}}));
}

namespace {

std::string meta_name(unsigned id) {
  std::string s(1, static_cast<char>('a' + id % 26));
  if (id >= 26) s += std::to_string(id / 26);
  return s;
}

void print_rec(const SimpleType& t, bool left_of_arrow, std::string& out) {
  switch (t.kind()) {
    case SimpleType::Kind::Atom: out += t.atom_name(); return;
    case SimpleType::Kind::Meta: out += "?" + meta_name(t.meta_id()); return;
    case SimpleType::Kind::Arrow:
      if (left_of_arrow) out += '(';
      print_rec(t.left(), true, out);
      out += " -> ";
      print_rec(t.right(), false, out);
      if (left_of_arrow) out += ')';
      return;
  }
}

}  // namespace

std::string print_type(const SimpleType& t) {
  std::string out;
  print_rec(t, false, out);
  return out;
}

bool operator==(const SimpleType& a, const SimpleType& b) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case SimpleType::Kind::Atom: return a.atom_name() == b.atom_name();
    case SimpleType::Kind::Meta: return a.meta_id() == b.meta_id();
    case SimpleType::Kind::Arrow: return a.left() == b.left() && a.right() == b.right();
  }
  return false;
}

SimpleType Unifier::fresh() { return SimpleType::meta(next_++); }

SimpleType Unifier::walk(const SimpleType& t) const {
  SimpleType cur = t;
  while (cur.kind() == SimpleType::Kind::Meta) {
    auto it = subst_.find(cur.meta_id());
    if (it == subst_.end()) break;
    cur = it->second;
  }
  return cur;
}

SimpleType Unifier::resolve(const SimpleType& t) const {
  SimpleType w = walk(t);
  if (w.kind() != SimpleType::Kind::Arrow) return w;
  return SimpleType::arrow(resolve(w.left()), resolve(w.right()));
}

bool Unifier::occurs(unsigned id, const SimpleType& t) const {
  SimpleType w = walk(t);
  switch (w.kind()) {
    case SimpleType::Kind::Atom: return false;
    case SimpleType::Kind::Meta: return w.meta_id() == id;
    case SimpleType::Kind::Arrow: return occurs(id, w.left()) || occurs(id, w.right());
  }
  return false;
}

bool Unifier::unify(const SimpleType& a, const SimpleType& b, std::string& error) {
  SimpleType x = walk(a), y = walk(b);
  using K = SimpleType::Kind;
  if (x.kind() == K::Meta && y.kind() == K::Meta && x.meta_id() == y.meta_id()) return true;
  if (x.kind() == K::Meta || y.kind() == K::Meta) {
    if (x.kind() != K::Meta) std::swap(x, y);
    if (occurs(x.meta_id(), y)) {
      error = "occurs check: " + print_type(resolve(x)) + " = " + print_type(resolve(y));
      return false;
    }
    subst_.emplace(x.meta_id(), y);
    return true;
  }
  if (x.kind() == K::Arrow && y.kind() == K::Arrow)
    return unify(x.left(), y.left(), error) && unify(x.right(), y.right(), error);
  if (x.kind() == K::Atom && y.kind() == K::Atom && x.atom_name() == y.atom_name()) return true;
  error = "clash: " + print_type(resolve(x)) + " = " + print_type(resolve(y));
  return false;
}

namespace {

struct UntypableError {
  std::string message;
};

SimpleType infer_rec(const Term& t, TypeEnv& env, Unifier& u);

// Types `body` with x : type in scope, restoring any shadowed binding.
SimpleType infer_under(const Name& x, const SimpleType& type, const Term& body, TypeEnv& env,
                       Unifier& u) {
  auto it = env.find(x);
  std::optional<SimpleType> saved;
  if (it != env.end()) saved = it->second;
  env.insert_or_assign(x, type);
  SimpleType out = infer_rec(body, env, u);
  if (saved) env.insert_or_assign(x, *saved);
  else env.erase(x);
  return out;
}

void need(bool ok, const std::string& err) {
  if (!ok) throw UntypableError{err};
}

// Rules act on the left of the turnstile only: the type of t[x <- ...] is
// the type of t under an extended environment.
SimpleType infer_rec(const Term& t, TypeEnv& env, Unifier& u) {
  std::string err;
  switch (t.kind()) {
    case Kind::Var: {
      auto it = env.find(t.name());
      if (it == env.end()) it = env.emplace(t.name(), u.fresh()).first;
      return it->second;
    }
    case Kind::Es: {
      const Term& c = t.content();
      SimpleType bound = u.fresh();
      if (c.is_app() && c.fun().is_var() && c.arg().is_var()) {
        // y : B => C, z : B gives x : C
        SimpleType arg_type = infer_rec(c.arg(), env, u);
        SimpleType fun_type = infer_rec(c.fun(), env, u);
        need(u.unify(fun_type, SimpleType::arrow(arg_type, bound), err), err);
      } else if (c.is_abs()) {
        // y : B |- u : C gives x : B => C
        SimpleType param = u.fresh();
        SimpleType result = infer_under(c.name(), param, c.body(), env, u);
        need(u.unify(bound, SimpleType::arrow(param, result), err), err);
      } else if (c.is_app() && c.fun().is_abs() && c.arg().is_var()) {
        // z : B and y : B |- u : C give x : C
        SimpleType arg_type = infer_rec(c.arg(), env, u);
        SimpleType result = infer_under(c.fun().name(), arg_type, c.fun().body(), env, u);
        need(u.unify(bound, result, err), err);
      } else {
        throw PreconditionError("infer_type_positive: not an explicit positive term");
      }
      return infer_under(t.name(), bound, t.body(), env, u);
    }
    default: throw PreconditionError("infer_type_positive: not an explicit positive term");
  }
}

// Standard simple types for arbitrary terms; t[x <- u] is a monomorphic let.
SimpleType infer_source_rec(const Term& t, TypeEnv& env, Unifier& u);

SimpleType infer_source_under(const Name& x, const SimpleType& type, const Term& body,
                              TypeEnv& env, Unifier& u) {
  auto it = env.find(x);
  std::optional<SimpleType> saved;
  if (it != env.end()) saved = it->second;
  env.insert_or_assign(x, type);
  SimpleType out = infer_source_rec(body, env, u);
  if (saved) env.insert_or_assign(x, *saved);
  else env.erase(x);
  return out;
}

SimpleType infer_source_rec(const Term& t, TypeEnv& env, Unifier& u) {
  std::string err;
  switch (t.kind()) {
    case Kind::Var: {
      auto it = env.find(t.name());
      if (it == env.end()) it = env.emplace(t.name(), u.fresh()).first;
      return it->second;
    }
    case Kind::Abs: {
      SimpleType param = u.fresh();
      SimpleType result = infer_source_under(t.name(), param, t.body(), env, u);
      return SimpleType::arrow(param, result);
    }
    case Kind::App: {
      SimpleType fun = infer_source_rec(t.fun(), env, u);
      SimpleType arg = infer_source_rec(t.arg(), env, u);
      SimpleType result = u.fresh();
      need(u.unify(fun, SimpleType::arrow(arg, result), err), err);
      return result;
    }
    case Kind::Es: {
      SimpleType bound = infer_source_rec(t.content(), env, u);
      return infer_source_under(t.name(), bound, t.body(), env, u);
    }
  }
  return u.fresh();
}

template <class Rec>
TypeResult run_inference(const Term& t, const TypeEnv& env, Rec rec) {
  Unifier u;
  TypeEnv scope;
  for (const auto& x : free_vars(t)) {
    auto it = env.find(x);
    scope.emplace(x, it != env.end() ? it->second : u.fresh());
  }
  TypeResult result;
  try {
    SimpleType type = rec(t, scope, u);
    Typing typing;
    for (const auto& x : free_vars(t)) typing.env.emplace(x, u.resolve(scope.at(x)));
    typing.type = u.resolve(type);
    result.typing = std::move(typing);
  } catch (const UntypableError& e) {
    result.error = e.message;
  }
  return result;
}

}  // namespace

TypeResult infer_type_positive(const Term& t, const TypeEnv& env) {
  if (!is_explicit_positive(t))
    throw PreconditionError("infer_type_positive: not an explicit positive term");
  return run_inference(t, env, infer_rec);
}

TypeResult infer_type_source(const Term& t, const TypeEnv& env) {
  return run_inference(t, env, infer_source_rec);
}

namespace {

void canon_rec(const SimpleType& t, std::map<unsigned, unsigned>& metas,
               std::map<std::string, unsigned>& atoms, bool left_of_arrow, std::string& out) {
  switch (t.kind()) {
    case SimpleType::Kind::Atom: {
      auto [it, _] = atoms.try_emplace(t.atom_name(), metas.size() + atoms.size());
      out += meta_name(it->second);
      return;
    }
    case SimpleType::Kind::Meta: {
      auto [it, _] = metas.try_emplace(t.meta_id(), metas.size() + atoms.size());
      out += meta_name(it->second);
      return;
    }
    case SimpleType::Kind::Arrow:
      if (left_of_arrow) out += '(';
      canon_rec(t.left(), metas, atoms, true, out);
      out += " -> ";
      canon_rec(t.right(), metas, atoms, false, out);
      if (left_of_arrow) out += ')';
      return;
  }
}

}  // namespace

std::string canonical_typing(const Typing& typing) {
  std::map<unsigned, unsigned> metas;
  std::map<std::string, unsigned> atoms;
  std::string out;
  for (const auto& [x, ty] : typing.env) {
    out += x + " : ";
    canon_rec(ty, metas, atoms, false, out);
    out += ", ";
  }
  out += "|- ";
  canon_rec(typing.type, metas, atoms, false, out);
  return out;
}

}  // namespace poslam
