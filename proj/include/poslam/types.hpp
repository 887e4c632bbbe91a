#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "poslam/term.hpp"

namespace poslam {

// Simple types. Unresolved meta variables of a principal type are its free
// type parameters; canonical_typing names them a, b, c, ...
class SimpleType {
 public:
  enum class Kind { Atom, Meta, Arrow };

  static SimpleType atom(std::string name);
  static SimpleType meta(unsigned id);
  static SimpleType arrow(SimpleType left, SimpleType right);

  Kind kind() const { return node_->kind; }
  const std::string& atom_name() const { return node_->name; }
  unsigned meta_id() const { return node_->id; }
  const SimpleType& left() const { return node_->children[0]; }
  const SimpleType& right() const { return node_->children[1]; }

 private:
  struct Node {
    Kind kind;
    std::string name;
    unsigned id = 0;
    std::vector<SimpleType> children;
  };
  explicit SimpleType(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

std::string print_type(const SimpleType& t);
bool operator==(const SimpleType& a, const SimpleType& b);

// First-order unification state; query-local.
class Unifier {
 public:
  SimpleType fresh();
  SimpleType resolve(const SimpleType& t) const;
  // False with `error` set on clash or occurs-check failure.
  bool unify(const SimpleType& a, const SimpleType& b, std::string& error);

 private:
  SimpleType walk(const SimpleType& t) const;
  bool occurs(unsigned id, const SimpleType& t) const;

  unsigned next_ = 0;
  std::map<unsigned, SimpleType> subst_;
};

using TypeEnv = std::map<Name, SimpleType>;

struct Typing {
  // Environment restricted to the free variables of the term.
  TypeEnv env;
  SimpleType type = SimpleType::atom("a");
};

struct TypeResult {
  std::optional<Typing> typing;
  std::string error;  // failing constraint when untypable
  bool typable() const { return typing.has_value(); }
};

// Left-rule inference for (explicit) positive terms. Free variables absent
// from `env` get fresh meta variables.
TypeResult infer_type_positive(const Term& t, const TypeEnv& env = {});

// Simple types for any term, with t[x <- u] typed as a monomorphic let.
TypeResult infer_type_source(const Term& t, const TypeEnv& env = {});

// Typing with meta variables and atoms renamed to a, b, ... in order of first
// appearance (environment in name order, then the type). Two typings are equal
// up to renaming of atoms iff their canonical strings are equal.
std::string canonical_typing(const Typing& typing);

}  // namespace poslam
