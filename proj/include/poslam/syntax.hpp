#pragma once

#include <map>
#include <optional>
#include <string>

#include "poslam/term.hpp"

namespace poslam {

enum class FvMode { All, Open, AppliedOpen };

NameSet free_vars(const Term& t, FvMode mode = FvMode::All);
bool occurs_free(const Term& t, const Name& x);
// Every name in t, free or bound.
NameSet all_names(const Term& t);

// Simultaneous capture-avoiding substitution. Binders that would capture a
// free variable of the substituted terms are renamed with `supply`.
Term substitute(const Term& t, const std::map<Name, Term>& sigma, NameSupply& supply);

// t{x<-y}.
Term rename(const Term& t, const Name& x, const Name& y);
Term rename(const Term& t, const Name& x, const Name& y, NameSupply& supply);
Term rename(const Term& t, const Renaming& r, NameSupply& supply);
// t{x<-v} for a value v; throws PreconditionError otherwise.
Term subst_value(const Term& t, const Name& x, const Term& v);

bool alpha_eq(const Term& t, const Term& u);
// Canonical string of the alpha class (bound variables as de Bruijn indices).
std::string alpha_key(const Term& t);
// Like alpha_key but also forgets the names of free variables (renamed in
// first-occurrence order): the key of t up to any injective renaming.
std::string shape_key(const Term& t);

struct TermFlags {
  bool is_value = false;
  bool is_answer = false;
  bool is_almost_answer = false;
  bool is_positive = false;
  bool is_explicit_positive = false;
};

TermFlags classify_term(const Term& t);
// L<\x.t>
bool is_answer(const Term& t);
// An answer, or L<L'<x>[x<-a]> with a an answer.
bool is_almost_answer(const Term& t);
bool is_positive(const Term& t);
bool is_explicit_positive(const Term& t);

// If t = L<<x>> (the spine head is a variable not bound by the spine),
// returns x.
std::optional<Name> free_head(const Term& t);

// E<x> for an explicit positive term; hole is a run of es-body steps.
struct Decomposition {
  Path hole;
  Name head;
};

Decomposition decompose_positive(const Term& t);

// Renames binders so that every binder is distinct from every other binder
// and from every free variable. Names are kept where already unique.
Term uniquify_binders(const Term& t, NameSupply& supply);
bool is_barendregt(const Term& t);

}  // namespace poslam
