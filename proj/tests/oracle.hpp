#pragma once

// Reference implementations used only by the tests. They are written
// directly from the definitions and share no code with the library beyond
// the Term accessors and the parser.

#include <optional>
#include <set>
#include <string>

#include "poslam/term.hpp"

namespace oracle {

using poslam::Name;
using poslam::Term;

// Nameless rendering with an explicit binder stack; equal strings iff
// alpha-equivalent.
std::string nameless(const Term& t);
bool alpha_equal(const Term& a, const Term& b);

std::set<Name> fv(const Term& t);
std::set<Name> ofv(const Term& t);
std::set<Name> aofv(const Term& t);

// Replaces free occurrences of x one by one, after renaming every binder of
// t to a name foreign to v.
Term subst(const Term& t, const Name& x, const Term& v);

bool is_answer(const Term& t);
bool is_almost_answer(const Term& t);

// Direct reading of the grammar of core normal terms.
bool core_normal(const Term& t);

// Principal simple typing of a source term, t[x <- u] typed as (\x. t) u.
// Printed as "x : a, y : b -> a, |- a" with variables named by first
// appearance (environment in name order, then the type), restricted to
// `keep` when given. Empty when untypable.
std::optional<std::string> principal_typing(const Term& t,
                                            const std::optional<std::set<Name>>& keep = {});

}  // namespace oracle
