#pragma once

// Capture-aware building blocks shared by the rewriting engines.

#include "poslam/syntax.hpp"

namespace poslam::detail {

// Renames every ES binder on the spine of t that lies in `avoid`.
Term freshen_spine(const Term& t, const NameSet& avoid, NameSupply& supply);

// Renames every binder crossed by `path` that lies in `avoid`. The shape of
// the term is unchanged, so `path` stays valid.
Term freshen_along(const Term& t, PathView path, const NameSet& avoid,
                   NameSupply& supply);

// Renames the binder x of an ES whose body is `body` when x is free in the
// value about to be copied into that body. Updates both in place.
void rebind_away(Term& body, Name& x, const NameSet& value_fv, NameSupply& supply);

// Number of binders (abstraction or ES) named x anywhere in t.
std::size_t binder_count(const Term& t, const Name& x);

// True iff the variable at t|path is bound by the ES at the root of t (the
// path starts with es-body and crosses neither an abstraction nor another ES
// with the same binder).
bool occurrence_bound_by_root(const Term& t, PathView path);

// Open paths (relative to t) of the free occurrences of x in t.
void free_occurrences(const Term& t, const Name& x, Path& prefix, std::vector<Path>& out);

}  // namespace poslam::detail
