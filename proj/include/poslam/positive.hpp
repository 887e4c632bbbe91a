#pragma once

#include <vector>

#include "poslam/redex.hpp"
#include "poslam/term.hpp"

namespace poslam {

// Positive calculus: eme_plus and gc_plus under evaluation contexts.
// Throws PreconditionError on non-positive input.
std::vector<Redex> enumerate_opos_redexes(const Term& t);
Term apply_opos_redex(const Term& t, const Redex& r);

// Explicit positive calculus: m_plus, e_plus, gc_plus.
// Throws PreconditionError on non-explicit-positive input.
std::vector<Redex> enumerate_oxpos_redexes(const Term& t);
Term apply_oxpos_redex(const Term& t, const Redex& r);

}  // namespace poslam
