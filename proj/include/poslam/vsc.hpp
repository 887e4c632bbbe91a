#pragma once

#include <vector>

#include "poslam/redex.hpp"
#include "poslam/term.hpp"

namespace poslam {

enum class VscCalculus { Vsc, VscCore };

struct VscOptions {
  // Off: variables are not values, so e_var and gc_var do not exist.
  bool vars_are_values = true;
};

// Rule instances closed by open contexts. Non-gc redexes come first, sorted by
// the pre-order position of their focus; gc redexes follow in the same order.
std::vector<Redex> enumerate_redexes(const Term& t, VscCalculus calculus,
                                     VscOptions opts = {});

// Contracts r in t. Throws StaleRedexError if r does not match t.
Term apply_redex(const Term& t, const Redex& r, VscOptions opts = {});

struct ContextClass {
  bool useful = false;
  bool sub = false;  // the context is a substitution context L
  bool operator==(const ContextClass&) const = default;
};

// Class of the open context obtained by removing t|hole.
ContextClass context_class(const Term& t, PathView hole);
// U ::= O<L t>,  N ::= L | O<t L> | O<t[x <- L]>
ContextClass context_class_grammar(PathView hole);
// Structural recursion from the root: usef(O t) iff usef(O) or sub(O); all
// other constructors inherit.
ContextClass context_class_recursive(PathView hole);

Verdict classify_usefulness(const Term& t, const Redex& r);

// Useful exponential redexes through the two root rules e_u1 (the occurrence
// is in a useful position of the ES body) and e_u2 (an abstraction about to
// be applied by the surrounding application).
std::vector<Redex> enumerate_useful_alt(const Term& t);

// Core-normal grammar:
//   n ::= v | n n' (n not an almost answer)
//       | n[x <- L<\y.t>] (x not in aofv(n)) | n[x <- L<y>] (x not in ofv(n))
//       | n[x <- L<t u>]
bool is_core_normal(const Term& t);

}  // namespace poslam
