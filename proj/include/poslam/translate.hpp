#pragma once

#include "poslam/term.hpp"

namespace poslam {

// Translation of a substitution context: an evaluation context plus the
// renaming that absorbs ESs whose content translates to a bare variable.
struct CtxTranslation {
  SubstCtx ctx;
  Renaming renaming;
};

// VSC term to explicit positive term. Binders are first made pairwise
// distinct; fresh names come from `supply` (stem "y").
Term translate(const Term& t);
Term translate(const Term& t, NameSupply& supply);

// Requires L<x> to be Barendregt-clean for a fresh x (PreconditionError
// otherwise), so that plugging a term whose free variables refer to L's
// binders is meaningful.
CtxTranslation translate_subst_ctx(const SubstCtx& l);
CtxTranslation translate_subst_ctx(const SubstCtx& l, NameSupply& supply);

}  // namespace poslam
