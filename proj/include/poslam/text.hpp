#pragma once

#include <string>
#include <string_view>

#include "poslam/term.hpp"

namespace poslam {

// Concrete syntax:
//   term    := '\' IDENT '.' term | app
//   app     := postfix+            (a trailing abstraction is allowed)
//   postfix := atom ('[' IDENT '<-' term ']')*
//   atom    := IDENT | '(' term ')'
// Identifiers match [a-zA-Z][a-zA-Z0-9_']*.
Term parse_term(std::string_view text);

// Canonical printing: "(\x. x x) (\x. x x)", "t[x <- u]".
std::string print_term(const Term& t);

}  // namespace poslam
