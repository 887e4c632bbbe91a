#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "poslam/redex.hpp"
#include "poslam/term.hpp"

namespace poslam {

enum class Calculus { Vsc, VscCore, Opos, Oxpos };

std::string_view calculus_name(Calculus c);
std::optional<Calculus> calculus_from_name(std::string_view name);

// A reduction relation: one calculus plus its switches.
struct Relation {
  Calculus calculus = Calculus::Vsc;
  bool vars_are_values = true;
};

// Whether t belongs to the term grammar of the relation.
bool accepts(const Relation& rel, const Term& t);
std::vector<Redex> enumerate(const Relation& rel, const Term& t);
Term apply(const Relation& rel, const Term& t, const Redex& r);
Verdict verdict(const Relation& rel, const Term& t, const Redex& r);

// One-step reducts paired with the redexes that produce them.
struct Reduct {
  Redex redex;
  Term term;
};
std::vector<Reduct> reducts(const Relation& rel, const Term& t);

}  // namespace poslam
