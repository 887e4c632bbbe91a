#include "poslam/engine.hpp"

#include "poslam/positive.hpp"
#include "poslam/syntax.hpp"
#include "poslam/vsc.hpp"

namespace poslam {

std::string_view calculus_name(Calculus c) {
  switch (c) {
    case Calculus::Vsc: return "vsc";
    case Calculus::VscCore: return "vsc-core";
    case Calculus::Opos: return "opos";
    case Calculus::Oxpos: return "oxpos";
  }
  return "?";
}

std::optional<Calculus> calculus_from_name(std::string_view name) {
  for (Calculus c : {Calculus::Vsc, Calculus::VscCore, Calculus::Opos, Calculus::Oxpos})
    if (calculus_name(c) == name) return c;
  return std::nullopt;
}

bool accepts(const Relation& rel, const Term& t) {
  switch (rel.calculus) {
    case Calculus::Vsc:
    case Calculus::VscCore: return true;
    case Calculus::Opos: return is_positive(t);
    case Calculus::Oxpos: return is_explicit_positive(t);
  }
  return false;
}

std::vector<Redex> enumerate(const Relation& rel, const Term& t) {
  VscOptions opts{rel.vars_are_values};
  switch (rel.calculus) {
    case Calculus::Vsc: return enumerate_redexes(t, VscCalculus::Vsc, opts);
    case Calculus::VscCore: return enumerate_redexes(t, VscCalculus::VscCore, opts);
    case Calculus::Opos: return enumerate_opos_redexes(t);
    case Calculus::Oxpos: return enumerate_oxpos_redexes(t);
  }
  return {};
}

Term apply(const Relation& rel, const Term& t, const Redex& r) {
  switch (rel.calculus) {
    case Calculus::Vsc:
    case Calculus::VscCore: return apply_redex(t, r, VscOptions{rel.vars_are_values});
    case Calculus::Opos: return apply_opos_redex(t, r);
    case Calculus::Oxpos: return apply_oxpos_redex(t, r);
  }
  return t;
}

Verdict verdict(const Relation& rel, const Term& t, const Redex& r) {
  if (rel.calculus == Calculus::Vsc || rel.calculus == Calculus::VscCore)
    return classify_usefulness(t, r);
  return Verdict::Unclassified;
}

std::vector<Reduct> reducts(const Relation& rel, const Term& t) {
  std::vector<Reduct> out;
  for (auto& r : enumerate(rel, t)) {
    Term u = apply(rel, t, r);
    out.push_back({std::move(r), std::move(u)});
  }
  return out;
}

}  // namespace poslam
