#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "poslam/term.hpp"

namespace poslam {

enum class Label : std::uint8_t {
  M,
  EAbs,
  EVar,
  GcAbs,
  GcVar,
  EU1,
  EU2,
  EmePlus,
  MPlus,
  EPlus,
  GcPlus,
};

std::string_view label_name(Label l);
std::optional<Label> label_from_name(std::string_view name);

bool is_gc(Label l);
bool is_multiplicative(Label l);
bool is_exponential(Label l);

enum class Verdict : std::uint8_t { Useful, Nonuseful, Unclassified };

std::string_view verdict_name(Verdict v);

// One rule instance. `anchor` addresses the root pattern of the rule; for
// exponential rules `occurrence` addresses the replaced variable relative to
// the anchor.
//
//   m                App node L<\x.t> u
//   e_abs, e_var     ES node; occurrence starts with es-body
//   gc_*             ES node
//   e_u1             ES node, as e_abs
//   e_u2             App node; occurrence runs app-fun then es-body steps
//   m_plus, gc_plus  ES node
//   e_plus, eme_plus ES node [y <- \w.u]; occurrence ends at the y of [x <- y z]
struct Redex {
  Label label;
  Path anchor;
  std::optional<Path> occurrence;

  // The subterm a redex acts on first in print order; used for ordering.
  Path focus() const;
  bool operator==(const Redex&) const = default;
};

// Pre-order position of the focus, then label.
bool redex_before(const Redex& a, const Redex& b);
bool path_before(PathView a, PathView b);

using Counters = std::map<Label, std::size_t>;

}  // namespace poslam
