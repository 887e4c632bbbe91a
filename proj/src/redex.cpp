#include "poslam/redex.hpp"

#include <algorithm>
#include <array>

namespace poslam {

namespace {

constexpr std::array<std::pair<Label, std::string_view>, 11> kLabels{{
    {Label::M, "m"},
    {Label::EAbs, "e_abs"},
    {Label::EVar, "e_var"},
    {Label::GcAbs, "gc_abs"},
    {Label::GcVar, "gc_var"},
    {Label::EU1, "e_u1"},
    {Label::EU2, "e_u2"},
    {Label::EmePlus, "eme_plus"},
    {Label::MPlus, "m_plus"},
    {Label::EPlus, "e_plus"},
    {Label::GcPlus, "gc_plus"},
}};

}  // namespace

std::string_view label_name(Label l) {
  for (const auto& [label, name] : kLabels)
    if (label == l) return name;
  return "?";
}

std::optional<Label> label_from_name(std::string_view name) {
  for (const auto& [label, n] : kLabels)
    if (n == name) return label;
  return std::nullopt;
}

bool is_gc(Label l) {
  return l == Label::GcAbs || l == Label::GcVar || l == Label::GcPlus;
}

bool is_multiplicative(Label l) { return l == Label::M || l == Label::MPlus; }

bool is_exponential(Label l) {
  return l == Label::EAbs || l == Label::EVar || l == Label::EU1 || l == Label::EU2 ||
         l == Label::EPlus;
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Useful: return "useful";
    case Verdict::Nonuseful: return "nonuseful";
    case Verdict::Unclassified: return "unclassified";
  }
  return "?";
}

Path Redex::focus() const {
  if (occurrence) return concat(anchor, *occurrence);
  return anchor;
}

bool path_before(PathView a, PathView b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool redex_before(const Redex& a, const Redex& b) {
  Path fa = a.focus(), fb = b.focus();
  if (fa != fb) return path_before(fa, fb);
  if (a.label != b.label) return a.label < b.label;
  return path_before(a.anchor, b.anchor);
}

}  // namespace poslam
