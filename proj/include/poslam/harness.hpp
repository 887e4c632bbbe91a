#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "poslam/engine.hpp"
#include "poslam/redex.hpp"
#include "poslam/term.hpp"

namespace poslam {

struct TraceStep {
  Redex redex;
  Term term;  // the reduct
};

// A reduction sequence with per-label step counters.
struct Trace {
  Relation relation;
  Term start;
  std::vector<TraceStep> steps;
  Counters counters;
  bool normal = false;
  bool fuel_exhausted = false;

  explicit Trace(Relation rel, Term s) : relation(rel), start(std::move(s)) {}

  const Term& end() const { return steps.empty() ? start : steps.back().term; }
  const Term& before(std::size_t i) const { return i == 0 ? start : steps[i - 1].term; }
  std::size_t size() const { return steps.size(); }
  std::size_t count(Label l) const;
  std::size_t count_multiplicative() const;
  std::size_t count_exponential() const;
  std::size_t count_gc() const;
  void push(Redex r, Term t);
  void recount();
};

// Replays every step and recounts labels. Returns a description of the
// first problem, or nothing when the trace is valid.
std::optional<std::string> validate_trace(const Trace& d);

struct Strategy {
  enum class Kind { Lo, Random, Priority } kind = Kind::Lo;
  std::uint64_t seed = 0;
  std::vector<Label> priority;  // earlier labels first; unlisted labels last

  static Strategy lo() { return {}; }
  static Strategy random(std::uint64_t seed) { return {Kind::Random, seed, {}}; }
  static Strategy by_priority(std::vector<Label> order) {
    return {Kind::Priority, 0, std::move(order)};
  }
};

// Reduces until normal or `fuel` steps were taken.
Trace run_strategy(const Term& t, const Relation& rel, const Strategy& strategy,
                   std::size_t fuel);

// Gc postponement by local swaps. Returns (e, f): e has no gc step, f only gc
// steps, e.end() == f.start and f.end() is alpha-equal to d.end().
std::pair<Trace, Trace> postpone_gc(const Trace& d);

// Step classes of a gc-free VSC trace.
enum class CoreKind { M, Useful, EVar, Nonuseful, Other };
CoreKind core_kind(const Term& source, const Redex& r);

// Moves every non-useful exponential step after all core steps (m, useful
// e_abs, e_var), by the local diagrams:
//   nu;m -> m;nu    nu;u -> u;nu | e_var;u;nu    nu;e_var -> e_var;nu
// Requires a gc-free VSC trace.
Trace factorize_core(const Trace& d);

// Simulates a core VSC trace in the explicit positive calculus starting from
// translate(d.start): e_var steps map to nothing, useful steps to one e_plus,
// m steps to m_plus, or to m_plus;e_plus;gc_plus when the reduct is an answer
// in a useful position.
Trace simulate_core(const Trace& d);

enum class OmegaVariant { VarsAsValues, NoVarValues, Oxpos };
std::optional<OmegaVariant> omega_variant_from_name(std::string_view name);
std::string_view omega_variant_name(OmegaVariant v);

struct OmegaCounts {
  std::size_t m_steps = 0;    // m (or m_plus) steps taken
  std::size_t e_steps = 0;    // exponential steps before the last m step
  std::size_t gc_steps = 0;
  std::size_t total_steps = 0;
};

// Leftmost-outermost reduction of the looping combinator until the n-th
// multiplicative step.
OmegaCounts bench_omega(std::size_t n_m_steps, OmegaVariant variant);

Term omega();

}  // namespace poslam
