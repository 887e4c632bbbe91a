#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "poslam/term.hpp"

namespace poslam {

enum class Grammar { Vsc, ClosedVsc, Positive, XPositive };

// Calls `sink` once per alpha-distinct term of the grammar with 1..max_size
// nodes, in order of size. Terms are also distinct up to renaming of free
// variables. Binders are named by depth (a, b, c, ...); free variables by
// first occurrence (x, y, z, ...). Stops early when `sink` returns false.
void enumerate_terms(Grammar g, std::size_t max_size,
                     const std::function<bool(const Term&)>& sink);
std::vector<Term> enumerate_terms(Grammar g, std::size_t max_size);

// Deterministic 64-bit generator with a portable bounded draw (the standard
// distributions are not specified bit-for-bit).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  // Uniform in [0, n).
  std::size_t below(std::size_t n);
  bool chance(unsigned percent) { return below(100) < percent; }

 private:
  std::mt19937_64 engine_;
};

// One random term with between 1 and max_size nodes.
Term random_term(Grammar g, std::size_t max_size, Rng& rng);
std::vector<Term> random_terms(Grammar g, std::uint64_t seed, std::size_t max_size,
                               std::size_t count);

std::optional<Grammar> grammar_from_name(std::string_view name);

}  // namespace poslam
