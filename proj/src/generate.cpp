#include "poslam/generate.hpp"

#include <string>

#include "poslam/error.hpp"

namespace poslam {

namespace {

Name binder_name(std::size_t depth) {
  static const char* kNames[] = {"a", "b", "c", "d", "e", "f", "g", "h"};
  if (depth < 8) return kNames[depth];
  return "b" + std::to_string(depth);
}

Name free_name(std::size_t index) {
  static const char* kNames[] = {"x", "y", "z", "w", "u", "v", "s", "r"};
  if (index < 8) return kNames[index];
  return "x" + std::to_string(index);
}

// Continuation-passing enumerator. `depth` binders are in scope (names
// binder_name(0..depth-1)), `nfree` free variables have been used so far,
// and the continuation receives the built term and the new free count.
using Cont = std::function<bool(const Term&, std::size_t)>;

class Enumerator {
 public:
  explicit Enumerator(Grammar g) : g_(g) {}

  // Terms of exactly n nodes.
  bool term(std::size_t n, std::size_t depth, std::size_t nfree, const Cont& k) {
    switch (g_) {
      case Grammar::Vsc:
      case Grammar::ClosedVsc: return vsc(n, depth, nfree, k);
      case Grammar::Positive:
      case Grammar::XPositive: return positive(n, depth, nfree, k);
    }
    return true;
  }

 private:
  bool variable(std::size_t depth, std::size_t nfree, const Cont& k) {
    for (std::size_t i = depth; i-- > 0;)
      if (!k(Term::var(binder_name(i)), nfree)) return false;
    if (g_ == Grammar::ClosedVsc) return true;
    for (std::size_t i = 0; i <= nfree; ++i)
      if (!k(Term::var(free_name(i)), std::max(nfree, i + 1))) return false;
    return true;
  }

  bool vsc(std::size_t n, std::size_t depth, std::size_t nfree, const Cont& k) {
    if (n == 1) return variable(depth, nfree, k);
    // \a. t
    if (!vsc(n - 1, depth + 1, nfree, [&](const Term& b, std::size_t f) {
          return k(Term::abs(binder_name(depth), b), f);
        }))
      return false;
    for (std::size_t left = 1; left + 2 <= n; ++left) {
      std::size_t right = n - 1 - left;
      // t u
      if (!vsc(left, depth, nfree, [&](const Term& t, std::size_t f1) {
            return vsc(right, depth, f1, [&](const Term& u, std::size_t f2) {
              return k(Term::app(t, u), f2);
            });
          }))
        return false;
      // t[a <- u]; the body is printed first, so it picks free names first
      if (!vsc(left, depth + 1, nfree, [&](const Term& t, std::size_t f1) {
            return vsc(right, depth, f1, [&](const Term& u, std::size_t f2) {
              return k(Term::es(t, binder_name(depth), u), f2);
            });
          }))
        return false;
    }
    return true;
  }

  // t ::= x | t[a <- y z] | t[a <- \b.u] | t[a <- (\b.u) z]
  bool positive(std::size_t n, std::size_t depth, std::size_t nfree, const Cont& k) {
    if (n == 1) return variable(depth, nfree, k);
    const Name a = binder_name(depth);
    // t[a <- y z]: 1 + |t| + 3
    if (n >= 5) {
      if (!positive(n - 4, depth + 1, nfree, [&](const Term& t, std::size_t f1) {
            return variable(depth, f1, [&](const Term& y, std::size_t f2) {
              return variable(depth, f2, [&](const Term& z, std::size_t f3) {
                return k(Term::es(t, a, Term::app(y, z)), f3);
              });
            });
          }))
        return false;
    }
    // t[a <- \b.u]: 1 + |t| + 1 + |u|
    for (std::size_t left = 1; left + 3 <= n; ++left) {
      std::size_t right = n - 2 - left;
      if (!positive(left, depth + 1, nfree, [&](const Term& t, std::size_t f1) {
            return positive(right, depth + 1, f1, [&](const Term& u, std::size_t f2) {
              return k(Term::es(t, a, Term::abs(binder_name(depth), u)), f2);
            });
          }))
        return false;
    }
    if (g_ != Grammar::XPositive) return true;
    // t[a <- (\b.u) z]: 1 + |t| + 3 + |u|
    for (std::size_t left = 1; left + 5 <= n; ++left) {
      std::size_t right = n - 4 - left;
      if (!positive(left, depth + 1, nfree, [&](const Term& t, std::size_t f1) {
            return positive(right, depth + 1, f1, [&](const Term& u, std::size_t f2) {
              return variable(depth, f2, [&](const Term& z, std::size_t f3) {
                Term lam = Term::abs(binder_name(depth), u);
                return k(Term::es(t, a, Term::app(lam, z)), f3);
              });
            });
          }))
        return false;
    }
    return true;
  }

  Grammar g_;
};

}  // namespace

void enumerate_terms(Grammar g, std::size_t max_size,
                     const std::function<bool(const Term&)>& sink) {
  Enumerator e(g);
  for (std::size_t n = 1; n <= max_size; ++n)
    if (!e.term(n, 0, 0, [&](const Term& t, std::size_t) { return sink(t); })) return;
}

std::vector<Term> enumerate_terms(Grammar g, std::size_t max_size) {
  std::vector<Term> out;
  enumerate_terms(g, max_size, [&](const Term& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

std::size_t Rng::below(std::size_t n) {
  if (n <= 1) return 0;
  // Rejection sampling keeps the draw unbiased and platform independent.
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t v;
  do v = engine_(); while (v >= limit);
  return static_cast<std::size_t>(v % n);
}

namespace {

class RandomBuilder {
 public:
  RandomBuilder(Grammar g, Rng& rng) : g_(g), rng_(rng) {}

  Term build(std::size_t budget) {
    std::size_t n = 1 + rng_.below(budget);
    return g_ == Grammar::Vsc || g_ == Grammar::ClosedVsc ? vsc(n, 0) : positive(n, 0);
  }

 private:
  Term variable(std::size_t depth) {
    bool closed = g_ == Grammar::ClosedVsc;
    if (depth > 0 && (closed || rng_.chance(80)))
      return Term::var(binder_name(depth - 1 - rng_.below(std::min<std::size_t>(depth, 3))));
    if (closed) return Term::var("x");
    return Term::var(free_name(rng_.below(3)));
  }

  // Exactly n nodes when n allows it.
  Term vsc(std::size_t n, std::size_t depth) {
    if (n == 1) return variable(depth);
    if (n == 2) return Term::abs(binder_name(depth), variable(depth + 1));
    std::size_t choice = rng_.below(10);
    if (choice < 3) return Term::abs(binder_name(depth), vsc(n - 1, depth + 1));
    std::size_t left = 1 + rng_.below(n - 2);
    std::size_t right = n - 1 - left;
    if (choice < 7) return Term::app(vsc(left, depth), vsc(right, depth));
    return Term::es(vsc(left, depth + 1), binder_name(depth), vsc(right, depth));
  }

  Term positive(std::size_t n, std::size_t depth) {
    if (n < 4) return variable(depth);
    const Name a = binder_name(depth);
    std::vector<int> options{1};
    if (n >= 5) options.push_back(0);
    if (g_ == Grammar::XPositive && n >= 7) options.push_back(2);
    switch (options[rng_.below(options.size())]) {
      case 0: {
        Term body = positive(n - 4, depth + 1);
        Term y = variable(depth);
        Term z = variable(depth);
        return Term::es(body, a, Term::app(y, z));
      }
      case 1: {
        std::size_t left = 1 + rng_.below(n - 3);
        Term body = positive(left, depth + 1);
        Term u = positive(n - 2 - left, depth + 1);
        return Term::es(body, a, Term::abs(a, u));
      }
      default: {
        std::size_t left = 1 + rng_.below(n - 6);
        Term body = positive(left, depth + 1);
        Term u = positive(n - 4 - left, depth + 1);
        Term z = variable(depth);
        return Term::es(body, a, Term::app(Term::abs(a, u), z));
      }
    }
  }

  Grammar g_;
  Rng& rng_;
};

}  // namespace

Term random_term(Grammar g, std::size_t max_size, Rng& rng) {
  if (max_size == 0) throw PreconditionError("random_term: size must be positive");
  return RandomBuilder(g, rng).build(max_size);
}

std::vector<Term> random_terms(Grammar g, std::uint64_t seed, std::size_t max_size,
                               std::size_t count) {
  Rng rng(seed);
  std::vector<Term> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_term(g, max_size, rng));
  return out;
}

std::optional<Grammar> grammar_from_name(std::string_view name) {
  if (name == "vsc") return Grammar::Vsc;
  if (name == "closed-vsc") return Grammar::ClosedVsc;
  if (name == "positive") return Grammar::Positive;
  if (name == "xpositive") return Grammar::XPositive;
  return std::nullopt;
}

}  // namespace poslam
