#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace poslam {

using Name = std::string;
using NameSet = std::set<Name>;

enum class Kind : std::uint8_t { Var, Abs, App, Es };

struct TermNode;

// Immutable term of the value substitution calculus. The positive and
// explicit positive calculi are sub-grammars of the same type.
//
//   Var(x)            x
//   Abs(x, t)         \x. t
//   App(t, u)         t u
//   Es(t, x, u)       t[x <- u]      (x is bound in t only)
//
// Copies share structure; a Term is never mutated after construction.
class Term {
 public:
  // Empty handle; must be assigned before use.
  Term() = default;

  static Term var(Name name);
  static Term abs(Name binder, Term body);
  static Term app(Term fun, Term arg);
  static Term es(Term body, Name binder, Term content);

  inline Kind kind() const;
  bool is_var() const { return kind() == Kind::Var; }
  bool is_abs() const { return kind() == Kind::Abs; }
  bool is_app() const { return kind() == Kind::App; }
  bool is_es() const { return kind() == Kind::Es; }
  bool is_value() const { return is_var() || is_abs(); }

  // Variable name for Var, binder for Abs and Es.
  inline const Name& name() const;
  // Abs and Es body.
  inline const Term& body() const;
  inline const Term& fun() const;
  inline const Term& arg() const;
  inline const Term& content() const;

  inline std::size_t size() const;

  // Physical identity; cheaper than alpha_eq when a rewrite left a subterm
  // untouched.
  bool identical(const Term& other) const { return node_ == other.node_; }

 private:
  explicit Term(std::shared_ptr<const TermNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const TermNode> node_;
};

struct TermNode {
  Kind kind;
  Name name;
  Term first;   // Abs/Es body, App fun
  Term second;  // App arg, Es content
  std::size_t size;
};

Kind Term::kind() const { return node_->kind; }
const Name& Term::name() const { return node_->name; }
const Term& Term::body() const { return node_->first; }
const Term& Term::fun() const { return node_->first; }
const Term& Term::arg() const { return node_->second; }
const Term& Term::content() const { return node_->second; }
std::size_t Term::size() const { return node_->size; }

// One move from a node to one of its children.
enum class Step : std::uint8_t { AbsBody, AppFun, AppArg, EsBody, EsContent };

using Path = std::vector<Step>;
using PathView = std::span<const Step>;

std::string_view step_name(Step step);
// "" for the root, otherwise step names joined by '.'.
std::string path_to_string(PathView path);
Path path_from_string(std::string_view text);

bool is_valid_path(const Term& t, PathView path);
// A path that never enters an abstraction body (a hole of an open context).
bool is_open_path(PathView path);
const Term& subterm_at(const Term& t, PathView path);
// Plugs `replacement` at `path` without any renaming (may capture).
Term replace_at(const Term& t, PathView path, Term replacement);
Path concat(PathView a, PathView b);

// ES frame of a substitution / evaluation context.
struct EsFrame {
  Name binder;
  Term content;
};

// A list of explicit substitutions around a hole: the L of the value
// substitution calculus and the E of the positive calculi. Frames are stored
// innermost first, so plug(ctx, t) = t[f0][f1]...[fn].
struct SubstCtx {
  std::vector<EsFrame> frames;

  bool empty() const { return frames.empty(); }
  bool binds(const Name& x) const;
};

// Peels the ES spine: t = plug(ctx, head) with head not an ES.
struct Spine {
  SubstCtx ctx;
  Term head;
};

Spine split_spine(const Term& t);
Term plug(const SubstCtx& ctx, Term t);

// Finite variable-to-variable map. Normalized: no identity entries and no
// uncollapsed chains once built through then().
class Renaming {
 public:
  Renaming() = default;

  bool empty() const { return map_.empty(); }
  const std::map<Name, Name>& entries() const { return map_; }
  Name operator()(const Name& x) const;
  // Sequential composition: (t this) {x <- y}.
  Renaming then(const Name& x, const Name& y) const;
  bool operator==(const Renaming&) const = default;

 private:
  std::map<Name, Name> map_;
};

// Deterministic fresh-name generator. Never returns a name that occurs in a
// reserved term or was returned before. Candidates are stem+k where stem is
// the requested base without trailing digits and k counts up from the seed.
class NameSupply {
 public:
  explicit NameSupply(unsigned seed = 1) : seed_(seed) {}
  explicit NameSupply(const Term& t, unsigned seed = 1);

  void reserve(const Term& t);
  void reserve(const Name& name) { used_.insert(name); }
  bool used(const Name& name) const { return used_.count(name) != 0; }
  Name fresh(std::string_view base);

 private:
  unsigned seed_;
  std::unordered_set<Name> used_;
  std::unordered_map<std::string, unsigned> next_;
};

}  // namespace poslam
