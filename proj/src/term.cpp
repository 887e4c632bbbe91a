#include "poslam/term.hpp"

#include <cctype>
#include <utility>

#include "poslam/error.hpp"

namespace poslam {

Term Term::var(Name name) {
  return Term(std::make_shared<const TermNode>(
      TermNode{Kind::Var, std::move(name), Term(), Term(), 1}));
}

Term Term::abs(Name binder, Term body) {
  std::size_t size = 1 + body.size();
  return Term(std::make_shared<const TermNode>(
      TermNode{Kind::Abs, std::move(binder), std::move(body), Term(), size}));
}

Term Term::app(Term fun, Term arg) {
  std::size_t size = 1 + fun.size() + arg.size();
  return Term(std::make_shared<const TermNode>(
      TermNode{Kind::App, Name(), std::move(fun), std::move(arg), size}));
}

Term Term::es(Term body, Name binder, Term content) {
  std::size_t size = 1 + body.size() + content.size();
  return Term(std::make_shared<const TermNode>(TermNode{
      Kind::Es, std::move(binder), std::move(body), std::move(content), size}));
}

std::string_view step_name(Step step) {
  switch (step) {
    case Step::AbsBody: return "abs-body";
    case Step::AppFun: return "app-fun";
    case Step::AppArg: return "app-arg";
    case Step::EsBody: return "es-body";
    case Step::EsContent: return "es-content";
  }
  return "?";
}

std::string path_to_string(PathView path) {
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out += '.';
    out += step_name(path[i]);
  }
  return out;
}

Path path_from_string(std::string_view text) {
  Path path;
  if (text.empty()) return path;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t dot = text.find('.', start);
    if (dot == std::string_view::npos) dot = text.size();
    std::string_view part = text.substr(start, dot - start);
    bool found = false;
    for (Step s : {Step::AbsBody, Step::AppFun, Step::AppArg, Step::EsBody,
                   Step::EsContent}) {
      if (step_name(s) == part) {
        path.push_back(s);
        found = true;
        break;
      }
    }
    if (!found) throw PreconditionError("unknown path step '" + std::string(part) + "'");
    start = dot + 1;
  }
  return path;
}

namespace {

const Term* child(const Term& t, Step step) {
  switch (step) {
    case Step::AbsBody: return t.is_abs() ? &t.body() : nullptr;
    case Step::AppFun: return t.is_app() ? &t.fun() : nullptr;
    case Step::AppArg: return t.is_app() ? &t.arg() : nullptr;
    case Step::EsBody: return t.is_es() ? &t.body() : nullptr;
    case Step::EsContent: return t.is_es() ? &t.content() : nullptr;
  }
  return nullptr;
}

}  // namespace

bool is_valid_path(const Term& t, PathView path) {
  const Term* cur = &t;
  for (Step s : path) {
    cur = child(*cur, s);
    if (!cur) return false;
  }
  return true;
}

bool is_open_path(PathView path) {
  for (Step s : path)
    if (s == Step::AbsBody) return false;
  return true;
}

const Term& subterm_at(const Term& t, PathView path) {
  const Term* cur = &t;
  for (Step s : path) {
    cur = child(*cur, s);
    if (!cur) throw PreconditionError("invalid path " + path_to_string(path));
  }
  return *cur;
}

Term replace_at(const Term& t, PathView path, Term replacement) {
  if (path.empty()) return replacement;
  Step s = path.front();
  PathView rest = path.subspan(1);
  const Term* c = child(t, s);
  if (!c) throw PreconditionError("invalid path step " + std::string(step_name(s)));
  Term sub = replace_at(*c, rest, std::move(replacement));
  switch (s) {
    case Step::AbsBody: return Term::abs(t.name(), std::move(sub));
    case Step::AppFun: return Term::app(std::move(sub), t.arg());
    case Step::AppArg: return Term::app(t.fun(), std::move(sub));
    case Step::EsBody: return Term::es(std::move(sub), t.name(), t.content());
    case Step::EsContent: return Term::es(t.body(), t.name(), std::move(sub));
  }
  return t;
}

Path concat(PathView a, PathView b) {
  Path out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

bool SubstCtx::binds(const Name& x) const {
  for (const auto& f : frames)
    if (f.binder == x) return true;
  return false;
}

Spine split_spine(const Term& t) {
  std::vector<EsFrame> outer_first;
  const Term* cur = &t;
  while (cur->is_es()) {
    outer_first.push_back({cur->name(), cur->content()});
    cur = &cur->body();
  }
  Spine s;
  s.ctx.frames.assign(outer_first.rbegin(), outer_first.rend());
  s.head = *cur;
  return s;
}

Term plug(const SubstCtx& ctx, Term t) {
  for (const auto& f : ctx.frames) t = Term::es(std::move(t), f.binder, f.content);
  return t;
}

Name Renaming::operator()(const Name& x) const {
  auto it = map_.find(x);
  return it == map_.end() ? x : it->second;
}

Renaming Renaming::then(const Name& x, const Name& y) const {
  Renaming out;
  for (const auto& [k, v] : map_) {
    Name target = v == x ? y : v;
    if (k != target) out.map_[k] = target;
  }
  if (!map_.count(x) && x != y) out.map_[x] = y;
  return out;
}

namespace {

void collect_names(const Term& t, std::unordered_set<Name>& out) {
  out.insert(t.name());
  switch (t.kind()) {
    case Kind::Var: break;
    case Kind::Abs: collect_names(t.body(), out); break;
    case Kind::App:
      collect_names(t.fun(), out);
      collect_names(t.arg(), out);
      break;
    case Kind::Es:
      collect_names(t.body(), out);
      collect_names(t.content(), out);
      break;
  }
}

}  // namespace

NameSupply::NameSupply(const Term& t, unsigned seed) : seed_(seed) { reserve(t); }

void NameSupply::reserve(const Term& t) {
  collect_names(t, used_);
  used_.erase(Name());
}

Name NameSupply::fresh(std::string_view base) {
  std::string stem(base);
  while (!stem.empty() && std::isdigit(static_cast<unsigned char>(stem.back())))
    stem.pop_back();
  while (!stem.empty() && stem.back() == '\'') stem.pop_back();
  if (stem.empty()) stem = "v";
  auto [it, inserted] = next_.try_emplace(stem, seed_);
  for (;;) {
    Name candidate = stem + std::to_string(it->second++);
    if (used_.insert(candidate).second) return candidate;
  }
}

}  // namespace poslam
