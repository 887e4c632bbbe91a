#include "poslam/translate.hpp"

#include "poslam/error.hpp"
#include "poslam/syntax.hpp"

namespace poslam {

namespace {

// E<x>
struct Crumb {
  SubstCtx ctx;
  Name head;
};

class Translator {
 public:
  explicit Translator(NameSupply& supply) : supply_(supply) {}

  Crumb term(const Term& t) {
    switch (t.kind()) {
      case Kind::Var: return {{}, t.name()};
      case Kind::Abs: {
        Name y = supply_.fresh("y");
        Term body = close(term(t.body()));
        return {{{{y, Term::abs(t.name(), body)}}}, y};
      }
      case Kind::Es: {
        Crumb content = term(t.content());
        adopt(content, t.name());
        Crumb body = term(t.body());
        rename_crumb(body, t.name(), content.head);
        append(body.ctx, content.ctx);
        return body;
      }
      case Kind::App: {
        if (is_answer(t.fun())) {
          Spine sp = split_spine(t.fun());
          CtxTranslation l = ctx(sp.ctx);
          Term inner = rename(close(term(sp.head.body())), l.renaming, supply_);
          Crumb arg = term(t.arg());
          Name y = supply_.fresh("y");
          Term redex = Term::app(Term::abs(sp.head.name(), inner), Term::var(arg.head));
          Crumb out{{{{y, redex}}}, y};
          append(out.ctx, arg.ctx);
          append(out.ctx, l.ctx);
          return out;
        }
        Crumb fun = term(t.fun());
        Crumb arg = term(t.arg());
        Name y = supply_.fresh("y");
        Crumb out{{{{y, Term::app(Term::var(fun.head), Term::var(arg.head))}}}, y};
        append(out.ctx, arg.ctx);
        append(out.ctx, fun.ctx);
        return out;
      }
    }
    throw HarnessError("translate: unreachable");
  }

  // Frames are processed innermost first.
  CtxTranslation ctx(const SubstCtx& l) {
    CtxTranslation out;
    for (const auto& f : l.frames) {
      Crumb content = term(f.content);
      adopt(content, f.binder);
      if (content.head != f.binder) {
        for (auto& g : out.ctx.frames) g.content = rename(g.content, f.binder, content.head, supply_);
        out.renaming = out.renaming.then(f.binder, content.head);
      }
      append(out.ctx, content.ctx);
    }
    return out;
  }

  static Term close(const Crumb& c) { return plug(c.ctx, Term::var(c.head)); }

 private:
  static void append(SubstCtx& inner, const SubstCtx& outer) {
    inner.frames.insert(inner.frames.end(), outer.frames.begin(), outer.frames.end());
  }

  // If the head is bound by the crumb's own context, renames that binder to
  // x, so that E<y>{...}{x<-y} needs no renaming at all. Binders are unique,
  // hence x occurs nowhere in the crumb and this is an alpha-conversion.
  void adopt(Crumb& c, const Name& x) {
    for (std::size_t i = 0; i < c.ctx.frames.size(); ++i) {
      if (c.ctx.frames[i].binder != c.head) continue;
      Name old = c.head;
      c.ctx.frames[i].binder = x;
      for (std::size_t j = 0; j < i; ++j)
        c.ctx.frames[j].content = rename(c.ctx.frames[j].content, old, x, supply_);
      c.head = x;
      return;
    }
  }

  // E<h>{x<-y}, respecting shadowing by the frames.
  void rename_crumb(Crumb& c, const Name& x, const Name& y) {
    if (x == y) return;
    for (std::size_t i = c.ctx.frames.size(); i-- > 0;) {
      auto& f = c.ctx.frames[i];
      f.content = rename(f.content, x, y, supply_);
      if (f.binder == y) throw HarnessError("translate: renaming captured by a frame");
      if (f.binder == x) return;
    }
    if (c.head == x) c.head = y;
  }

  NameSupply& supply_;
};

}  // namespace

Term translate(const Term& t, NameSupply& supply) {
  supply.reserve(t);
  Term clean = uniquify_binders(t, supply);
  Translator tr(supply);
  return Translator::close(tr.term(clean));
}

Term translate(const Term& t) {
  NameSupply supply(t);
  return translate(t, supply);
}

CtxTranslation translate_subst_ctx(const SubstCtx& l, NameSupply& supply) {
  Term probe = plug(l, Term::var(supply.fresh("hole")));
  if (!is_barendregt(probe))
    throw PreconditionError("translate_subst_ctx: binders must be pairwise distinct and not free");
  supply.reserve(probe);
  Translator tr(supply);
  return tr.ctx(l);
}

CtxTranslation translate_subst_ctx(const SubstCtx& l) {
  NameSupply supply;
  for (const auto& f : l.frames) {
    supply.reserve(f.binder);
    supply.reserve(f.content);
  }
  return translate_subst_ctx(l, supply);
}

}  // namespace poslam
