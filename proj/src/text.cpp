#include "poslam/text.hpp"

#include <cctype>
#include <optional>
#include <vector>

#include "poslam/error.hpp"

namespace poslam {

namespace {

enum class Tok { Ident, Lambda, Dot, LParen, RParen, LBracket, RBracket, Arrow, End };

std::string tok_text(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Lambda: return "'\\'";
    case Tok::Dot: return "'.'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::Arrow: return "'<-'";
    case Tok::End: return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '\'';
}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    std::size_t l = line, cl = col;
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < src.size() && ident_char(src[j])) ++j;
      out.push_back({Tok::Ident, std::string(src.substr(i, j - i)), l, cl});
      advance(j - i);
      continue;
    }
    Tok kind;
    std::size_t width = 1;
    switch (c) {
      case '\\': kind = Tok::Lambda; break;
      case '.': kind = Tok::Dot; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case '[': kind = Tok::LBracket; break;
      case ']': kind = Tok::RBracket; break;
      case '<':
        if (i + 1 < src.size() && src[i + 1] == '-') {
          kind = Tok::Arrow;
          width = 2;
          break;
        }
        [[fallthrough]];
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", l, cl,
                         {"identifier", "'\\'", "'('"});
    }
    out.push_back({kind, std::string(src.substr(i, width)), l, cl});
    advance(width);
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Term parse() {
    Term t = term();
    expect(Tok::End, {"end of input", "'['", "identifier", "'('", "'\\'"});
    return t;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }

  [[noreturn]] void fail(std::vector<std::string> expected) {
    const Token& t = peek();
    std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw ParseError("unexpected " + found, t.line, t.column, std::move(expected));
  }

  Token expect(Tok kind, std::vector<std::string> expected = {}) {
    if (peek().kind != kind) {
      if (expected.empty()) expected = {tok_text(kind)};
      fail(std::move(expected));
    }
    return toks_[pos_++];
  }

  bool starts_atom() const {
    Tok k = peek().kind;
    return k == Tok::Ident || k == Tok::LParen;
  }

  Term term() {
    if (peek().kind == Tok::Lambda) return lambda();
    if (!starts_atom()) fail({"identifier", "'('", "'\\'"});
    return app();
  }

  Term lambda() {
    expect(Tok::Lambda);
    Token x = expect(Tok::Ident);
    expect(Tok::Dot);
    return Term::abs(x.text, term());
  }

  Term app() {
    Term t = postfix();
    for (;;) {
      if (starts_atom()) {
        t = Term::app(std::move(t), postfix());
      } else if (peek().kind == Tok::Lambda) {
        return Term::app(std::move(t), lambda());
      } else {
        return t;
      }
    }
  }

  Term postfix() {
    Term t = atom();
    while (peek().kind == Tok::LBracket) {
      ++pos_;
      Token x = expect(Tok::Ident);
      expect(Tok::Arrow);
      Term u = term();
      expect(Tok::RBracket, {"']'", "'['", "identifier", "'('", "'\\'"});
      t = Term::es(std::move(t), x.text, std::move(u));
    }
    return t;
  }

  Term atom() {
    if (peek().kind == Tok::Ident) return Term::var(toks_[pos_++].text);
    if (peek().kind == Tok::LParen) {
      ++pos_;
      Term t = term();
      expect(Tok::RParen, {"')'", "'['", "identifier", "'('", "'\\'"});
      return t;
    }
    fail({"identifier", "'('"});
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

void print_rec(const Term& t, std::string& out);

// ES bodies and application heads must be atoms or postfix chains.
void print_postfix_operand(const Term& t, std::string& out) {
  if (t.is_var() || t.is_es()) {
    print_rec(t, out);
  } else {
    out += '(';
    print_rec(t, out);
    out += ')';
  }
}

void print_rec(const Term& t, std::string& out) {
  switch (t.kind()) {
    case Kind::Var: out += t.name(); return;
    case Kind::Abs:
      out += '\\';
      out += t.name();
      out += ". ";
      print_rec(t.body(), out);
      return;
    case Kind::App:
      if (t.fun().is_abs()) {
        out += '(';
        print_rec(t.fun(), out);
        out += ')';
      } else {
        print_rec(t.fun(), out);
      }
      out += ' ';
      print_postfix_operand(t.arg(), out);
      return;
    case Kind::Es:
      print_postfix_operand(t.body(), out);
      out += '[';
      out += t.name();
      out += " <- ";
      print_rec(t.content(), out);
      out += ']';
      return;
  }
}

}  // namespace

Term parse_term(std::string_view text) { return Parser(lex(text)).parse(); }

std::string print_term(const Term& t) {
  std::string out;
  print_rec(t, out);
  return out;
}

}  // namespace poslam
