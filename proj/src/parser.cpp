// Copyright 2026 The holim Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "holim/parser.hpp"

#include <fmt/format.h>

#include <array>
#include <cctype>
#include <charconv>
#include <limits>
#include <utility>

namespace holim {

namespace {

constexpr std::array<std::string_view, 8> kReserved = {
    "def", "axiom", "fun", "Pi", "Sigma", "let", "in", "Type"};

bool is_keyword(std::string_view word) {
  for (std::string_view k : kReserved) {
    if (k == word) return true;
  }
  return prim_from_keyword(word).has_value();
}

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_';
}

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' ||
         c == '\'';
}

class Lexer {
 public:
  Lexer(std::string_view src, const std::string &file)
      : src_(src), file_(file) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_blank();
      if (pos_ >= src_.size()) break;
      out.push_back(next());
    }
    SourceSpan end{file_, line_, col_, line_, col_};
    out.push_back(Token{TokenKind::kEnd, "", end});
    return out;
  }

 private:
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  bool starts_with(std::string_view s) const {
    return src_.substr(pos_, s.size()) == s;
  }

  void skip_blank() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        advance();
      } else if (starts_with("--")) {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  Token next() {
    int line = line_, col = col_;
    std::size_t start = pos_;
    auto finish = [&](TokenKind kind) {
      std::string lexeme(src_.substr(start, pos_ - start));
      return Token{kind, std::move(lexeme),
                   SourceSpan{file_, line, col, line_, col_}};
    };
    char c = src_[pos_];
    if (ident_start(c)) {
      while (pos_ < src_.size() && ident_char(src_[pos_])) advance();
      std::string_view word = src_.substr(start, pos_ - start);
      if (word == "_") return finish(TokenKind::kSymbol);
      return finish(is_keyword(word) ? TokenKind::kKeyword
                                     : TokenKind::kIdentifier);
    }
    if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
      while (pos_ < src_.size() &&
             std::isdigit(static_cast<unsigned char>(src_[pos_])) != 0) {
        advance();
      }
      Token t = finish(TokenKind::kNatural);
      std::uint32_t value = 0;
      auto [ptr, ec] = std::from_chars(t.lexeme.data(),
                                       t.lexeme.data() + t.lexeme.size(), value);
      if (ec != std::errc() || ptr != t.lexeme.data() + t.lexeme.size()) {
        throw Error(ErrorCode::kLex, "numeral '" + t.lexeme + "' is too large",
                    t.span);
      }
      return t;
    }
    for (std::string_view sym : {":=", "=>", "->"}) {
      if (starts_with(sym)) {
        advance();
        advance();
        return finish(TokenKind::kSymbol);
      }
    }
    if (std::string_view("(){}:*,@").find(c) != std::string_view::npos) {
      advance();
      return finish(TokenKind::kSymbol);
    }
    SourceSpan here{file_, line, col, line, col + 1};
    auto byte = static_cast<unsigned char>(c);
    if (byte >= 0x80) {
      // Report the whole UTF-8 sequence.
      std::size_t len = 1;
      while (start + len < src_.size() &&
             (static_cast<unsigned char>(src_[start + len]) & 0xC0) == 0x80) {
        ++len;
      }
      throw Error(ErrorCode::kLex,
                  fmt::format("unexpected character '{}'", src_.substr(start, len)),
                  here);
    }
    throw Error(ErrorCode::kLex,
                std::isprint(byte) != 0
                    ? fmt::format("unexpected character '{}'", c)
                    : fmt::format("unexpected byte 0x{:02x}", byte),
                here);
  }

  std::string_view src_;
  const std::string &file_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

std::string describe(const Token &t) {
  switch (t.kind) {
    case TokenKind::kEnd:
      return "end of input";
    case TokenKind::kIdentifier:
      return "identifier '" + t.lexeme + "'";
    default:
      return "'" + t.lexeme + "'";
  }
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  std::vector<SurfaceDecl> file() {
    std::vector<SurfaceDecl> out;
    while (peek().kind != TokenKind::kEnd) out.push_back(decl());
    return out;
  }

  SurfaceTerm whole_term() {
    SurfaceTerm t = term();
    if (peek().kind != TokenKind::kEnd) fail({"end of input"});
    return t;
  }

 private:
  const Token &peek() const { return toks_[pos_]; }

  const Token &take() {
    const Token &t = toks_[pos_];
    last_ = t.span;
    if (t.kind != TokenKind::kEnd) ++pos_;
    return t;
  }

  bool at_sym(std::string_view s) const {
    return peek().is(TokenKind::kSymbol, s);
  }
  bool at_kw(std::string_view s) const {
    return peek().is(TokenKind::kKeyword, s);
  }

  bool accept_sym(std::string_view s) {
    if (!at_sym(s)) return false;
    take();
    return true;
  }

  [[noreturn]] void fail(std::initializer_list<std::string_view> expected) const {
    std::string list;
    for (std::string_view e : expected) {
      if (!list.empty()) list += ", ";
      list += e;
    }
    throw Error(ErrorCode::kParse,
                fmt::format("expected {}; found {}", list, describe(peek())),
                peek().span);
  }

  void expect_sym(std::string_view s) {
    if (!accept_sym(s)) {
      std::string quoted = "'" + std::string(s) + "'";
      fail({quoted});
    }
  }

  SourceSpan from(const SourceSpan &start) const { return cover(start, last_); }

  std::string ident() {
    if (peek().kind != TokenKind::kIdentifier) fail({"identifier"});
    return take().lexeme;
  }

  // A binder name: identifier or `_`.
  std::string binder_name() {
    if (accept_sym("_")) return "_";
    return ident();
  }

  std::vector<std::string> binder_names() {
    std::vector<std::string> names;
    do {
      names.push_back(binder_name());
    } while (peek().kind == TokenKind::kIdentifier || at_sym("_"));
    return names;
  }

  SurfaceDecl decl() {
    SurfaceDecl d;
    SourceSpan start = peek().span;
    if (at_kw("def")) {
      d.is_axiom = false;
    } else if (at_kw("axiom")) {
      d.is_axiom = true;
    } else {
      fail({"'def'", "'axiom'"});
    }
    take();
    d.name_span = peek().span;
    d.name = ident();
    expect_sym(":");
    d.type = term();
    if (!d.is_axiom) {
      expect_sym(":=");
      d.body = term();
    }
    d.span = from(start);
    return d;
  }

  SurfaceTerm term() {
    SourceSpan start = peek().span;
    if (at_kw("fun")) {
      take();
      return lambda(start);
    }
    if (at_kw("Pi")) {
      take();
      return pi(start);
    }
    if (at_kw("Sigma")) {
      take();
      return sigma(start);
    }
    if (at_kw("let")) {
      take();
      return let(start);
    }
    SurfaceTerm lhs = application();
    if (accept_sym("->")) {
      SurfaceTerm rhs = term();
      return surf::pi("_", false, lhs, rhs, from(start));
    }
    if (accept_sym("*")) {
      SurfaceTerm rhs = term();
      return surf::sigma("_", lhs, rhs, from(start));
    }
    return lhs;
  }

  struct Binder {
    std::string name;
    bool implicit;
    SurfaceTerm type;  // null when omitted
    SourceSpan span;
  };

  // fun binders: x | _ | (x y : A) | {x y} | {x y : A}
  std::vector<Binder> lambda_binders() {
    std::vector<Binder> out;
    for (;;) {
      SourceSpan start = peek().span;
      if (peek().kind == TokenKind::kIdentifier || at_sym("_")) {
        std::string n = binder_name();
        out.push_back(Binder{n, false, nullptr, from(start)});
      } else if (accept_sym("(")) {
        std::vector<std::string> names = binder_names();
        expect_sym(":");
        SurfaceTerm ty = term();
        expect_sym(")");
        for (auto &n : names) out.push_back(Binder{n, false, ty, from(start)});
      } else if (accept_sym("{")) {
        std::vector<std::string> names = binder_names();
        SurfaceTerm ty;
        if (accept_sym(":")) ty = term();
        expect_sym("}");
        for (auto &n : names) out.push_back(Binder{n, true, ty, from(start)});
      } else {
        if (out.empty()) fail({"binder"});
        return out;
      }
    }
  }

  // Pi / Sigma binders: (x y : A) | {x y : A}; braces only when allowed.
  std::vector<Binder> typed_binders(bool allow_implicit) {
    std::vector<Binder> out;
    for (;;) {
      SourceSpan start = peek().span;
      bool implicit = false;
      if (accept_sym("(")) {
        implicit = false;
      } else if (allow_implicit && accept_sym("{")) {
        implicit = true;
      } else {
        if (out.empty()) {
          if (allow_implicit) fail({"'('", "'{'"});
          fail({"'('"});
        }
        return out;
      }
      std::vector<std::string> names = binder_names();
      expect_sym(":");
      SurfaceTerm ty = term();
      expect_sym(implicit ? "}" : ")");
      for (auto &n : names) out.push_back(Binder{n, implicit, ty, from(start)});
    }
  }

  SurfaceTerm lambda(const SourceSpan &start) {
    std::vector<Binder> bs = lambda_binders();
    expect_sym("=>");
    SurfaceTerm body = term();
    for (auto it = bs.rbegin(); it != bs.rend(); ++it) {
      body = surf::lam(it->name, it->implicit, it->type, body,
                       cover(it->span, body->span));
    }
    return with_span(body, from(start));
  }

  SurfaceTerm pi(const SourceSpan &start) {
    std::vector<Binder> bs = typed_binders(true);
    expect_sym("->");
    SurfaceTerm body = term();
    for (auto it = bs.rbegin(); it != bs.rend(); ++it) {
      body = surf::pi(it->name, it->implicit, it->type, body,
                      cover(it->span, body->span));
    }
    return with_span(body, from(start));
  }

  SurfaceTerm sigma(const SourceSpan &start) {
    std::vector<Binder> bs = typed_binders(false);
    expect_sym(",");
    SurfaceTerm body = term();
    for (auto it = bs.rbegin(); it != bs.rend(); ++it) {
      body = surf::sigma(it->name, it->type, body, cover(it->span, body->span));
    }
    return with_span(body, from(start));
  }

  // let x : T := e in b   ~>   (fun (x : T) => b) e
  SurfaceTerm let(const SourceSpan &start) {
    std::string name = binder_name();
    SurfaceTerm ty;
    if (accept_sym(":")) ty = term();
    expect_sym(":=");
    SurfaceTerm value = term();
    if (!at_kw("in")) fail({"'in'"});
    take();
    SurfaceTerm body = term();
    SourceSpan span = from(start);
    return surf::app(surf::lam(name, false, ty, body, span), value, span);
  }

  static SurfaceTerm with_span(const SurfaceTerm &t, const SourceSpan &span) {
    auto copy = std::make_shared<SurfaceNode>(*t);
    copy->span = span;
    return copy;
  }

  bool starts_atom() const {
    const Token &t = peek();
    switch (t.kind) {
      case TokenKind::kIdentifier:
      case TokenKind::kNatural:
        return true;
      case TokenKind::kSymbol:
        return t.lexeme == "(" || t.lexeme == "_";
      case TokenKind::kKeyword:
        return prim_from_keyword(t.lexeme).has_value();
      case TokenKind::kEnd:
        return false;
    }
    return false;
  }

  SurfaceTerm application() {
    SourceSpan start = peek().span;
    SurfaceTerm head;
    if (accept_sym("@")) {
      std::string name = ident();
      head = surf::explicit_var(name, from(start));
    } else if (at_kw("Type")) {
      take();
      if (peek().kind != TokenKind::kNatural) fail({"universe level"});
      std::uint32_t level = std::stoul(take().lexeme);
      head = surf::universe(level, from(start));
    } else if (peek().kind == TokenKind::kKeyword &&
               prim_from_keyword(peek().lexeme) &&
               prim_arity(*prim_from_keyword(peek().lexeme)) > 0) {
      Prim p = *prim_from_keyword(take().lexeme);
      std::vector<SurfaceTerm> args;
      // Without arguments the keyword stands for the function itself.
      for (std::size_t i = 0; i < prim_arity(p) && (i > 0 || starts_atom()); ++i) {
        if (!starts_atom()) {
          std::string what = fmt::format("argument {} of '{}'", i + 1,
                                         prim_keyword(p));
          fail({what});
        }
        args.push_back(atom());
      }
      head = surf::prim(p, std::move(args), from(start));
    } else if (starts_atom()) {
      head = atom();
    } else {
      fail({"term"});
    }
    while (starts_atom()) {
      SurfaceTerm arg = atom();
      head = surf::app(head, arg, from(start));
    }
    return head;
  }

  SurfaceTerm atom() {
    SourceSpan start = peek().span;
    const Token &t = peek();
    switch (t.kind) {
      case TokenKind::kIdentifier: {
        std::string name = take().lexeme;
        return surf::var(name, from(start));
      }
      case TokenKind::kNatural: {
        std::uint32_t n = std::stoul(take().lexeme);
        return surf::nat_lit(n, from(start));
      }
      case TokenKind::kKeyword: {
        auto p = prim_from_keyword(t.lexeme);
        if (p) {
          take();
          return surf::prim(*p, {}, from(start));
        }
        break;
      }
      case TokenKind::kSymbol:
        if (accept_sym("_")) return surf::hole(from(start));
        if (accept_sym("(")) return parenthesized(start);
        break;
      case TokenKind::kEnd:
        break;
    }
    fail({"term"});
  }

  // After "(": term ("," term)* [":" term] ")"
  SurfaceTerm parenthesized(const SourceSpan &start) {
    std::vector<SurfaceTerm> items{term()};
    while (accept_sym(",")) items.push_back(term());
    SurfaceTerm type;
    if (accept_sym(":")) type = term();
    if (!at_sym(")")) {
      if (type) fail({"')'"});
      fail({"')'", "','", "':'"});
    }
    take();
    SourceSpan span = from(start);
    SurfaceTerm result = items.back();
    for (std::size_t i = items.size() - 1; i-- > 0;) {
      result = surf::pair(items[i], result, cover(items[i]->span, result->span));
    }
    if (type) return surf::ann(result, type, span);
    if (items.size() > 1) return with_span(result, span);
    return result;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  SourceSpan last_;
};

}  // namespace

std::vector<Token> tokenize(std::string_view source, const std::string &file) {
  return Lexer(source, file).run();
}

std::vector<SurfaceDecl> parse_file(std::string_view source,
                                    const std::string &file) {
  return Parser(tokenize(source, file)).file();
}

SurfaceTerm parse_term(std::string_view source, const std::string &file) {
  return Parser(tokenize(source, file)).whole_term();
}

}  // namespace holim
