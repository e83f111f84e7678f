#pragma once

#include "kenso/error.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace kenso {

// Shared tokenizer for the expression surface syntax and the manifold
// definition language. One call lexes one logical line; '#' starts a comment
// that runs to the end of the line.
enum class TokenKind {
  ident,
  integer,
  plus,
  minus,
  star,
  slash,
  caret,
  lparen,
  rparen,
  equals,
  arrow,
  semicolon,
  end,
};

struct Token {
  TokenKind kind = TokenKind::end;
  std::string text;
  SourcePos pos;
};

std::vector<Token> lex_line(std::string_view line, int line_no);

class TokenCursor {
 public:
  explicit TokenCursor(const std::vector<Token>& tokens) : tokens_(&tokens) {}

  const Token& peek() const { return (*tokens_)[index_]; }
  const Token& next() {
    const Token& t = (*tokens_)[index_];
    if (t.kind != TokenKind::end) ++index_;
    return t;
  }
  bool at_end() const { return peek().kind == TokenKind::end; }
  bool accept(TokenKind kind) {
    if (peek().kind != kind) return false;
    next();
    return true;
  }
  const Token& expect(TokenKind kind, const std::string& what) {
    if (peek().kind != kind)
      fail_at(errc::parse_error, "expected " + what, peek().pos);
    return next();
  }

 private:
  const std::vector<Token>* tokens_;
  std::size_t index_ = 0;
};

}  // namespace kenso
