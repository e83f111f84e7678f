#include "kenso/lexer.hpp"

#include <cctype>

namespace kenso {

static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
static bool ident_char(char c) { return ident_start(c) || std::isdigit(static_cast<unsigned char>(c)); }

std::vector<Token> lex_line(std::string_view line, int line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  const std::size_t n = line.size();
  auto pos_at = [&](std::size_t col0) { return SourcePos{line_no, static_cast<int>(col0) + 1}; };
  while (i < n) {
    char c = line[i];
    if (c == '#') break;
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      continue;
    }
    SourcePos pos = pos_at(i);
    if (ident_start(c)) {
      std::size_t start = i;
      while (i < n && ident_char(line[i])) ++i;
      out.push_back({TokenKind::ident, std::string(line.substr(start, i - start)), pos});
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = i;
      while (i < n && std::isdigit(static_cast<unsigned char>(line[i]))) ++i;
      out.push_back({TokenKind::integer, std::string(line.substr(start, i - start)), pos});
      continue;
    }
    switch (c) {
      case '+': out.push_back({TokenKind::plus, "+", pos}); ++i; break;
      case '-':
        if (i + 1 < n && line[i + 1] == '>') {
          out.push_back({TokenKind::arrow, "->", pos});
          i += 2;
        } else {
          out.push_back({TokenKind::minus, "-", pos});
          ++i;
        }
        break;
      case '*': out.push_back({TokenKind::star, "*", pos}); ++i; break;
      case '/': out.push_back({TokenKind::slash, "/", pos}); ++i; break;
      case '^': out.push_back({TokenKind::caret, "^", pos}); ++i; break;
      case '(': out.push_back({TokenKind::lparen, "(", pos}); ++i; break;
      case ')': out.push_back({TokenKind::rparen, ")", pos}); ++i; break;
      case '=': out.push_back({TokenKind::equals, "=", pos}); ++i; break;
      case ';': out.push_back({TokenKind::semicolon, ";", pos}); ++i; break;
      default:
        fail_at(errc::parse_error, std::string("unexpected character '") + c + "'", pos);
    }
  }
  out.push_back({TokenKind::end, "", pos_at(i)});
  return out;
}

}  // namespace kenso
