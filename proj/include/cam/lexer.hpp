#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace cam {

enum class TokenKind {
  Identifier,
  Punct,    // a single punctuation character
  Literal,  // numeric or quoted literal
  Invalid,  // lexing failed here; `text` holds the reason
  End,
};

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;
  int line = 1;
  int column = 1;

  bool is(TokenKind k, std::string_view t) const { return kind == k && text == t; }
  bool is_punct(char c) const { return kind == TokenKind::Punct && text.size() == 1 && text[0] == c; }
};

// Splits `text` into tokens, dropping whitespace and comments. The result
// always ends with exactly one End token. Never throws on malformed input.
std::vector<Token> tokenize(std::string_view text);

}  // namespace cam
