#include "cam/lexer.hpp"

#include <cctype>

namespace cam {
namespace {

bool ident_start(unsigned char c) { return std::isalpha(c) || c == '_'; }
bool ident_char(unsigned char c) { return std::isalnum(c) || c == '_'; }

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {
    if (text_.substr(0, 3) == "\xEF\xBB\xBF") pos_ = 3;
  }

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_trivia(out);
      if (at_end()) break;
      out.push_back(next());
    }
    out.push_back(Token{TokenKind::End, "", line_, column_});
    return out;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  unsigned char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? static_cast<unsigned char>(text_[pos_ + ahead]) : 0;
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  // Whitespace and comments. An unterminated block comment becomes an
  // Invalid token at its opening.
  void skip_trivia(std::vector<Token>& out) {
    while (!at_end()) {
      const unsigned char c = peek();
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v') {
        advance();
      } else if (c == '/' && peek(1) == '/') {
        while (!at_end() && peek() != '\n') advance();
      } else if (c == '/' && peek(1) == '*') {
        const int line = line_;
        const int column = column_;
        advance();
        advance();
        bool closed = false;
        while (!at_end()) {
          if (peek() == '*' && peek(1) == '/') {
            advance();
            advance();
            closed = true;
            break;
          }
          advance();
        }
        if (!closed) out.push_back(Token{TokenKind::Invalid, "unterminated comment", line, column});
      } else {
        return;
      }
    }
  }

  Token next() {
    Token tok{TokenKind::Punct, "", line_, column_};
    const unsigned char c = peek();
    const std::size_t start = pos_;
    if (ident_start(c)) {
      while (!at_end() && ident_char(peek())) advance();
      tok.kind = TokenKind::Identifier;
      tok.text = std::string(text_.substr(start, pos_ - start));
    } else if (std::isdigit(c)) {
      while (!at_end() && (ident_char(peek()) || peek() == '.' || peek() == '\'')) advance();
      tok.kind = TokenKind::Literal;
      tok.text = std::string(text_.substr(start, pos_ - start));
    } else if (c == '"' || c == '\'') {
      advance();
      bool closed = false;
      while (!at_end() && peek() != '\n') {
        if (peek() == '\\') {
          advance();
          if (!at_end() && peek() != '\n') advance();
          continue;
        }
        if (peek() == c) {
          advance();
          closed = true;
          break;
        }
        advance();
      }
      if (closed) {
        tok.kind = TokenKind::Literal;
        tok.text = std::string(text_.substr(start, pos_ - start));
      } else {
        tok.kind = TokenKind::Invalid;
        tok.text = c == '"' ? "unterminated string literal" : "unterminated character literal";
      }
    } else if (c >= 0x80 || c < 0x20 || c == 0x7f || c == '#' || c == '$' || c == '@' ||
               c == '`' || c == '\\') {
      while (!at_end() && peek() >= 0x80) advance();
      if (pos_ == start) advance();
      tok.kind = TokenKind::Invalid;
      tok.text = c == '#' ? "preprocessor directives are not supported" : "unexpected character";
    } else {
      advance();
      tok.text = std::string(1, static_cast<char>(c));
    }
    return tok;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

}  // namespace

std::vector<Token> tokenize(std::string_view text) { return Lexer(text).run(); }

}  // namespace cam
