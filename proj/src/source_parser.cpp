#include "cam/source_parser.hpp"

#include <set>
#include <utility>

#include "cam/lexer.hpp"

namespace cam {

std::string_view to_string(Severity s) { return s == Severity::Error ? "error" : "warning"; }

bool has_errors(const std::vector<Diagnostic>& diagnostics) {
  for (const auto& d : diagnostics) {
    if (d.severity == Severity::Error) return true;
  }
  return false;
}

bool ParseResult::has_errors() const { return cam::has_errors(diagnostics); }

namespace {

struct SyntaxError {
  Token at;
  std::string message;
};

bool is_visibility_keyword(const Token& t) {
  return t.kind == TokenKind::Identifier &&
         (t.text == "public" || t.text == "private" || t.text == "protected");
}

bool is_reserved(const Token& t) {
  static const std::set<std::string, std::less<>> kReserved = {
      "class",    "struct",   "union",    "enum",     "public", "private",
      "protected", "friend",  "template", "typedef",  "using",  "namespace",
      "operator"};
  return t.kind == TokenKind::Identifier && kReserved.count(t.text) != 0;
}

std::string describe(const Token& t) {
  switch (t.kind) {
    case TokenKind::End:
      return "end of input";
    default:
      return "'" + t.text + "'";
  }
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::string file)
      : tokens_(std::move(tokens)), file_(std::move(file)) {}

  ParseResult run() {
    while (current().kind != TokenKind::End) {
      const std::size_t start = pos_;
      try {
        parse_class();
      } catch (const SyntaxError& e) {
        error(e.at, e.message);
        recover(start);
        swallow_class_ = false;
      }
    }
    return std::move(result_);
  }

 private:
  const Token& current() const { return tokens_[pos_]; }
  const Token& peek(std::size_t ahead = 1) const {
    const std::size_t i = pos_ + ahead;
    return i < tokens_.size() ? tokens_[i] : tokens_.back();
  }
  const Token& take() {
    const Token& t = tokens_[pos_];
    if (t.kind != TokenKind::End) ++pos_;
    return t;
  }

  [[noreturn]] void fail(const Token& at, std::string message) const {
    throw SyntaxError{at, std::move(message)};
  }

  [[noreturn]] void fail_expected(std::string_view what) const {
    const Token& t = current();
    if (t.kind == TokenKind::Invalid) fail(t, t.text);
    fail(t, "expected " + std::string(what) + ", found " + describe(t));
  }

  void expect_punct(char c) {
    if (!current().is_punct(c)) fail_expected(std::string("'") + c + "'");
    take();
  }

  const Token& expect_identifier(std::string_view what) {
    if (current().kind != TokenKind::Identifier || is_reserved(current())) fail_expected(what);
    return take();
  }

  void error(const Token& at, std::string message) {
    result_.diagnostics.push_back(
        Diagnostic{Severity::Error, std::move(message), file_, at.line, at.column});
  }

  // Skips to just past the `;` that closes the broken declaration, or to
  // the next top-level `class` keyword, whichever comes first.
  void recover(std::size_t decl_start) {
    int depth = in_body_ ? 1 : 0;
    in_body_ = false;
    if (pos_ == decl_start) take();
    while (current().kind != TokenKind::End) {
      const Token& t = current();
      if (depth == 0 && t.is(TokenKind::Identifier, "class")) {
        if (!swallow_class_) return;
        swallow_class_ = false;
      }
      take();
      if (t.is_punct('{')) {
        ++depth;
      } else if (t.is_punct('}')) {
        if (depth > 0) --depth;
      } else if (depth == 0 && t.is_punct(';')) {
        return;
      }
    }
  }

  void parse_class() {
    const Token& head = current();
    if (!head.is(TokenKind::Identifier, "class")) {
      if (head.is(TokenKind::Identifier, "template")) {
        // The templated class that follows goes down with the header.
        take();
        swallow_class_ = true;
        fail(head, "templates are not supported");
      }
      if (head.is(TokenKind::Identifier, "namespace")) fail(head, "namespaces are not supported");
      if (head.is(TokenKind::Identifier, "struct") || head.is(TokenKind::Identifier, "union")) {
        fail(head, "only 'class' declarations are supported");
      }
      fail_expected("'class'");
    }
    take();

    ClassDecl decl;
    const Token name_tok = expect_identifier("class name");
    decl.name = name_tok.text;
    decl.location = SourceLocation{file_, head.line, head.column};

    if (current().is_punct(':')) {
      take();
      parse_base(decl);
      while (current().is_punct(',')) {
        take();
        parse_base(decl);
      }
    }

    if (current().is_punct(';')) fail(current(), "forward declarations are not supported");
    expect_punct('{');
    in_body_ = true;
    std::vector<Diagnostic> warnings;
    Visibility visibility = Visibility::Private;
    while (!current().is_punct('}')) parse_item(decl, visibility, warnings);
    take();
    in_body_ = false;
    expect_punct(';');

    if (!seen_.insert(decl.name).second) {
      error(name_tok, "duplicate class '" + decl.name + "'");
      return;
    }
    if (auto problem = validate(decl)) {
      error(name_tok, *problem);
      return;
    }
    for (auto& w : warnings) result_.diagnostics.push_back(std::move(w));
    result_.classes.push_back(std::move(decl));
  }

  void parse_base(ClassDecl& decl) {
    BaseSpec base;
    if (is_visibility_keyword(current())) {
      base.mode = *parse_visibility(take().text);
    }
    if (current().is(TokenKind::Identifier, "virtual")) {
      fail(current(), "virtual inheritance is not supported");
    }
    const Token& name = expect_identifier("base class name");
    base.base_name = name.text;
    if (base.base_name == decl.name) {
      fail(name, "class '" + decl.name + "' cannot derive from itself");
    }
    for (const auto& b : decl.bases) {
      if (b.base_name == base.base_name) fail(name, "duplicate base '" + base.base_name + "'");
    }
    decl.bases.push_back(std::move(base));
  }

  void parse_item(ClassDecl& decl, Visibility& visibility, std::vector<Diagnostic>& warnings) {
    const Token& t = current();
    if (t.kind == TokenKind::End) fail(t, "unexpected end of input in body of class '" + decl.name + "'");
    if (is_visibility_keyword(t)) {
      visibility = *parse_visibility(take().text);
      expect_punct(':');
      return;
    }
    if (t.is(TokenKind::Identifier, "friend")) {
      parse_friend(warnings);
      ++decl.friend_count;
      return;
    }
    if (t.kind == TokenKind::Identifier) {
      if (t.text == "class" || t.text == "struct" || t.text == "union" || t.text == "enum") {
        fail(t, "nested type declarations are not supported");
      }
      if (t.text == "template") fail(t, "templates are not supported");
      if (t.text == "typedef" || t.text == "using" || t.text == "namespace") {
        fail(t, "'" + t.text + "' is not supported in a class body");
      }
    }
    parse_member(decl, visibility);
  }

  void parse_friend(std::vector<Diagnostic>& warnings) {
    const Token& kw = take();
    const Token& first = current();
    if (first.is(TokenKind::Identifier, "class") || first.is(TokenKind::Identifier, "struct")) {
      std::string target = peek().kind == TokenKind::Identifier ? peek().text : "?";
      warnings.push_back(Diagnostic{Severity::Warning,
                                    "friend class '" + target + "' counted as one friend",
                                    file_, kw.line, kw.column});
    }
    int depth = 0;
    bool any = false;
    for (;;) {
      const Token& t = current();
      if (t.kind == TokenKind::End) fail_expected("';'");
      if (t.kind == TokenKind::Invalid) fail(t, t.text);
      if (t.is_punct('{') || t.is_punct('}')) {
        fail(t, "friend definitions with a body are not supported");
      }
      if (t.is_punct('(')) ++depth;
      if (t.is_punct(')')) {
        if (depth == 0) fail(t, "unbalanced ')'");
        --depth;
      }
      if (t.is_punct(';') && depth == 0) break;
      any = true;
      take();
    }
    if (!any) fail(current(), "empty friend declaration");
    take();
  }

  void parse_params() {
    expect_punct('(');
    int depth = 1;
    bool in_default = false;
    while (depth > 0) {
      const Token& t = current();
      if (t.kind == TokenKind::End) fail(t, "unexpected end of input in parameter list");
      if (t.kind == TokenKind::Invalid) fail(t, t.text);
      if (t.is_punct('{') || t.is_punct('}') || t.is_punct(';')) {
        fail(t, "unexpected " + describe(t) + " in parameter list");
      }
      if (t.is_punct('(')) {
        ++depth;
      } else if (t.is_punct(')')) {
        --depth;
      } else if (t.is_punct('=') && depth == 1) {
        in_default = true;
      } else if (t.is_punct(',')) {
        if (depth == 1) {
          in_default = false;
        } else if (in_default) {
          fail(t, "default arguments containing commas are not supported");
        }
      }
      take();
    }
  }

  std::string parse_operator_name() {
    const Token& kw = take();
    std::string symbol;
    if (current().is_punct('(')) {
      take();
      expect_punct(')');
      symbol = "()";
    } else if (current().is_punct('[')) {
      take();
      expect_punct(']');
      symbol = "[]";
    } else {
      int line = kw.line;
      int column = kw.column + static_cast<int>(kw.text.size());
      while (current().kind == TokenKind::Punct && !current().is_punct('(')) {
        const Token& t = current();
        if (!symbol.empty() && (t.line != line || t.column != column)) break;
        symbol += t.text;
        line = t.line;
        column = t.column + 1;
        take();
      }
      if (symbol.empty()) {
        if (current().kind == TokenKind::Identifier) {
          fail(current(), "conversion operators are not supported");
        }
        fail_expected("operator symbol");
      }
    }
    const std::string name = "operator" + symbol;
    if (!is_member_name(name)) fail(kw, "unsupported operator '" + symbol + "'");
    if (!current().is_punct('(')) fail_expected("'('");
    return name;
  }

  void parse_member(ClassDecl& decl, Visibility visibility) {
    auto add = [&](std::string name, MemberKind kind) {
      decl.members.push_back(Member{std::move(name), kind, visibility});
    };

    std::vector<Token> idents;
    while (current().kind == TokenKind::Identifier && !is_reserved(current())) {
      idents.push_back(take());
    }

    // [specifiers] ~Name()
    if (current().is_punct('~')) {
      take();
      const Token& name = expect_identifier("destructor name");
      if (name.text != decl.name) fail(name, "destructor name must match class '" + decl.name + "'");
      if (!current().is_punct('(')) fail_expected("'('");
      parse_params();
      expect_punct(';');
      add("~" + decl.name, MemberKind::Function);
      return;
    }

    bool leading_pointer = false;
    while (current().is_punct('*') || current().is_punct('&')) {
      take();
      leading_pointer = true;
    }

    if (current().is(TokenKind::Identifier, "operator")) {
      if (idents.empty()) fail(current(), "conversion operators are not supported");
      std::string name = parse_operator_name();
      parse_params();
      expect_punct(';');
      add(std::move(name), MemberKind::Function);
      return;
    }

    if (idents.empty()) fail_expected("member declaration");

    // Name(...)
    if (idents.size() == 1 && !leading_pointer && idents[0].text == decl.name && current().is_punct('(')) {
      parse_params();
      expect_punct(';');
      add(decl.name, MemberKind::Function);
      return;
    }

    bool first = true;
    for (;;) {
      std::string name;
      bool pointer = first && leading_pointer;
      while (current().is_punct('*') || current().is_punct('&')) {
        take();
        pointer = true;
      }
      if (first && !pointer) {
        if (idents.size() < 2) fail_expected("member name");
        name = idents.back().text;
      } else {
        name = expect_identifier("member name").text;
      }
      first = false;

      MemberKind kind = MemberKind::Variable;
      if (current().is_punct('(')) {
        parse_params();
        kind = MemberKind::Function;
      }
      add(std::move(name), kind);

      if (current().is_punct(',')) {
        take();
        continue;
      }
      expect_punct(';');
      return;
    }
  }

  std::vector<Token> tokens_;
  std::string file_;
  std::size_t pos_ = 0;
  bool in_body_ = false;
  bool swallow_class_ = false;
  std::set<std::string> seen_;
  ParseResult result_;
};

}  // namespace

ParseResult parse_source(std::string_view text, const std::string& file) {
  return Parser(tokenize(text), file).run();
}

void merge_results(ParseResult& into, ParseResult next) {
  std::set<std::string> names;
  for (const auto& c : into.classes) names.insert(c.name);
  for (auto& d : next.diagnostics) into.diagnostics.push_back(std::move(d));
  for (auto& c : next.classes) {
    if (!names.insert(c.name).second) {
      into.diagnostics.push_back(Diagnostic{Severity::Error,
                                            "duplicate class '" + c.name + "'",
                                            c.location.file, c.location.line,
                                            c.location.column});
      continue;
    }
    into.classes.push_back(std::move(c));
  }
}

}  // namespace cam
