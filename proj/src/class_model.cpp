#include "cam/class_model.hpp"

#include <cstdlib>
#include <set>

namespace cam {

std::string_view to_string(Visibility v) {
  switch (v) {
    case Visibility::Public:
      return "public";
    case Visibility::Private:
      return "private";
    case Visibility::Protected:
      return "protected";
  }
  return "private";
}

std::string_view to_string(MemberKind k) {
  return k == MemberKind::Function ? "function" : "variable";
}

std::optional<Visibility> parse_visibility(std::string_view text) {
  if (text == "public") return Visibility::Public;
  if (text == "private") return Visibility::Private;
  if (text == "protected") return Visibility::Protected;
  return std::nullopt;
}

std::optional<MemberKind> parse_member_kind(std::string_view text) {
  if (text == "variable") return MemberKind::Variable;
  if (text == "function") return MemberKind::Function;
  return std::nullopt;
}

namespace {

bool ident_start(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
}

bool ident_char(char c) { return ident_start(c) || (c >= '0' && c <= '9'); }

bool is_operator_symbol(std::string_view sym) {
  static const std::set<std::string_view> kSymbols = {
      "+",  "-",  "*",  "/",  "%",  "^",   "&",   "|",  "~",  "!",  "=",  "<",
      ">",  "+=", "-=", "*=", "/=", "%=",  "^=",  "&=", "|=", "<<", ">>", ">>=",
      "<<=", "==", "!=", "<=", ">=", "&&", "||", "++", "--", ",",  "->*", "->",
      "()", "[]", "<=>"};
  return kSymbols.count(sym) != 0;
}

}  // namespace

bool is_identifier(std::string_view text) {
  if (text.empty() || !ident_start(text.front())) return false;
  for (char c : text) {
    if (!ident_char(c)) return false;
  }
  return true;
}

bool is_member_name(std::string_view text) {
  if (is_identifier(text)) return true;
  if (text.size() > 1 && text.front() == '~') return is_identifier(text.substr(1));
  constexpr std::string_view kOperator = "operator";
  if (text.substr(0, kOperator.size()) == kOperator) {
    return is_operator_symbol(text.substr(kOperator.size()));
  }
  return false;
}

std::optional<std::string> validate(const ClassDecl& decl) {
  if (!is_identifier(decl.name)) {
    return "class name '" + decl.name + "' is not a valid identifier";
  }
  if (decl.friend_count < 0) return std::string("friend_count must be non-negative");
  for (const auto& m : decl.members) {
    if (!is_member_name(m.name)) {
      return "member name '" + m.name + "' is not a valid identifier";
    }
  }
  std::set<std::string> seen;
  for (const auto& b : decl.bases) {
    if (!is_identifier(b.base_name)) {
      return "base name '" + b.base_name + "' is not a valid identifier";
    }
    if (b.base_name == decl.name) return "class '" + decl.name + "' cannot derive from itself";
    if (!seen.insert(b.base_name).second) {
      return "duplicate base '" + b.base_name + "' in class '" + decl.name + "'";
    }
  }
  return std::nullopt;
}

VisibilityCounts make_counts(std::int64_t v_u, std::int64_t f_u, std::int64_t v_i,
                             std::int64_t f_i, std::int64_t v_r, std::int64_t f_r) {
  VisibilityCounts c;
  c.v_u = v_u;
  c.f_u = f_u;
  c.v_i = v_i;
  c.f_i = f_i;
  c.v_r = v_r;
  c.f_r = f_r;
  c.s_u = v_u + f_u;
  c.s_i = v_i + f_i;
  c.s_r = v_r + f_r;
  return c;
}

VisibilityCounts count_visibility(const ClassDecl& decl) {
  std::int64_t tally[3][2] = {};
  for (const auto& m : decl.members) {
    tally[static_cast<int>(m.visibility)][static_cast<int>(m.kind)] += 1;
  }
  constexpr int kVar = static_cast<int>(MemberKind::Variable);
  constexpr int kFn = static_cast<int>(MemberKind::Function);
  constexpr int kPub = static_cast<int>(Visibility::Public);
  constexpr int kPriv = static_cast<int>(Visibility::Private);
  constexpr int kProt = static_cast<int>(Visibility::Protected);
  return make_counts(tally[kPub][kVar], tally[kPub][kFn], tally[kPriv][kVar], tally[kPriv][kFn],
                     tally[kProt][kVar], tally[kProt][kFn]);
}

}  // namespace cam
