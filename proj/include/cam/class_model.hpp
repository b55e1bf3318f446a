#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cam {

enum class Visibility { Public, Private, Protected };
enum class MemberKind { Variable, Function };

inline constexpr Visibility kAllVisibilities[] = {Visibility::Public, Visibility::Private,
                                                  Visibility::Protected};

std::string_view to_string(Visibility v);
std::string_view to_string(MemberKind k);
std::optional<Visibility> parse_visibility(std::string_view text);
std::optional<MemberKind> parse_member_kind(std::string_view text);

// [A-Za-z_][A-Za-z0-9_]*
bool is_identifier(std::string_view text);

// Member names are identifiers, or the special function names a class may
// declare: "~Name" for a destructor and "operator<symbol>" for an operator.
bool is_member_name(std::string_view text);

struct Member {
  std::string name;
  MemberKind kind = MemberKind::Variable;
  Visibility visibility = Visibility::Private;

  friend bool operator==(const Member&, const Member&) = default;
};

struct BaseSpec {
  std::string base_name;
  Visibility mode = Visibility::Private;

  friend bool operator==(const BaseSpec&, const BaseSpec&) = default;
};

struct SourceLocation {
  std::string file;
  int line = 0;
  int column = 0;
};

struct ClassDecl {
  std::string name;
  std::vector<Member> members;
  std::vector<BaseSpec> bases;
  std::int64_t friend_count = 0;
  SourceLocation location;  // provenance only, ignored by operator==

  friend bool operator==(const ClassDecl& a, const ClassDecl& b) {
    return a.name == b.name && a.members == b.members && a.bases == b.bases &&
           a.friend_count == b.friend_count;
  }
};

// Returns a description of the first violated ClassDecl invariant, if any.
// Cross-class invariants (unique names) are checked by the parsers.
std::optional<std::string> validate(const ClassDecl& decl);

struct VisibilityCounts {
  std::int64_t v_u = 0;  // public variables
  std::int64_t f_u = 0;  // public functions
  std::int64_t v_i = 0;  // private variables
  std::int64_t f_i = 0;  // private functions
  std::int64_t v_r = 0;  // protected variables
  std::int64_t f_r = 0;  // protected functions
  std::int64_t s_u = 0;
  std::int64_t s_i = 0;
  std::int64_t s_r = 0;

  std::int64_t total() const { return s_u + s_i + s_r; }

  friend bool operator==(const VisibilityCounts&, const VisibilityCounts&) = default;
};

// Builds counts from the six raw tallies, filling in the sums.
VisibilityCounts make_counts(std::int64_t v_u, std::int64_t f_u, std::int64_t v_i,
                             std::int64_t f_i, std::int64_t v_r, std::int64_t f_r);

// Tallies declared members only. Friends are not members.
VisibilityCounts count_visibility(const ClassDecl& decl);

}  // namespace cam
