#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "cam/class_model.hpp"
#include "cam/hierarchy.hpp"
#include "cam/rational.hpp"

namespace cam {

enum class Branch { NoInheritance, WithInheritance };
enum class CamMode { PerEdge, Pooled };

// Substitutions and warnings attached to a result. Bit set, rendered in
// declaration order.
enum class CamFlag : unsigned {
  ZeroPrivateSubstituted = 1u << 0,           // s_i = 0 replaced by 1
  ZeroInheritedPrivateSubstituted = 1u << 1,  // i_i = 0 replaced by 1
  PrivateChainWarning = 1u << 2,              // derives from a private inheritor
};

class CamFlags {
 public:
  constexpr CamFlags() = default;
  constexpr CamFlags(CamFlag f) : bits_(static_cast<unsigned>(f)) {}  // NOLINT(implicit)

  constexpr bool has(CamFlag f) const { return (bits_ & static_cast<unsigned>(f)) != 0; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr CamFlags& operator|=(CamFlags other) {
    bits_ |= other.bits_;
    return *this;
  }
  friend constexpr CamFlags operator|(CamFlags a, CamFlags b) { return a |= b; }
  friend constexpr bool operator==(CamFlags, CamFlags) = default;

 private:
  unsigned bits_ = 0;
};

inline constexpr CamFlag kAllFlags[] = {CamFlag::ZeroPrivateSubstituted,
                                        CamFlag::ZeroInheritedPrivateSubstituted,
                                        CamFlag::PrivateChainWarning};

std::string_view to_string(Branch b);
std::string_view to_string(CamMode m);
std::string_view to_string(CamFlag f);

struct Component {
  Rational value;
  CamFlags flags;
};

struct CamResult {
  std::string class_name;
  std::optional<Rational> c_an;  // present only without inheritance
  Rational c_au;
  Rational c_ai;
  Rational c_ar;
  std::int64_t n_f = 0;
  Rational cam;
  Branch branch = Branch::NoInheritance;
  CamMode mode = CamMode::PerEdge;
  CamFlags flags;
};

// (s_u + s_r) / s_i, with s_i = 0 read as 1.
Component cam_no_inheritance(const VisibilityCounts& counts);

// n_lu * i_u
Rational cam_public(std::int64_t n_lu, std::int64_t i_u);

// (i_u + i_r) / i_i, with i_i = 0 read as 1; zero when the class has no
// private-mode edges.
Component cam_private(std::int64_t i_u, std::int64_t i_r, std::int64_t i_i, bool has_edges = true);

// n_lr * (i_u + i_r) / i_i, same substitution; zero without protected edges.
Component cam_protected(std::int64_t n_lr, std::int64_t i_u, std::int64_t i_r, std::int64_t i_i,
                        bool has_edges = true);

CamResult compute_cam(const VisibilityCounts& counts, const InheritanceSums& sums, std::int64_t n_f,
                      CamMode mode = CamMode::PerEdge);

}  // namespace cam
