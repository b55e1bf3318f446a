#pragma once

// Random fixture generators shared by the unit and acceptance suites.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cam/class_model.hpp"

namespace cam::fixtures {

inline std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline Visibility random_visibility(std::mt19937_64& rng) {
  return kAllVisibilities[uniform(rng, 0, 2)];
}

inline std::vector<Member> random_members(std::mt19937_64& rng, int max_members) {
  std::vector<Member> members;
  const auto n = uniform(rng, 0, max_members);
  for (std::int64_t i = 0; i < n; ++i) {
    members.push_back(Member{"m" + std::to_string(i),
                             uniform(rng, 0, 1) ? MemberKind::Function : MemberKind::Variable,
                             random_visibility(rng)});
  }
  return members;
}

// Up to `max_classes` classes and `max_edges` derivation edges. Bases always
// have a lower index than the deriving class, so the result is acyclic.
// About one edge in eight points at a class outside the corpus.
inline std::vector<ClassDecl> random_corpus(std::mt19937_64& rng, int max_classes, int max_edges) {
  const auto n = uniform(rng, 1, max_classes);
  std::vector<ClassDecl> classes(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) {
    auto& c = classes[static_cast<std::size_t>(i)];
    c.name = "K" + std::to_string(i);
    c.members = random_members(rng, 6);
    c.friend_count = uniform(rng, 0, 2);
  }
  const auto edges = uniform(rng, 0, max_edges);
  for (std::int64_t k = 0; k < edges; ++k) {
    const auto derived = uniform(rng, 0, n - 1);
    auto& c = classes[static_cast<std::size_t>(derived)];
    std::string base;
    if (uniform(rng, 0, 7) == 0) {
      base = "Ext" + std::to_string(uniform(rng, 0, 1));
    } else {
      if (derived == 0) continue;
      base = "K" + std::to_string(uniform(rng, 0, derived - 1));
    }
    bool duplicate = false;
    for (const auto& b : c.bases) duplicate = duplicate || b.base_name == base;
    if (duplicate) continue;
    c.bases.push_back(BaseSpec{base, random_visibility(rng)});
  }
  return classes;
}

}  // namespace cam::fixtures
