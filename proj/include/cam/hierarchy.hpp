#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "cam/class_model.hpp"
#include "cam/diagnostic.hpp"

namespace cam {

struct InheritanceEdge {
  std::string derived;
  std::string base;
  Visibility mode = Visibility::Private;
  bool resolved = true;  // false: base is not a class of this run

  friend bool operator==(const InheritanceEdge&, const InheritanceEdge&) = default;
};

// Directed from derived to base. Acyclic once built.
struct InheritanceGraph {
  std::set<std::string> nodes;
  std::vector<InheritanceEdge> edges;
  std::set<std::string> unresolved;

  bool contains(const std::string& name) const { return nodes.count(name) != 0; }
};

struct GraphBuild {
  InheritanceGraph graph;
  std::vector<Diagnostic> diagnostics;
  // Classes on an inheritance cycle; they are not nodes of `graph`.
  std::set<std::string> aborted;
  // Classes deriving from a class that itself inherits privately.
  std::set<std::string> private_chain;
};

// One edge per BaseSpec. Bases missing from `classes` become unresolved
// edges (Warning). Classes on a cycle are reported as one Error per cycle
// and removed; edges into them from outside the cycle become unresolved.
GraphBuild build_graph(const std::vector<ClassDecl>& classes);

struct MemberTotals {
  std::int64_t u = 0;  // public
  std::int64_t r = 0;  // protected
  std::int64_t i = 0;  // private

  friend bool operator==(const MemberTotals&, const MemberTotals&) = default;
};

// What one derivation edge carries: the base's own declared public,
// protected and private member totals.
MemberTotals edge_contribution(const VisibilityCounts& base);
MemberTotals edge_contribution(const ClassDecl& base);

struct ModeSums {
  std::int64_t i_u = 0;
  std::int64_t i_r = 0;
  std::int64_t i_i = 0;
  std::int64_t edges = 0;  // incident edges of this mode, either direction

  friend bool operator==(const ModeSums&, const ModeSums&) = default;
};

struct InheritanceSums {
  std::array<ModeSums, 3> by_mode{};  // indexed by Visibility
  std::int64_t n_lu = 0;
  std::int64_t n_li = 0;
  std::int64_t n_lr = 0;
  std::int64_t n_i = 0;

  ModeSums& operator[](Visibility v) { return by_mode[static_cast<std::size_t>(v)]; }
  const ModeSums& operator[](Visibility v) const { return by_mode[static_cast<std::size_t>(v)]; }

  friend bool operator==(const InheritanceSums&, const InheritanceSums&) = default;
};

using CountsByClass = std::map<std::string, VisibilityCounts>;

// Sums over every edge incident to `class_name`: as the derived end it
// receives its base's contribution, as the base end it contributes its own
// totals once per deriving class. Levels are maxima over the maximal
// root-to-leaf chains through the class. Throws std::invalid_argument when
// the class is not a node of `graph`.
InheritanceSums inheritance_sums(const InheritanceGraph& graph, const std::string& class_name,
                                 const CountsByClass& counts);

}  // namespace cam
