#include "cam/hierarchy.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace cam {
namespace {

constexpr std::size_t index(Visibility v) { return static_cast<std::size_t>(v); }

// Tarjan's strongly connected components over resolved edges. Returns the
// components with more than one class, each sorted by name.
std::vector<std::vector<std::string>> find_cycles(
    const std::vector<std::string>& names, const std::map<std::string, std::vector<std::string>>& bases) {
  std::map<std::string, int> order;
  std::map<std::string, int> low;
  std::set<std::string> on_stack;
  std::vector<std::string> stack;
  std::vector<std::vector<std::string>> cycles;
  int counter = 0;

  std::function<void(const std::string&)> visit = [&](const std::string& v) {
    order[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack.insert(v);
    auto it = bases.find(v);
    if (it != bases.end()) {
      for (const auto& w : it->second) {
        if (!order.count(w)) {
          visit(w);
          low[v] = std::min(low[v], low[w]);
        } else if (on_stack.count(w)) {
          low[v] = std::min(low[v], order[w]);
        }
      }
    }
    if (low[v] == order[v]) {
      std::vector<std::string> component;
      std::string w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack.erase(w);
        component.push_back(w);
      } while (w != v);
      if (component.size() > 1) {
        std::sort(component.begin(), component.end());
        cycles.push_back(std::move(component));
      }
    }
  };

  for (const auto& n : names) {
    if (!order.count(n)) visit(n);
  }
  std::sort(cycles.begin(), cycles.end());
  return cycles;
}

}  // namespace

GraphBuild build_graph(const std::vector<ClassDecl>& classes) {
  GraphBuild out;
  std::map<std::string, const ClassDecl*> by_name;
  std::vector<std::string> names;
  for (const auto& c : classes) {
    by_name.emplace(c.name, &c);
    names.push_back(c.name);
  }

  std::map<std::string, std::vector<std::string>> resolved_bases;
  for (const auto& c : classes) {
    for (const auto& b : c.bases) {
      if (by_name.count(b.base_name)) resolved_bases[c.name].push_back(b.base_name);
    }
  }

  for (const auto& cycle : find_cycles(names, resolved_bases)) {
    std::string listing;
    for (const auto& n : cycle) {
      listing += listing.empty() ? n : ", " + n;
      out.aborted.insert(n);
    }
    const SourceLocation& loc = by_name.at(cycle.front())->location;
    out.diagnostics.push_back(Diagnostic{Severity::Error, "inheritance cycle among classes: " + listing,
                                         loc.file, loc.line, loc.column});
  }

  for (const auto& c : classes) {
    if (out.aborted.count(c.name)) continue;
    out.graph.nodes.insert(c.name);
    for (const auto& b : c.bases) {
      InheritanceEdge edge{c.name, b.base_name, b.mode, true};
      if (!by_name.count(b.base_name)) {
        edge.resolved = false;
        out.diagnostics.push_back(Diagnostic{Severity::Warning,
                                             "base '" + b.base_name + "' of class '" + c.name +
                                                 "' is not defined; it contributes no members",
                                             c.location.file, c.location.line, c.location.column});
      } else if (out.aborted.count(b.base_name)) {
        edge.resolved = false;
        out.diagnostics.push_back(Diagnostic{Severity::Warning,
                                             "base '" + b.base_name + "' of class '" + c.name +
                                                 "' lies on an inheritance cycle; it contributes no members",
                                             c.location.file, c.location.line, c.location.column});
      }
      if (!edge.resolved) out.graph.unresolved.insert(b.base_name);
      out.graph.edges.push_back(std::move(edge));
    }
  }

  // A class whose base inherited privately cannot see that base's members.
  std::set<std::string> private_derivers;
  for (const auto& e : out.graph.edges) {
    if (e.mode == Visibility::Private) private_derivers.insert(e.derived);
  }
  for (const auto& e : out.graph.edges) {
    if (!e.resolved || !private_derivers.count(e.base)) continue;
    if (!out.private_chain.insert(e.derived).second) continue;
    const SourceLocation& loc = by_name.at(e.derived)->location;
    out.diagnostics.push_back(Diagnostic{
        Severity::Warning,
        "class '" + e.derived + "' derives from '" + e.base +
            "', which inherits privately; privately inherited members cannot be inherited further",
        loc.file, loc.line, loc.column});
  }
  return out;
}

MemberTotals edge_contribution(const VisibilityCounts& base) {
  return MemberTotals{base.s_u, base.s_r, base.s_i};
}

MemberTotals edge_contribution(const ClassDecl& base) {
  return edge_contribution(count_visibility(base));
}

namespace {

// Longest path length and per-mode maximum edge counts, in one direction.
struct Reach {
  std::int64_t length = 0;
  std::array<std::int64_t, 3> by_mode{};
};

class LevelWalker {
 public:
  explicit LevelWalker(const InheritanceGraph& graph) {
    for (const auto& e : graph.edges) {
      up_edges_[e.derived].push_back(&e);
      down_edges_[e.base].push_back(&e);
    }
  }

  Reach up(const std::string& name) { return walk(name, true); }
  Reach down(const std::string& name) { return walk(name, false); }

 private:
  Reach walk(const std::string& name, bool upward) {
    auto& memo = upward ? up_memo_ : down_memo_;
    if (auto it = memo.find(name); it != memo.end()) return it->second;
    Reach best;
    const auto& adjacency = upward ? up_edges_ : down_edges_;
    if (auto it = adjacency.find(name); it != adjacency.end()) {
      for (const InheritanceEdge* e : it->second) {
        const Reach next = walk(upward ? e->base : e->derived, upward);
        best.length = std::max(best.length, next.length + 1);
        for (Visibility m : kAllVisibilities) {
          const std::int64_t here = e->mode == m ? 1 : 0;
          best.by_mode[index(m)] = std::max(best.by_mode[index(m)], next.by_mode[index(m)] + here);
        }
      }
    }
    memo.emplace(name, best);
    return best;
  }

  std::map<std::string, std::vector<const InheritanceEdge*>> up_edges_;
  std::map<std::string, std::vector<const InheritanceEdge*>> down_edges_;
  std::map<std::string, Reach> up_memo_;
  std::map<std::string, Reach> down_memo_;
};

MemberTotals totals_for(const CountsByClass& counts, const std::string& name) {
  auto it = counts.find(name);
  return it == counts.end() ? MemberTotals{} : edge_contribution(it->second);
}

}  // namespace

InheritanceSums inheritance_sums(const InheritanceGraph& graph, const std::string& class_name,
                                 const CountsByClass& counts) {
  if (!graph.contains(class_name)) {
    throw std::invalid_argument("class '" + class_name + "' is not in the inheritance graph");
  }
  InheritanceSums sums;
  const MemberTotals own = totals_for(counts, class_name);
  for (const auto& e : graph.edges) {
    MemberTotals add;
    if (e.derived == class_name) {
      add = e.resolved ? totals_for(counts, e.base) : MemberTotals{};
    } else if (e.base == class_name) {
      add = own;
    } else {
      continue;
    }
    ModeSums& s = sums[e.mode];
    s.i_u += add.u;
    s.i_r += add.r;
    s.i_i += add.i;
    s.edges += 1;
  }

  LevelWalker walker(graph);
  const Reach up = walker.up(class_name);
  const Reach down = walker.down(class_name);
  sums.n_i = up.length + down.length;
  sums.n_lu = up.by_mode[index(Visibility::Public)] + down.by_mode[index(Visibility::Public)];
  sums.n_li = up.by_mode[index(Visibility::Private)] + down.by_mode[index(Visibility::Private)];
  sums.n_lr = up.by_mode[index(Visibility::Protected)] + down.by_mode[index(Visibility::Protected)];
  return sums;
}

}  // namespace cam
