// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cam/analysis.hpp"
#include "cam/hierarchy.hpp"
#include "cam/metric_engine.hpp"

#include "cam_oracle.hpp"
#include "cli_runner.hpp"
#include "corpus.hpp"
#include "fixtures.hpp"
#include "hierarchy_oracle.hpp"

using namespace cam;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

// Pinned limits. Every value comparison is exact rational equality.
constexpr int kNoInheritanceCases = 1000;
constexpr double kNoInheritanceSeconds = 1.0;
constexpr int kModeIdentityCases = 1000;
constexpr int kFriendCases = 500;
constexpr int kMonotonicityCases = 500;
constexpr int kHierarchyCorpora = 2000;
constexpr int kHierarchyMaxClasses = 6;
constexpr int kHierarchyMaxEdges = 6;
constexpr double kHierarchySeconds = 30.0;
constexpr std::size_t kMinParserFiles = 25;
constexpr std::size_t kMinMalformedFiles = 10;

struct Verdict {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fixed(double v) {
  std::ostringstream s;
  s.precision(3);
  s << std::fixed << v;
  return s.str();
}

ClassDecl class_with(const std::string& name, std::int64_t v_u, std::int64_t f_u, std::int64_t v_i,
                     std::int64_t f_i, std::int64_t v_r, std::int64_t f_r) {
  ClassDecl c;
  c.name = name;
  int k = 0;
  auto add = [&](std::int64_t n, MemberKind kind, Visibility vis) {
    for (std::int64_t i = 0; i < n; ++i) c.members.push_back({"m" + std::to_string(k++), kind, vis});
  };
  add(v_u, MemberKind::Variable, Visibility::Public);
  add(f_u, MemberKind::Function, Visibility::Public);
  add(v_i, MemberKind::Variable, Visibility::Private);
  add(f_i, MemberKind::Function, Visibility::Private);
  add(v_r, MemberKind::Variable, Visibility::Protected);
  add(f_r, MemberKind::Function, Visibility::Protected);
  return c;
}

Verdict no_inheritance_fidelity() {
  Verdict v;
  std::mt19937_64 rng(1001);
  const auto start = Clock::now();
  for (int t = 0; t < kNoInheritanceCases; ++t) {
    const auto v_u = fixtures::uniform(rng, 0, 50), f_u = fixtures::uniform(rng, 0, 50);
    auto v_i = fixtures::uniform(rng, 0, 50), f_i = fixtures::uniform(rng, 0, 50);
    if (v_i + f_i == 0) (t % 2 ? v_i : f_i) = 1;
    const auto v_r = fixtures::uniform(rng, 0, 50), f_r = fixtures::uniform(rng, 0, 50);
    const auto n_f = fixtures::uniform(rng, 0, 10);
    const auto counts = count_visibility(class_with("C", v_u, f_u, v_i, f_i, v_r, f_r));
    const auto got = compute_cam(counts, InheritanceSums{}, n_f);
    const auto want = oracle::no_inheritance(v_u, f_u, v_i, f_i, v_r, f_r, n_f);
    if (got.cam != want || got.branch != Branch::NoInheritance || !got.flags.empty()) {
      v.fail("case " + std::to_string(t) + ": got " + to_fraction(got.cam) + ", want " + to_fraction(want));
    }
  }
  const double secs = seconds_since(start);
  if (secs >= kNoInheritanceSeconds) v.fail("took " + fixed(secs) + " s");
  if (v.pass) v.detail = std::to_string(kNoInheritanceCases) + " cases exact in " + fixed(secs) + " s";
  return v;
}

Verdict mode_identity() {
  Verdict v;
  std::mt19937_64 rng(1002);
  for (int t = 0; t < kModeIdentityCases; ++t) {
    const auto n_lu = fixtures::uniform(rng, 0, 8), n_lr = fixtures::uniform(rng, 0, 8);
    const auto i_u = fixtures::uniform(rng, 0, 40), i_r = fixtures::uniform(rng, 0, 40);
    const auto i_i = fixtures::uniform(rng, 1, 40), n_f = fixtures::uniform(rng, 0, 10);

    // Shared sums: every mode sees the same triple.
    InheritanceSums shared;
    for (auto& m : shared.by_mode) m = ModeSums{i_u, i_r, i_i, 1};
    shared.n_lu = n_lu;
    shared.n_lr = n_lr;
    shared.n_i = std::max<std::int64_t>({n_lu, n_lr, 1});
    InheritanceSums pooled = shared;
    pooled.by_mode = {};
    pooled[Visibility::Public] = ModeSums{i_u, i_r, i_i, 1};

    const auto per_edge = compute_cam(VisibilityCounts{}, shared, n_f, CamMode::PerEdge).cam;
    const auto pool = compute_cam(VisibilityCounts{}, pooled, n_f, CamMode::Pooled).cam;
    if (per_edge != pool) {
      v.fail("case " + std::to_string(t) + ": per-edge " + to_fraction(per_edge) + " vs pooled " + to_fraction(pool));
    }
  }
  if (v.pass) v.detail = std::to_string(kModeIdentityCases) + " tuples agree exactly";
  return v;
}

CountsByClass counts_of(const std::vector<ClassDecl>& classes) {
  CountsByClass out;
  for (const auto& c : classes) out.emplace(c.name, count_visibility(c));
  return out;
}

Verdict friend_linearity() {
  Verdict v;
  std::mt19937_64 rng(1003);
  int with_inheritance = 0;
  for (int t = 0; t < kFriendCases; ++t) {
    std::vector<ClassDecl> classes;
    std::string target;
    if (t % 2 == 0) {
      classes.push_back(ClassDecl{"Solo", fixtures::random_members(rng, 8), {}, 0, {}});
      target = "Solo";
    } else {
      // Redraw until some class takes part in inheritance.
      while (target.empty()) {
        classes = fixtures::random_corpus(rng, 6, 6);
        const auto built = build_graph(classes);
        for (const auto& e : built.graph.edges) {
          if (e.resolved) target = (t % 4 == 1) ? e.derived : e.base;
        }
      }
    }
    const auto built = build_graph(classes);
    const auto counts = counts_of(classes);
    const auto sums = inheritance_sums(built.graph, target, counts);
    const auto k = fixtures::uniform(rng, 0, 10);
    for (CamMode mode : {CamMode::PerEdge, CamMode::Pooled}) {
      const auto a = compute_cam(counts.at(target), sums, k, mode);
      const auto b = compute_cam(counts.at(target), sums, k + 1, mode);
      if (b.cam - a.cam != Rational(1)) v.fail("case " + std::to_string(t) + " differs by " + to_fraction(b.cam - a.cam));
      if ((a.branch == Branch::WithInheritance) != (t % 2 == 1)) v.fail("case " + std::to_string(t) + " wrong branch");
    }
    with_inheritance += t % 2;
  }
  if (v.pass) {
    v.detail = std::to_string(kFriendCases) + " fixtures (" + std::to_string(with_inheritance) +
               " with inheritance), both modes";
  }
  return v;
}

Verdict monotonicity() {
  Verdict v;
  std::mt19937_64 rng(1004);
  int private_checks = 0;
  for (int t = 0; t < kMonotonicityCases; ++t) {
    auto v_i = fixtures::uniform(rng, 0, 10), f_i = fixtures::uniform(rng, 0, 10);
    if (v_i + f_i == 0) v_i = 1;
    const ClassDecl base = class_with("C", fixtures::uniform(rng, 0, 10), fixtures::uniform(rng, 0, 10), v_i, f_i,
                                      fixtures::uniform(rng, 0, 10), fixtures::uniform(rng, 0, 10));
    const auto n_f = fixtures::uniform(rng, 0, 10);
    const auto cam_of = [&](const ClassDecl& c) { return compute_cam(count_visibility(c), {}, n_f).cam; };
    const auto before = cam_of(base);
    const auto kind = fixtures::uniform(rng, 0, 1) ? MemberKind::Function : MemberKind::Variable;
    auto with = [&](Visibility vis) {
      ClassDecl c = base;
      c.members.push_back({"added", kind, vis});
      return cam_of(c);
    };
    if (!(with(Visibility::Public) > before)) v.fail("case " + std::to_string(t) + ": public member did not increase");
    if (!(with(Visibility::Protected) > before)) {
      v.fail("case " + std::to_string(t) + ": protected member did not increase");
    }
    const auto counts = count_visibility(base);
    if (counts.s_u + counts.s_r >= 1) {
      ++private_checks;
      if (!(with(Visibility::Private) < before)) v.fail("case " + std::to_string(t) + ": private member did not decrease");
    }
  }
  if (v.pass) {
    v.detail = std::to_string(kMonotonicityCases) + " fixtures, " + std::to_string(private_checks) +
               " private-decrease checks";
  }
  return v;
}

Verdict hierarchy_oracle() {
  Verdict v;
  std::mt19937_64 rng(1005);
  const auto start = Clock::now();
  std::int64_t classes_checked = 0;
  std::int64_t edges_seen = 0;
  for (int t = 0; t < kHierarchyCorpora; ++t) {
    const auto classes = fixtures::random_corpus(rng, kHierarchyMaxClasses, kHierarchyMaxEdges);
    const auto built = build_graph(classes);
    const auto counts = counts_of(classes);
    const auto expected = oracle::brute_force_sums(classes);
    edges_seen += static_cast<std::int64_t>(built.graph.edges.size());
    for (const auto& c : classes) {
      const auto got = inheritance_sums(built.graph, c.name, counts);
      const auto& want = expected.at(c.name);
      bool same = got.n_lu == want.n_lu && got.n_li == want.n_li && got.n_lr == want.n_lr && got.n_i == want.n_i;
      for (Visibility m : kAllVisibilities) {
        const auto& a = got[m];
        const auto& b = want.by_mode[static_cast<std::size_t>(m)];
        same = same && a.i_u == b[0] && a.i_r == b[1] && a.i_i == b[2] && a.edges == b[3];
      }
      if (!same) v.fail("corpus " + std::to_string(t) + ", class " + c.name);
      ++classes_checked;
    }
  }
  const double secs = seconds_since(start);
  if (secs >= kHierarchySeconds) v.fail("took " + fixed(secs) + " s");
  if (v.pass) {
    v.detail = std::to_string(kHierarchyCorpora) + " corpora, " + std::to_string(classes_checked) + " classes, " +
               std::to_string(edges_seen) + " edges in " + fixed(secs) + " s";
  }
  return v;
}

Verdict parser_corpus() {
  Verdict v;
  const auto cases = corpus::list_cases(fs::path(CAM_CORPUS_DIR) / "parser");
  std::size_t malformed = 0;
  std::size_t cross_checked = 0;
  for (const auto& c : cases) {
    const auto outcome = corpus::run_case(c);
    if (!outcome.ok) v.fail(c.input.filename().string() + ": " + outcome.detail);
    if (corpus::is_malformed(c)) {
      ++malformed;
    } else {
      ++cross_checked;
    }
  }
  if (cases.size() < kMinParserFiles) v.fail("only " + std::to_string(cases.size()) + " files");
  if (malformed < kMinMalformedFiles) v.fail("only " + std::to_string(malformed) + " malformed files");
  if (v.pass) {
    v.detail = std::to_string(cases.size()) + " files (" + std::to_string(malformed) + " malformed), " +
               std::to_string(cross_checked) + " valid cases cross-format equal";
  }
  return v;
}

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / ("cam_acceptance_" + std::to_string(::getpid()))) {
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  fs::path write(const std::string& name, const std::string& text) const {
    std::ofstream(path / name, std::ios::binary) << text;
    return path / name;
  }
};

std::vector<std::string> full_corpus() {
  std::vector<std::string> paths;
  const fs::path system = fs::path(CAM_CORPUS_DIR) / "system";
  for (const auto& e : fs::directory_iterator(system)) {
    const auto ext = e.path().extension();
    if (ext == ".hh" || ext == ".json") paths.push_back(e.path().string());
  }
  std::sort(paths.begin(), paths.end());
  return paths;
}

Verdict determinism_and_aggregation() {
  Verdict v;
  TempDir tmp;
  const auto inputs = full_corpus();
  auto analyze = [&](const std::vector<std::string>& extra) {
    std::vector<std::string> args = {"analyze", "--format", "json"};
    args.insert(args.end(), inputs.begin(), inputs.end());
    args.insert(args.end(), extra.begin(), extra.end());
    return testing::run_cli(args);
  };

  const auto first = analyze({});
  const auto second = analyze({});
  if (first.status != 0) v.fail("analyze exited " + std::to_string(first.status) + ": " + first.err);
  if (first.out != second.out) v.fail("two runs differ");
  const auto doc = nlohmann::json::parse(first.out);
  const auto total = doc["system_cumulative_cam"];

  std::vector<std::string> names;
  for (const auto& m : doc["modules"]) {
    for (const auto& c : m["classes"]) names.push_back(c["class"].get<std::string>());
  }

  // Alternative partitions: one module per class, everything in one module,
  // and a hand-written map that cuts across files.
  std::string singletons, together = "all:\n";
  for (const auto& n : names) {
    singletons += "only_" + n + ": [" + n + "]\n";
    together += "  - " + n + "\n";
  }
  const std::vector<std::string> maps = {tmp.write("singletons.yaml", singletons).string(),
                                         tmp.write("together.yaml", together).string(),
                                         (fs::path(CAM_CORPUS_DIR) / "system" / "regroup.yaml").string()};
  for (const auto& map : maps) {
    const auto run = analyze({"--module-map", map});
    const auto regrouped = nlohmann::json::parse(run.out);
    if (run.status != 0) v.fail(map + ": exit " + std::to_string(run.status));
    if (regrouped["system_cumulative_cam"]["num"] != total["num"] ||
        regrouped["system_cumulative_cam"]["den"] != total["den"]) {
      v.fail(map + ": system total changed to " + regrouped["system_cumulative_cam"].dump());
    }
  }
  if (v.pass) {
    v.detail = std::to_string(names.size()) + " classes, " + std::to_string(first.out.size()) +
               " identical bytes, 3 re-partitions keep " + total["num"].dump() + "/" + total["den"].dump();
  }
  return v;
}

Verdict degenerate_inputs() {
  Verdict v;
  TempDir tmp;
  struct Case {
    std::string label;
    std::string source;
    std::string target;
    std::string flag;
  };
  const std::vector<Case> cases = {
      {"empty class", "class Hollow { };\n", "Hollow", "ZeroPrivateSubstituted"},
      {"no private members", "class Open { public: int a; void f(); protected: int b; };\n", "Open",
       "ZeroPrivateSubstituted"},
      {"private edge, i_i = 0", "class Face { public: int x; void f(); };\nclass Hidden : private Face { };\n", "Hidden",
       "ZeroInheritedPrivateSubstituted"},
  };
  for (const auto& c : cases) {
    const auto file = tmp.write(c.target + ".hh", c.source).string();
    const auto json_run = testing::run_cli({"analyze", "--format", "json", file});
    const auto csv_run = testing::run_cli({"analyze", "--format", "csv", file});
    const auto text_run = testing::run_cli({"analyze", "--format", "text", file});
    for (const auto* run : {&json_run, &csv_run, &text_run}) {
      if (run->status != 0) v.fail(c.label + ": exit " + std::to_string(run->status));
    }

    bool found = false;
    const auto doc = nlohmann::json::parse(json_run.out);
    for (const auto& m : doc["modules"]) {
      for (const auto& r : m["classes"]) {
        if (r["class"] != c.target) continue;
        found = true;
        const auto den = r["cam"]["den"].get<std::int64_t>();
        const double approx = std::stod(r["cam"]["approx"].get<std::string>());
        if (den <= 0 || !std::isfinite(approx)) v.fail(c.label + ": cam not finite in JSON");
        bool flagged = false;
        for (const auto& f : r["flags"]) flagged = flagged || f == c.flag;
        if (!flagged) v.fail(c.label + ": flag missing in JSON");
      }
    }
    if (!found) v.fail(c.label + ": class missing in JSON");

    bool csv_ok = false;
    std::istringstream rows(csv_run.out);
    for (std::string row; std::getline(rows, row);) {
      std::vector<std::string> cells;
      std::stringstream cs(row);
      for (std::string cell; std::getline(cs, cell, ',');) cells.push_back(cell);
      if (cells.size() == 11 && cells[1] == c.target) {
        const auto& cam = cells[9];
        const bool finite = !cam.empty() && cam.find_first_not_of("0123456789/-") == std::string::npos &&
                            cam.find("/0") == std::string::npos;
        csv_ok = finite && cells[10].find(c.flag) != std::string::npos;
      }
    }
    if (!csv_ok) v.fail(c.label + ": CSV row lacks a finite cam or the flag");

    bool text_ok = false;
    std::istringstream lines(text_run.out);
    for (std::string line; std::getline(lines, line);) {
      if (line.rfind(c.target + " ", 0) == 0) {
        text_ok = line.find(c.flag) != std::string::npos && line.find("inf") == std::string::npos &&
                  line.find("nan") == std::string::npos;
      }
    }
    if (!text_ok) v.fail(c.label + ": text row lacks the flag");
  }
  if (v.pass) v.detail = "3 inputs x 3 formats carry finite CAM and the substitution flag";
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"no-inheritance formula fidelity", no_inheritance_fidelity},
      {"per-edge and pooled agree on shared sums", mode_identity},
      {"friend linearity", friend_linearity},
      {"member monotonicity", monotonicity},
      {"inheritance sums match the brute-force oracle", hierarchy_oracle},
      {"parser corpus", parser_corpus},
      {"end-to-end determinism and aggregation", determinism_and_aggregation},
      {"degenerate-input policy", degenerate_inputs},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v.fail(std::string("exception: ") + e.what());
    }
    if (!v.pass) ++failures;
    std::cout << (v.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " - "
              << v.detail << "\n";
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
  return failures == 0 ? 0 : 1;
}
