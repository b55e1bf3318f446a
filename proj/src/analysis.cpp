#include "cam/analysis.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "cam/hierarchy.hpp"
#include "cam/model_loader.hpp"
#include "cam/source_parser.hpp"

#ifndef CAM_TOOL_VERSION
#define CAM_TOOL_VERSION "0.0.0"
#endif

namespace cam {

std::string_view tool_version() { return CAM_TOOL_VERSION; }

namespace {

bool is_model_file(const std::string& path) {
  return std::filesystem::path(path).extension() == ".json";
}

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) return std::nullopt;
  return buf.str();
}

}  // namespace

SystemReport analyze_sources(const std::vector<SourceInput>& inputs, CamMode mode,
                             const std::optional<ModuleMap>& module_map, bool strict) {
  SystemReport report;
  report.tool_version = std::string(tool_version());
  report.mode = mode;

  ParseResult parsed;
  std::map<std::string, std::string> module_of;
  for (const auto& input : inputs) {
    ParseResult one = is_model_file(input.path) ? load_model(input.text, input.path)
                                                : parse_source(input.text, input.path);
    const std::string stem = std::filesystem::path(input.path).stem().string();
    for (const auto& c : one.classes) module_of.emplace(c.name, stem);
    merge_results(parsed, std::move(one));
  }
  report.diagnostics = std::move(parsed.diagnostics);

  if (module_map) {
    std::set<std::string> known;
    for (const auto& c : parsed.classes) known.insert(c.name);
    for (const auto& module : module_map->modules) {
      for (const auto& ref : module.classes) {
        if (!known.count(ref.name)) {
          report.diagnostics.push_back(Diagnostic{Severity::Warning,
                                                  "module map names unknown class '" + ref.name + "'",
                                                  module_map->file, ref.line, ref.column});
          continue;
        }
        module_of[ref.name] = module.name;
      }
    }
  }

  GraphBuild built = build_graph(parsed.classes);
  for (auto& d : built.diagnostics) report.diagnostics.push_back(std::move(d));

  CountsByClass counts;
  for (const auto& c : parsed.classes) counts.emplace(c.name, count_visibility(c));

  std::map<std::string, ModuleReport> modules;
  for (const auto& c : parsed.classes) {
    if (built.aborted.count(c.name)) continue;
    const InheritanceSums sums = inheritance_sums(built.graph, c.name, counts);
    CamResult r = compute_cam(counts.at(c.name), sums, c.friend_count, mode);
    r.class_name = c.name;
    if (built.private_chain.count(c.name)) r.flags |= CamFlag::PrivateChainWarning;

    ModuleReport& m = modules[module_of.at(c.name)];
    m.cumulative_cam += r.cam;
    m.class_count += 1;
    m.class_results.push_back(std::move(r));
  }

  for (auto& [name, m] : modules) {
    m.module_name = name;
    m.mean_cam = m.cumulative_cam / m.class_count;
    report.system_cumulative_cam += m.cumulative_cam;
    report.modules.push_back(std::move(m));
  }

  if (strict) {
    for (auto& d : report.diagnostics) d.severity = Severity::Error;
  }
  return report;
}

SystemReport run_analysis(const std::vector<std::string>& paths, const Config& config) {
  if (paths.empty()) throw UsageError("no input files");

  std::vector<Diagnostic> io_errors;
  std::vector<SourceInput> inputs;
  for (const auto& path : paths) {
    if (auto text = read_file(path)) {
      inputs.push_back(SourceInput{path, std::move(*text)});
    } else {
      io_errors.push_back(Diagnostic{Severity::Error, "cannot read file", path, 1, 1});
    }
  }

  std::optional<ModuleMap> module_map;
  std::vector<Diagnostic> map_diagnostics;
  if (config.module_map_path) {
    if (auto text = read_file(*config.module_map_path)) {
      ModuleMapLoad loaded = load_module_map(*text, *config.module_map_path);
      module_map = std::move(loaded.map);
      map_diagnostics = std::move(loaded.diagnostics);
    } else {
      io_errors.push_back(Diagnostic{Severity::Error, "cannot read module map", *config.module_map_path, 1, 1});
    }
  }

  SystemReport report = analyze_sources(inputs, config.mode, module_map, config.strict);
  std::vector<Diagnostic> all = std::move(io_errors);
  for (auto& d : map_diagnostics) {
    if (config.strict) d.severity = Severity::Error;
    all.push_back(std::move(d));
  }
  for (auto& d : report.diagnostics) all.push_back(std::move(d));
  report.diagnostics = std::move(all);
  return report;
}

int exit_status(const SystemReport& report) { return has_errors(report.diagnostics) ? 1 : 0; }

}  // namespace cam
