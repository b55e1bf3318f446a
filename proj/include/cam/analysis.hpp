#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cam/diagnostic.hpp"
#include "cam/metric_engine.hpp"
#include "cam/module_map.hpp"
#include "cam/rational.hpp"

namespace cam {

std::string_view tool_version();

struct Config {
  CamMode mode = CamMode::PerEdge;
  std::optional<std::string> module_map_path;
  bool strict = false;  // Warnings become Errors
};

struct ModuleReport {
  std::string module_name;
  std::vector<CamResult> class_results;
  Rational cumulative_cam;
  Rational mean_cam;
  std::int64_t class_count = 0;
};

struct SystemReport {
  std::vector<ModuleReport> modules;  // sorted by module name
  Rational system_cumulative_cam;
  std::vector<Diagnostic> diagnostics;
  std::string tool_version;
  CamMode mode = CamMode::PerEdge;
};

struct SourceInput {
  std::string path;  // .json selects the model loader, anything else the source parser
  std::string text;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// In-memory pipeline. Classes default to the module named by their file's
// stem; `module_map` entries override that.
SystemReport analyze_sources(const std::vector<SourceInput>& inputs, CamMode mode,
                             const std::optional<ModuleMap>& module_map = std::nullopt,
                             bool strict = false);

// Reads every path and runs the pipeline. Unreadable files become Error
// diagnostics. Throws UsageError for an empty input list.
SystemReport run_analysis(const std::vector<std::string>& paths, const Config& config);

// 0 when the report carries no Error diagnostics, 1 otherwise.
int exit_status(const SystemReport& report);

}  // namespace cam
