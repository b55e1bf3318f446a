#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <unistd.h>

#include <CLI11.hpp>

#include "cam/analysis.hpp"
#include "cam/render.hpp"

namespace {

constexpr int kUsageError = 2;

void print_diagnostics(const cam::SystemReport& report) {
  for (const auto& d : report.diagnostics) {
    std::cerr << d.file << ":" << d.line << ":" << d.column << ": " << cam::to_string(d.severity) << ": "
              << d.message << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Class Activeness Metric analyzer", "cam"};
  app.set_version_flag("--version", std::string(cam::tool_version()));
  app.require_subcommand(1);

  std::vector<std::string> paths;
  std::string format = "text";
  std::string mode = "per-edge";
  std::string module_map;
  std::string out_path;
  bool strict = false;

  CLI::App* analyze = app.add_subcommand("analyze", "Compute CAM for every class in the inputs");
  analyze->add_option("paths", paths, "Class-subset source files or .json model documents")->required();
  analyze->add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  analyze->add_option("--mode", mode, "CAM computation mode")
      ->check(CLI::IsMember({"per-edge", "pooled"}))
      ->capture_default_str();
  analyze->add_option("--module-map", module_map, "YAML file mapping module names to class lists");
  analyze->add_option("--out", out_path, "Write the report to this file instead of stdout");
  analyze->add_flag("--strict", strict, "Treat warnings as errors");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsageError;
  }

  cam::Config config;
  config.mode = mode == "pooled" ? cam::CamMode::Pooled : cam::CamMode::PerEdge;
  config.strict = strict;
  if (!module_map.empty()) config.module_map_path = module_map;

  cam::SystemReport report;
  try {
    report = cam::run_analysis(paths, config);
  } catch (const cam::UsageError& e) {
    std::cerr << "cam: " << e.what() << "\n";
    return kUsageError;
  }

  const cam::ReportFormat fmt = *cam::parse_format(format);
  cam::RenderOptions options;
  options.color = fmt == cam::ReportFormat::Text && out_path.empty() && std::getenv("NO_COLOR") == nullptr &&
                  isatty(fileno(stdout));
  const std::string rendered = cam::render_report(report, fmt, options);

  if (fmt != cam::ReportFormat::Text) print_diagnostics(report);

  if (out_path.empty()) {
    std::cout << rendered;
    std::cout.flush();
  } else {
    std::ofstream out(out_path, std::ios::binary);
    out << rendered;
    if (!out) {
      std::cerr << "cam: cannot write " << out_path << "\n";
      return 1;
    }
  }
  return cam::exit_status(report);
}
