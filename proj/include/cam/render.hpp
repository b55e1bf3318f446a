#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "cam/analysis.hpp"

namespace cam {

enum class ReportFormat { Text, Json, Csv };

std::optional<ReportFormat> parse_format(std::string_view text);

struct RenderOptions {
  bool color = false;  // ANSI styling, Text format only
};

// Json: fixed key order, rationals as {"num","den","approx"} with a
// six-digit decimal approximation.
// Csv: one row per class, rationals as exact fractions, flags joined by ';'.
// Text: one table over all classes, by descending CAM then class name.
std::string render_report(const SystemReport& report, ReportFormat format,
                          const RenderOptions& options = {});

}  // namespace cam
