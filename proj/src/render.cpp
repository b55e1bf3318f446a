#include "cam/render.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace cam {

std::optional<ReportFormat> parse_format(std::string_view text) {
  if (text == "text") return ReportFormat::Text;
  if (text == "json") return ReportFormat::Json;
  if (text == "csv") return ReportFormat::Csv;
  return std::nullopt;
}

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json rational_json(const Rational& r) {
  ordered_json j;
  j["num"] = r.numerator();
  j["den"] = r.denominator();
  j["approx"] = to_decimal(r, 6);
  return j;
}

std::vector<std::string> flag_names(CamFlags flags) {
  std::vector<std::string> out;
  for (CamFlag f : kAllFlags) {
    if (flags.has(f)) out.emplace_back(to_string(f));
  }
  return out;
}

std::string render_json(const SystemReport& report) {
  ordered_json root;
  root["tool_version"] = report.tool_version;
  root["mode"] = std::string(to_string(report.mode));
  root["system_cumulative_cam"] = rational_json(report.system_cumulative_cam);
  root["modules"] = ordered_json::array();
  for (const auto& m : report.modules) {
    ordered_json mj;
    mj["module_name"] = m.module_name;
    mj["cumulative_cam"] = rational_json(m.cumulative_cam);
    mj["mean_cam"] = rational_json(m.mean_cam);
    mj["classes"] = ordered_json::array();
    for (const auto& c : m.class_results) {
      ordered_json cj;
      cj["class"] = c.class_name;
      cj["branch"] = std::string(to_string(c.branch));
      cj["c_an"] = c.c_an ? rational_json(*c.c_an) : ordered_json(nullptr);
      cj["c_au"] = rational_json(c.c_au);
      cj["c_ai"] = rational_json(c.c_ai);
      cj["c_ar"] = rational_json(c.c_ar);
      cj["n_f"] = c.n_f;
      cj["cam"] = rational_json(c.cam);
      cj["flags"] = flag_names(c.flags);
      mj["classes"].push_back(std::move(cj));
    }
    root["modules"].push_back(std::move(mj));
  }
  root["diagnostics"] = ordered_json::array();
  for (const auto& d : report.diagnostics) {
    ordered_json dj;
    dj["severity"] = std::string(to_string(d.severity));
    dj["file"] = d.file;
    dj["line"] = d.line;
    dj["column"] = d.column;
    dj["message"] = d.message;
    root["diagnostics"].push_back(std::move(dj));
  }
  return root.dump(2) + "\n";
}

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\r\n") == std::string::npos) return value;
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += sep;
    out += p;
  }
  return out;
}

std::string render_csv(const SystemReport& report) {
  std::string out = "module,class,branch,mode,c_an,c_au,c_ai,c_ar,n_f,cam,flags\n";
  for (const auto& m : report.modules) {
    for (const auto& c : m.class_results) {
      const std::vector<std::string> row = {
          csv_field(m.module_name),
          csv_field(c.class_name),
          std::string(to_string(c.branch)),
          std::string(to_string(c.mode)),
          c.c_an ? to_fraction(*c.c_an) : "",
          to_fraction(c.c_au),
          to_fraction(c.c_ai),
          to_fraction(c.c_ar),
          std::to_string(c.n_f),
          to_fraction(c.cam),
          join(flag_names(c.flags), ";"),
      };
      out += join(row, ",") + "\n";
    }
  }
  return out;
}

struct Style {
  bool on;
  std::string bold() const { return on ? "\x1b[1m" : ""; }
  std::string red() const { return on ? "\x1b[31m" : ""; }
  std::string yellow() const { return on ? "\x1b[33m" : ""; }
  std::string reset() const { return on ? "\x1b[0m" : ""; }
};

std::string with_decimal(const Rational& r) {
  return to_fraction(r) + " (" + to_decimal(r, 6) + ")";
}

std::string render_text(const SystemReport& report, const RenderOptions& options) {
  const Style style{options.color};
  struct Row {
    const std::string* module;
    const CamResult* result;
  };
  std::vector<Row> rows;
  for (const auto& m : report.modules) {
    for (const auto& c : m.class_results) rows.push_back(Row{&m.module_name, &c});
  }
  std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.result->cam != b.result->cam) return a.result->cam > b.result->cam;
    if (a.result->class_name != b.result->class_name) return a.result->class_name < b.result->class_name;
    return *a.module < *b.module;
  });

  std::vector<std::vector<std::string>> table;
  table.push_back({"CLASS", "MODULE", "CAM", "APPROX", "BRANCH", "C_AN", "C_AU", "C_AI", "C_AR", "N_F", "FLAGS"});
  for (const Row& row : rows) {
    const CamResult& c = *row.result;
    table.push_back({c.class_name, *row.module, to_fraction(c.cam), to_decimal(c.cam, 6),
                     std::string(to_string(c.branch)), c.c_an ? to_fraction(*c.c_an) : "-",
                     to_fraction(c.c_au), to_fraction(c.c_ai), to_fraction(c.c_ar),
                     std::to_string(c.n_f), c.flags.empty() ? "-" : join(flag_names(c.flags), ",")});
  }
  std::vector<std::size_t> widths(table.front().size(), 0);
  for (const auto& line : table) {
    for (std::size_t i = 0; i < line.size(); ++i) widths[i] = std::max(widths[i], line[i].size());
  }

  std::ostringstream out;
  out << style.bold() << "Class Activeness Metric report" << style.reset() << " (mode " << to_string(report.mode)
      << ", cam " << report.tool_version << ")\n\n";
  for (std::size_t r = 0; r < table.size(); ++r) {
    std::string line;
    for (std::size_t i = 0; i < table[r].size(); ++i) {
      std::string cell = table[r][i];
      if (i + 1 < table[r].size()) cell.resize(widths[i], ' ');
      line += (i == 0 ? "" : "  ") + cell;
    }
    if (r == 0) {
      out << style.bold() << line << style.reset() << "\n";
    } else {
      out << line << "\n";
    }
  }
  if (rows.empty()) out << "(no classes)\n";

  out << "\n" << style.bold() << "Modules" << style.reset() << "\n";
  for (const auto& m : report.modules) {
    out << "  " << m.module_name << ": " << m.class_count << (m.class_count == 1 ? " class" : " classes")
        << ", cumulative " << with_decimal(m.cumulative_cam) << ", mean " << with_decimal(m.mean_cam) << "\n";
  }
  out << "\nSystem cumulative CAM: " << with_decimal(report.system_cumulative_cam) << "\n";

  if (!report.diagnostics.empty()) {
    out << "\n" << style.bold() << "Diagnostics" << style.reset() << "\n";
    for (const auto& d : report.diagnostics) {
      const std::string color = d.severity == Severity::Error ? style.red() : style.yellow();
      out << "  " << d.file << ":" << d.line << ":" << d.column << ": " << color << to_string(d.severity)
          << style.reset() << ": " << d.message << "\n";
    }
  }
  return out.str();
}

}  // namespace

std::string render_report(const SystemReport& report, ReportFormat format, const RenderOptions& options) {
  switch (format) {
    case ReportFormat::Json:
      return render_json(report);
    case ReportFormat::Csv:
      return render_csv(report);
    case ReportFormat::Text:
      return render_text(report, options);
  }
  return {};
}

}  // namespace cam
