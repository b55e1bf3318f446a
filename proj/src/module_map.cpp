#include "cam/module_map.hpp"

#include <map>

#include <yaml-cpp/yaml.h>

namespace cam {

ModuleMapLoad load_module_map(std::string_view text, const std::string& file) {
  ModuleMapLoad out;
  out.map.file = file;
  auto diagnose = [&](Severity s, const YAML::Mark& mark, std::string message) {
    const int line = mark.line >= 0 ? mark.line + 1 : 1;
    const int column = mark.column >= 0 ? mark.column + 1 : 1;
    out.diagnostics.push_back(Diagnostic{s, std::move(message), file, line, column});
  };

  YAML::Node root;
  try {
    root = YAML::Load(std::string(text));
  } catch (const YAML::Exception& e) {
    diagnose(Severity::Error, e.mark, "invalid module map: " + e.msg);
    return out;
  }
  if (root.IsNull()) return out;
  if (!root.IsMap()) {
    diagnose(Severity::Error, root.Mark(), "module map must be a mapping of module name to class list");
    return out;
  }

  std::map<std::string, std::string> owner;
  for (const auto& entry : root) {
    const YAML::Node& key = entry.first;
    const YAML::Node& value = entry.second;
    if (!key.IsScalar() || key.Scalar().empty()) {
      diagnose(Severity::Error, key.Mark(), "module name must be a non-empty string");
      continue;
    }
    const std::string module = key.Scalar();
    if (!value.IsSequence()) {
      diagnose(Severity::Error, value.Mark(), "module '" + module + "' must list class names");
      continue;
    }
    std::vector<ModuleMap::ClassRef> names;
    for (const auto& item : value) {
      if (!item.IsScalar() || !is_identifier(item.Scalar())) {
        diagnose(Severity::Error, item.Mark(), "module '" + module + "' lists an invalid class name");
        continue;
      }
      const std::string& name = item.Scalar();
      auto [it, inserted] = owner.emplace(name, module);
      if (!inserted) {
        diagnose(Severity::Error, item.Mark(),
                 "class '" + name + "' is already assigned to module '" + it->second + "'");
        continue;
      }
      names.push_back(ModuleMap::ClassRef{name, item.Mark().line + 1, item.Mark().column + 1});
    }
    out.map.modules.push_back(ModuleMap::Module{module, std::move(names)});
  }
  return out;
}

}  // namespace cam
