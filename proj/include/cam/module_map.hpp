#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cam/diagnostic.hpp"

namespace cam {

// Explicit class-to-module grouping, read from a YAML mapping of
// `module_name: [ClassA, ClassB]`.
struct ModuleMap {
  struct ClassRef {
    std::string name;
    int line = 1;
    int column = 1;
  };
  struct Module {
    std::string name;
    std::vector<ClassRef> classes;
  };

  std::string file;
  std::vector<Module> modules;
};

struct ModuleMapLoad {
  ModuleMap map;
  std::vector<Diagnostic> diagnostics;
};

// A class listed under two modules is an Error; the first listing wins.
ModuleMapLoad load_module_map(std::string_view text, const std::string& file);

}  // namespace cam
