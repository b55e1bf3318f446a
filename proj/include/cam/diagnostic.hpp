#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cam/class_model.hpp"

namespace cam {

enum class Severity { Error, Warning };

std::string_view to_string(Severity s);

// Line and column are 1-based; column counts bytes.
struct Diagnostic {
  Severity severity = Severity::Error;
  std::string message;
  std::string file;
  int line = 1;
  int column = 1;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

struct ParseResult {
  std::vector<ClassDecl> classes;
  std::vector<Diagnostic> diagnostics;

  bool has_errors() const;
};

bool has_errors(const std::vector<Diagnostic>& diagnostics);

}  // namespace cam
