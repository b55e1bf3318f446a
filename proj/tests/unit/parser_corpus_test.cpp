#include <set>

#include <doctest.h>

#include "corpus.hpp"

using namespace cam;

TEST_CASE("every corpus case matches its fixtures") {
  const auto cases = corpus::list_cases(CAM_CORPUS_DIR "/parser");
  REQUIRE(cases.size() >= 25);
  for (const auto& c : cases) {
    CAPTURE(c.input.filename().string());
    const auto outcome = corpus::run_case(c);
    INFO(outcome.detail);
    CHECK(outcome.ok);
  }
}

TEST_CASE("corpus exercises every grammar production") {
  // Each production name maps to a corpus case that needs it to parse.
  const std::set<std::string> required = {
      "v01_empty_class.hh",       // class_decl with no items
      "v02_public_inheritance.hh",  // base_clause, vis_label, friend_decl, param_list
      "v03_default_private.hh",     // member_decl without label
      "v05_multiple_bases.hh",      // base_spec with and without mode
      "v06_multi_declarators.hh",   // declarator lists
      "v07_pointers_refs.hh",       // type_tokens with * and &
      "v08_balanced_params.hh",     // token_balanced
      "v17_empty_labels.hh",        // consecutive vis_labels, friend class
  };
  std::set<std::string> present;
  for (const auto& c : corpus::list_cases(CAM_CORPUS_DIR "/parser")) present.insert(c.input.filename().string());
  for (const auto& r : required) {
    CAPTURE(r);
    CHECK(present.count(r) == 1);
  }
}
