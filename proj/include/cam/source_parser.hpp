#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cam/diagnostic.hpp"

namespace cam {

// Parses the class-declaration subset:
//
//   file        := class_decl* ;
//   class_decl  := "class" IDENT base_clause? "{" item* "}" ";" ;
//   base_clause := ":" base_spec ("," base_spec)* ;
//   base_spec   := ("public" | "private" | "protected")? IDENT ;
//   item        := vis_label | friend_decl | member_decl ;
//   vis_label   := ("public" | "private" | "protected") ":" ;
//   friend_decl := "friend" token* ";" ;
//   member_decl := type_tokens declarator ("," declarator)* ";" ;
//   declarator  := ("*" | "&")* IDENT param_list? ;
//   param_list  := "(" token_balanced* ")" ;
//   type_tokens := IDENT+ ("*" | "&")* ;
//
// plus special members such as destructors or operators, which count as
// member functions. Members and bases default to private. Any construct
// outside the subset yields an Error and the enclosing class is dropped.
ParseResult parse_source(std::string_view text, const std::string& file);

// Appends `next` to `into`, reporting classes whose name is already present
// as Errors and dropping them.
void merge_results(ParseResult& into, ParseResult next);

}  // namespace cam
