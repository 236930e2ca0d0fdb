#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "lawforge/schema.hpp"

namespace lawforge {

struct ParseError {
  int line = 1;    // 1-based
  int column = 1;  // 1-based
  std::string message;
  std::string expected;  // optional token-set description

  std::string to_string() const;
};

// Parses `.adt` declaration text. The result contains the built-in
// declarations followed by the parsed ones in source order. validate() is
// run on the result; its first diagnostic is converted to a ParseError.
//
// Grammar:
//   decl  := "data" Name param* "=" ctor ("|" ctor)*
//          | "data" Name param*                      (empty type)
//   ctor  := Name atom*
//   atom  := PrimName | paramName | Name | "(" Name atom+ ")"
//
// Line comments start with "--". Declarations are separated by ";" or by
// the next "data" keyword. Type and constructor names start with an upper
// case letter, parameter names with a lower case letter.
std::variant<Schema, ParseError> parse_schema(std::string_view text);

// Parses a single ground type expression such as "Int" or "List Int".
std::variant<TypeExpr, ParseError> parse_ground_type(std::string_view text,
                                                     const Schema& schema);

// Canonical declaration text, e.g. "data List a = Nil | Cons a (List a)".
std::string format_decl(const DataDecl& decl);

// All declarations from index `from` onward, one per line. Pass
// schema.builtin_count() to print only user declarations.
std::string format_schema(const Schema& schema, std::size_t from = 0);

}  // namespace lawforge
