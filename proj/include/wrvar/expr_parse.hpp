#ifndef WRVAR_EXPR_PARSE_HPP
#define WRVAR_EXPR_PARSE_HPP

#include <string>

#include "wrvar/constructions.hpp"

namespace wrvar {

// Grammar:
//   expr  := term { "X" term }                  (direct product, left assoc)
//   term  := "C(" int ")" | "D(" int ")" | "Q8" | "S(" int ")" | "A(" int ")"
//          | "E(" int "," int ")" | "Heis(" int "," int ")"
//          | "Wr(" expr "," expr ")"
//          | "Perm(" int ";" gens ")"            (gens: cycle lists, comma separated)
//          | "(" expr ")"
// Cycle points are 1-based in text.  Throws ParseError with the offset of the
// first bad character.
GroupExpr parse_group_expr(const std::string& text);

}  // namespace wrvar

#endif
