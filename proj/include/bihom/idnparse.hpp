#pragma once

#include <string>

#include "bihom/ir.hpp"

namespace bihom {

/// Parse error with source position.
struct ParseError : Error {
    int line, col;
    ParseError(int line_, int col_, const std::string& msg)
        : Error("line " + std::to_string(line_) + ", col " + std::to_string(col_) + ": " + msg),
          line(line_), col(col_) {}
};

/// Parses one identity-set source file. The grammar, also documented in the
/// README:
///
///   file      := { decl | identity }
///   decl      := "set" NAME
///              | "sort" NAME ("algebra" | "module" | "dual_module")
///              | "map"  NAME ":" SORT "->" SORT
///              | "prod" NAME ":" SORT "," SORT "->" SORT
///              | "act"  NAME ":" SORT "on" SORT ("left" | "right")
///              | "param" NAME
///   identity  := "identity" NAME "over" group { "," group } ":" sum "=" "0"
///   group     := SORT "(" NAME { "," NAME } ")"
///   sum       := ["+"|"-"] term { ("+"|"-") term }
///   term      := [ RAT "*" ] [ PARAM "*" ] expr
///   expr      := mapword "(" expr ")" | SYM "(" expr "," expr ")" | VAR
///   mapword   := MAP [ "^" NAT ] [ "." mapword ]
///
/// Comments run from '#' to end of line; whitespace including newlines is
/// insignificant between tokens. Map-word sugar expands to nested MapApply
/// nodes: alpha^2.beta(x) parses as alpha(alpha(beta(x))).
IdentitySet parse_identity_file(const std::string& text);

/// Canonical textual form; parse(print(s)) is structurally equal to s.
/// Printing uses no map-word sugar.
std::string print_identity_set(const IdentitySet& set);

std::string print_expr(const Expr& e, const IdentitySet& set, const Identity& id);

}  // namespace bihom
