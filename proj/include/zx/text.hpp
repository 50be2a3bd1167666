#pragma once

#include "zx/diagram.hpp"
#include "zx/sym.hpp"

#include <string>
#include <string_view>

namespace zx {

// .zx term text format. S-expression grammar, whitespace-insensitive, with
// '#' line comments. parse_term . print_term is the identity on terms.
// (nwire N) in concrete input is sugar for the right-associated wire stack.
std::string print_term(const Diagram& d);
Diagram parse_term(std::string_view text);

// Angle atoms: 0, pi, 3pi/4, -pi/2, 1.5rad, ...
std::string print_angle(const Angle& a);
Angle parse_angle(std::string_view text);

// Symbolic terms extend the grammar with (var NAME in out) leaves, first-class
// (nwire e), and dimension expressions built from naturals, identifiers,
// (+ e e) and (* e e).
std::string print_sym_term(const structural::SymDiagram& d);
structural::SymDiagram parse_sym_term(std::string_view text);

std::string print_dim_expr(const structural::DimExpr& e);

} // namespace zx
