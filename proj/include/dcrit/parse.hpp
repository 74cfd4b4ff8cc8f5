#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dcrit/exterior.hpp"
#include "dcrit/poly.hpp"

namespace dcrit {

// Grammar (whitespace insignificant):
//   expr     := ['+'|'-'] term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := atom ('^' nat)*
//   atom     := rational | var | '(' expr ')'
//   rational := int ('/' posint)?

Poly parse_poly(std::string_view src, const VarList& vars);

/// Comma-separated list of polynomials.
std::vector<Poly> parse_poly_list(std::string_view src, const VarList& vars);

/// Comma-separated variable names, e.g. "x,y,z". Empty input gives no variables.
VarList parse_vars(std::string_view src);

/// Comma-separated positive integers.
std::vector<unsigned> parse_weights(std::string_view src);

/// Sum of `expr * gen (/\ gen)*` terms (a bare `gen` chain is allowed,
/// as are generator-free terms). Generator tokens are matched against
/// `ambient->basis` literally, e.g. "@x" or "d_x".
ExtElt parse_graded(std::string_view src, const AmbientPtr& ambient);

}  // namespace dcrit
