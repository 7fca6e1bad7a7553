#pragma once

#include <string_view>

#include "symbez/poly.hpp"

namespace symbez {

enum class BasisMode { kMonomial, kElementary };

/// Parses a polynomial expression.
///
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := base ('^' nonneg-int)?
///   base   := variable | constant | rational | '(' expr ')'
///
/// Variables are X,Y,Z,W (or x0..x3); constants are `omega` and `I`;
/// rationals are `p` or `p/q`. In elementary mode e1..e4 are accepted and
/// expanded into the monomial basis.
///
/// Throws ParseError on syntax errors, unknown identifiers, or variables
/// outside the ambient dimension.
MultiPoly parse_poly(std::string_view text, int num_vars, BasisMode mode = BasisMode::kMonomial);

}  // namespace symbez
