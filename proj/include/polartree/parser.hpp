#ifndef POLARTREE_PARSER_HPP
#define POLARTREE_PARSER_HPP

#include <string_view>

#include "polartree/bipoly.hpp"

namespace polartree {

struct ParseOptions {
    /// Field used for the symbol zeta; null means zeta is rejected.
    FieldPtr field;
    bool laurent = false;
};

/// Integers, a/b, x, y, zeta, + - * / ^ and parentheses. Division is by
/// nonzero constants only. Errors carry the line and column.
BiPoly parse_expression(std::string_view text, const ParseOptions& options = {});

/// Exact constant such as "3/2" or "1/2 + zeta".
Cyclo parse_constant(std::string_view text, const ParseOptions& options = {});

}  // namespace polartree

#endif
