#pragma once
// Concrete-syntax front end for `.core` sources: parsing into expressions
// and canonical pretty-printing back to text.

#include <optional>
#include <string_view>

#include "cerl/ast.hpp"

namespace cerl {

struct ParseError {
    int line = 0;
    int column = 0;
    std::string message;
    std::vector<std::string> expected;
};
std::string describe(const ParseError& err);

using ParseResult = std::variant<ExprPtr, ParseError>;

// One expression per source. Comments run from '%' to end of line; tokens
// are whitespace insensitive. Atoms starting with '@' are rejected; they
// are reserved for evaluator sentinels.
ParseResult parse_expr(std::string_view src);

// Canonical text form; parsing it yields a structurally equal tree. The
// empty tuple/map aggregates share their spelling with the corresponding
// empty literals, which parse as literals.
std::string format_expr(const Expression& e);
std::string format_expr(const ExprPtr& e);
std::string format_pattern(const Pattern& p);

// Literal-only parser used for inline environment bindings (X=5,Y='ok').
std::optional<Literal> parse_literal_text(std::string_view src);

}  // namespace cerl
