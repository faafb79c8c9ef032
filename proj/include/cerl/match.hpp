#pragma once
// Pattern matching of values against patterns and clause selection.

#include "cerl/values.hpp"

namespace cerl {

// A variable always matches; a literal matches the equal literal value;
// lists and equal-length tuples match componentwise. Everything else fails,
// so maps only ever match a variable pattern. Callers keep patterns linear.
std::optional<Bindings> match_pattern(const Value& v, const Pattern& p);

struct ClauseMatch {
    ExprPtr guard;
    ExprPtr body;
    Bindings bindings;
};

// Tries the i-th clause only; out-of-range indices fail like a mismatch.
std::optional<ClauseMatch> match_clause(const Value& v,
                                        const std::vector<Clause>& cs,
                                        std::size_t i);

}  // namespace cerl
