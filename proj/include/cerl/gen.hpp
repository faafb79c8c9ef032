#pragma once
// Seeded random generators for values and programs, shared by the property
// tests and the equivalence harness. Generation is deterministic per seed.

#include <random>

#include "cerl/values.hpp"

namespace cerl::gen {

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }
    std::size_t below(std::size_t n) { return n ? next() % n : 0; }
    // Inclusive bounds.
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(
                        below(static_cast<std::size_t>(hi - lo + 1)));
    }
    bool percent(unsigned p) { return below(100) < p; }

    template <typename T>
    const T& pick(const std::vector<T>& pool) {
        return pool[below(pool.size())];
    }

  private:
    std::mt19937_64 eng_;
};

Literal literal(Rng& rng);
ValuePtr value(Rng& rng, int depth);

// Closed expression guaranteed to evaluate successfully at a modest fuel
// bound: applications only ever reach non-recursive closures (plus one
// canned counting-down recursion), guards are boolean literals and every
// case carries a catch-all clause.
ExprPtr terminating_expr(Rng& rng, int depth);

// Arbitrary well-formed syntax for parser round-trips: free variables and
// unbound identifiers allowed, no promise of evaluability. Avoids the empty
// tuple/map/list aggregates whose spelling belongs to the empty literals.
ExprPtr well_formed_expr(Rng& rng, int depth);

}  // namespace cerl::gen
