#pragma once
// Program-equivalence harness: evaluates expression pairs under a shared
// configuration and decides observational agreement. Suites can be listed
// in plain-text manifests pairing `.core` files.

#include "cerl/eval.hpp"

namespace cerl {

struct Equivalent {
    ValuePtr value;  // the common result
};
struct Divergent {};  // both sides ran out of fuel
struct Distinct {
    EvalOutcome left;
    EvalOutcome right;
};
using EquivVerdict = std::variant<Equivalent, Divergent, Distinct>;

std::string render_verdict(const EquivVerdict& verdict);

struct Assumption {
    ExprPtr expr;
    Environment env;
    ValuePtr expected;
};

struct EquivCase {
    std::string name;
    ExprPtr left;
    ExprPtr right;
    Environment env;
    ClosureEnv clos;
    std::vector<Assumption> assumptions;  // checked before comparing
};

// Empty result means the case is vacuous: an assumption did not evaluate to
// its expected value, so the comparison says nothing.
std::optional<EquivVerdict> check_equiv(const EquivCase& c,
                                        std::uint64_t fuel);

// Both sides bind X to one expression and Y to another and add them; the
// right side swaps the two. The four hypotheses (each expression keeps its
// value in the plain and in the X-extended environment) hold by
// construction because the generated expressions are closed.
std::vector<EquivCase> gen_swap_binding_cases(std::uint64_t seed,
                                              std::size_t n);

// Same swap inside a single simultaneous let; no assumptions required.
std::vector<EquivCase> gen_simultaneous_swap_cases(std::uint64_t seed,
                                                   std::size_t n);

// An expression against itself wrapped as a nullary closure that is
// immediately applied.
std::vector<EquivCase> gen_fun_wrap_cases(std::uint64_t seed, std::size_t n);

// Manifest lines: `name left.core right.core [env:X=5,Y='ok']`, '#' starts
// a comment, paths are relative to the manifest's directory.
struct ManifestError {
    std::string message;
};
std::variant<std::vector<EquivCase>, ManifestError> load_manifest(
    const std::string& path);

}  // namespace cerl
