#pragma once
// Fuel-bounded big-step evaluator. Every successful evaluation carries a
// derivation tree recording which rule fired at each node, with enough
// evidence for an independent validator to recheck it.

#include <functional>
#include <map>
#include <span>

#include "cerl/match.hpp"

namespace cerl {

inline constexpr std::uint64_t kDefaultFuel = 10000;

struct EvalConfig {
    Environment env;
    ClosureEnv clos;
    ExprPtr expr;
    std::uint64_t fuel = kDefaultFuel;
};

// ----------------------------------------------------------------- errors

struct UnboundIdentifier {
    EnvKey key;
};
struct NotAClosure {
    ValuePtr value;
};
struct BadArity {
    std::size_t expected = 0;
    std::size_t got = 0;
};
struct NoMatchingClause {};
struct NonBooleanGuard {
    ValuePtr value;
};
struct LengthMismatch {
    std::string site;  // "let", "letrec" or "map"
};
struct OutOfFuel {};

struct EvalError {
    std::variant<UnboundIdentifier, NotAClosure, BadArity, NoMatchingClause,
                 NonBooleanGuard, LengthMismatch, OutOfFuel>
        reason;
    std::string path;  // failing sub-expression, e.g. "/binds[0]/target"
};

const char* eval_error_name(const EvalError& err);
std::string describe(const EvalError& err);

// ------------------------------------------------------------- derivations

// Rule identifiers, fixed because they appear in the serialized derivation
// format: 1 literal, 2 var, 3 funsig, 4 fun, 5 tuple, 6 case, 7 call,
// 8 apply, 9 let, 10 letrec, 11 map, 12 list cons.
enum Rule : int {
    kRuleLiteral = 1,
    kRuleVar = 2,
    kRuleFunSig = 3,
    kRuleFun = 4,
    kRuleTuple = 5,
    kRuleCase = 6,
    kRuleCall = 7,
    kRuleApply = 8,
    kRuleLet = 9,
    kRuleLetrec = 10,
    kRuleMap = 11,
    kRuleList = 12,
};
int rule_for(const Expression& e);

struct DerivationNode;
using DerivPtr = std::shared_ptr<const DerivationNode>;

// Why an earlier case clause was passed over: either its pattern did not
// match (guard_false is null) or its guard evaluated to 'false'.
struct CaseSkip {
    std::size_t clause = 0;
    DerivPtr guard_false;
};
struct CaseEvidence {
    std::size_t chosen = 0;
    std::vector<CaseSkip> skipped;  // one entry per clause before chosen
};

// Premise layout per rule:
//   tuple   elements...            list    head, tail
//   case    scrutinee, guard, body
//   call    args...                apply   args..., target, body
//   let     binds..., body         letrec  body
//   map     keys..., values...
struct DerivationNode {
    int rule = 0;
    Environment env;
    ClosureEnv clos;
    ExprPtr expr;
    ValuePtr result;
    std::vector<DerivPtr> premises;
    std::optional<CaseEvidence> case_evidence;  // rule 6 only
};

struct Success {
    ValuePtr value;
    DerivPtr derivation;
};
using EvalOutcome = std::variant<Success, EvalError>;

// Recursion depth tracks remaining fuel; entering a node costs one unit and
// fuel 0 reports OutOfFuel.
EvalOutcome eval_expr(const EvalConfig& cfg);

// Same evaluation on a dedicated thread with a large stack, for fuel bounds
// deeper than the caller's stack can guarantee.
EvalOutcome eval_expr_stacked(const EvalConfig& cfg,
                              std::size_t stack_bytes = std::size_t{256}
                                                        << 20);

// ---------------------------------------------------------------- builtins

using BuiltinFn = std::function<ValuePtr(std::span<const ValuePtr>)>;

// Inter-module calls are simulated by a name-keyed table. Only "plus" is
// registered; unknown names yield the '@undef' atom and "plus" on anything
// but two integers yields '@badarith'. The sentinel atoms start with '@',
// which the concrete syntax rejects, so programs cannot forge them.
class BuiltinRegistry {
  public:
    void register_fn(std::string name, BuiltinFn fn);
    ValuePtr apply(const std::string& fname,
                   std::span<const ValuePtr> vals) const;
    static const BuiltinRegistry& standard();

  private:
    std::map<std::string, BuiltinFn> table_;
};

ValuePtr builtin_eval(const std::string& fname, std::span<const ValuePtr> vals);

}  // namespace cerl
