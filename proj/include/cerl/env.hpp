#pragma once
// Evaluation environments: ordered association lists binding variables and
// function identifiers to values, plus the closure environment that gives
// recursively defined functions access to their defining scope without
// nesting environments inside themselves.

#include <optional>
#include <utility>

#include "cerl/ast.hpp"

namespace cerl {

struct Value;
using ValuePtr = std::shared_ptr<const Value>;

using EnvKey = std::variant<std::string, FunctionIdentifier>;
std::string render_env_key(const EnvKey& key);

// Insertion order is significant: replacing a binding keeps its position,
// new bindings are appended. That keeps renderings and structural
// comparisons deterministic.
struct Environment {
    std::vector<std::pair<EnvKey, ValuePtr>> entries;

    bool empty() const { return entries.empty(); }
    std::size_t size() const { return entries.size(); }
};

struct ClosureEnv {
    std::vector<std::pair<FunctionIdentifier, Environment>> entries;

    bool empty() const { return entries.empty(); }
    std::size_t size() const { return entries.size(); }
};

// A closure either carries its defining environment directly or names the
// function identifier under which that environment is stored.
using ClosureRef = std::variant<Environment, FunctionIdentifier>;

// Pattern-match results and parameter bindings, in binding order.
using Bindings = std::vector<std::pair<std::string, ValuePtr>>;

std::optional<ValuePtr> get_value(const Environment& env, const EnvKey& key);

// Replaces in place when the key exists, appends otherwise.
Environment insert_value(Environment env, EnvKey key, ValuePtr value);

Environment add_bindings(const Bindings& bindings, Environment env);

// Pairwise insert, left to right. Empty result signals an arity mismatch.
std::optional<Environment> append_vars_to_env(
    const std::vector<std::string>& vars, const std::vector<ValuePtr>& vals,
    Environment env);

// Binds each identifier to a closure that references itself by name, never
// to one embedding the environment being built.
std::optional<Environment> append_funs_to_env(
    const std::vector<FunctionIdentifier>& fnames,
    const std::vector<FunDef>& funs, Environment env);

Environment get_env(const ClosureRef& ref, const ClosureEnv& clos);
Environment get_env_from_closure(const FunctionIdentifier& fid,
                                 const ClosureEnv& clos);

ClosureEnv set_closure(ClosureEnv clos, FunctionIdentifier fid,
                       Environment env);
ClosureEnv append_funs_to_closure(const std::vector<FunctionIdentifier>& fnames,
                                  ClosureEnv clos, const Environment& env);

// Ordered structural equality (defined with value_eq in values.cpp).
bool env_eq(const Environment& a, const Environment& b);
bool closure_env_eq(const ClosureEnv& a, const ClosureEnv& b);

}  // namespace cerl
