#pragma once
// The semantic domain evaluation results live in. Values are normal forms by
// construction and are never re-evaluated.

#include "cerl/env.hpp"

namespace cerl {

struct VLiteral {
    Literal lit;
};
struct VClosure {
    ClosureRef ref;
    std::vector<std::string> params;
    ExprPtr body;
};
struct VList {
    ValuePtr head;
    ValuePtr tail;
};
struct VTuple {
    std::vector<ValuePtr> elements;
};
struct VMap {
    // Kept verbatim as evaluated: no key deduplication, no ordering.
    std::vector<ValuePtr> keys;
    std::vector<ValuePtr> values;
};

struct Value {
    std::variant<VLiteral, VClosure, VList, VTuple, VMap> node;
};

ValuePtr vlit(Literal lit);
ValuePtr vint(std::int64_t v);
ValuePtr vatom(std::string text);
ValuePtr vclosure(ClosureRef ref, std::vector<std::string> params,
                  ExprPtr body);
ValuePtr vlist(ValuePtr head, ValuePtr tail);
ValuePtr vtuple(std::vector<ValuePtr> elements);
ValuePtr vmap(std::vector<ValuePtr> keys, std::vector<ValuePtr> values);

// The boolean atoms guards must evaluate to.
const ValuePtr& tt();
const ValuePtr& ff();
bool is_tt(const Value& v);
bool is_ff(const Value& v);

// Structural equality. Closures compare by ref, parameter list and body;
// concrete refs compare as ordered association lists.
bool value_eq(const Value& a, const Value& b);
bool value_eq(const ValuePtr& a, const ValuePtr& b);
bool closure_ref_eq(const ClosureRef& a, const ClosureRef& b);

// Display form: integers as decimal, atoms as 'name', lists as [h|t],
// tuples as {a,b}, maps as ~{k=>v}~, closures as #closure<params>/ref-tag.
std::string render_value(const Value& v);
std::string render_value(const ValuePtr& v);
std::string render_literal(const Literal& lit);
std::string render_environment(const Environment& env);

}  // namespace cerl
