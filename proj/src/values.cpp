#include "cerl/values.hpp"

#include <sstream>

namespace cerl {

ValuePtr vlit(Literal lit) {
    return std::make_shared<const Value>(Value{VLiteral{std::move(lit)}});
}
ValuePtr vint(std::int64_t v) { return vlit(Integer{v}); }
ValuePtr vatom(std::string text) { return vlit(Atom{std::move(text)}); }
ValuePtr vclosure(ClosureRef ref, std::vector<std::string> params,
                  ExprPtr body) {
    return std::make_shared<const Value>(
        Value{VClosure{std::move(ref), std::move(params), std::move(body)}});
}
ValuePtr vlist(ValuePtr head, ValuePtr tail) {
    return std::make_shared<const Value>(
        Value{VList{std::move(head), std::move(tail)}});
}
ValuePtr vtuple(std::vector<ValuePtr> elements) {
    return std::make_shared<const Value>(Value{VTuple{std::move(elements)}});
}
ValuePtr vmap(std::vector<ValuePtr> keys, std::vector<ValuePtr> values) {
    return std::make_shared<const Value>(
        Value{VMap{std::move(keys), std::move(values)}});
}

const ValuePtr& tt() {
    static const ValuePtr v = vatom("true");
    return v;
}
const ValuePtr& ff() {
    static const ValuePtr v = vatom("false");
    return v;
}
bool is_tt(const Value& v) { return value_eq(v, *tt()); }
bool is_ff(const Value& v) { return value_eq(v, *ff()); }

// ---------------------------------------------------------------- equality

bool env_eq(const Environment& a, const Environment& b) {
    if (a.entries.size() != b.entries.size()) return false;
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
        if (a.entries[i].first != b.entries[i].first) return false;
        if (!value_eq(a.entries[i].second, b.entries[i].second)) return false;
    }
    return true;
}

bool closure_env_eq(const ClosureEnv& a, const ClosureEnv& b) {
    if (a.entries.size() != b.entries.size()) return false;
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
        if (a.entries[i].first != b.entries[i].first) return false;
        if (!env_eq(a.entries[i].second, b.entries[i].second)) return false;
    }
    return true;
}

bool closure_ref_eq(const ClosureRef& a, const ClosureRef& b) {
    if (a.index() != b.index()) return false;
    if (const auto* ea = std::get_if<Environment>(&a))
        return env_eq(*ea, std::get<Environment>(b));
    return std::get<FunctionIdentifier>(a) == std::get<FunctionIdentifier>(b);
}

bool value_eq(const Value& a, const Value& b) {
    if (a.node.index() != b.node.index()) return false;
    if (const auto* x = std::get_if<VLiteral>(&a.node))
        return x->lit == std::get<VLiteral>(b.node).lit;
    if (const auto* x = std::get_if<VClosure>(&a.node)) {
        const auto& y = std::get<VClosure>(b.node);
        return closure_ref_eq(x->ref, y.ref) && x->params == y.params &&
               *x->body == *y.body;
    }
    if (const auto* x = std::get_if<VList>(&a.node)) {
        const auto& y = std::get<VList>(b.node);
        return value_eq(x->head, y.head) && value_eq(x->tail, y.tail);
    }
    if (const auto* x = std::get_if<VTuple>(&a.node)) {
        const auto& y = std::get<VTuple>(b.node);
        if (x->elements.size() != y.elements.size()) return false;
        for (std::size_t i = 0; i < x->elements.size(); ++i)
            if (!value_eq(x->elements[i], y.elements[i])) return false;
        return true;
    }
    const auto& x = std::get<VMap>(a.node);
    const auto& y = std::get<VMap>(b.node);
    if (x.keys.size() != y.keys.size() || x.values.size() != y.values.size())
        return false;
    for (std::size_t i = 0; i < x.keys.size(); ++i)
        if (!value_eq(x.keys[i], y.keys[i])) return false;
    for (std::size_t i = 0; i < x.values.size(); ++i)
        if (!value_eq(x.values[i], y.values[i])) return false;
    return true;
}

bool value_eq(const ValuePtr& a, const ValuePtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return value_eq(*a, *b);
}

// --------------------------------------------------------------- rendering

std::string render_literal(const Literal& lit) {
    if (const auto* a = std::get_if<Atom>(&lit)) return "'" + a->text + "'";
    if (const auto* i = std::get_if<Integer>(&lit))
        return std::to_string(i->value);
    if (std::holds_alternative<EmptyList>(lit)) return "[]";
    if (std::holds_alternative<EmptyTuple>(lit)) return "{}";
    return "~{}~";
}

namespace {

void render(const Value& v, std::ostringstream& out) {
    if (const auto* l = std::get_if<VLiteral>(&v.node)) {
        out << render_literal(l->lit);
    } else if (const auto* c = std::get_if<VClosure>(&v.node)) {
        out << "#closure<";
        for (std::size_t i = 0; i < c->params.size(); ++i) {
            if (i) out << ",";
            out << c->params[i];
        }
        out << ">/";
        if (std::holds_alternative<Environment>(c->ref))
            out << "env";
        else
            out << render_funid(std::get<FunctionIdentifier>(c->ref));
    } else if (const auto* l2 = std::get_if<VList>(&v.node)) {
        out << "[";
        render(*l2->head, out);
        out << "|";
        render(*l2->tail, out);
        out << "]";
    } else if (const auto* t = std::get_if<VTuple>(&v.node)) {
        out << "{";
        for (std::size_t i = 0; i < t->elements.size(); ++i) {
            if (i) out << ",";
            render(*t->elements[i], out);
        }
        out << "}";
    } else {
        const auto& m = std::get<VMap>(v.node);
        out << "~{";
        for (std::size_t i = 0; i < m.keys.size(); ++i) {
            if (i) out << ",";
            render(*m.keys[i], out);
            out << "=>";
            render(*m.values[i], out);
        }
        out << "}~";
    }
}

}  // namespace

std::string render_value(const Value& v) {
    std::ostringstream out;
    render(v, out);
    return out.str();
}

std::string render_value(const ValuePtr& v) {
    return v ? render_value(*v) : "<null>";
}

std::string render_environment(const Environment& env) {
    std::ostringstream out;
    out << "{";
    for (std::size_t i = 0; i < env.entries.size(); ++i) {
        if (i) out << ", ";
        out << render_env_key(env.entries[i].first) << " : "
            << render_value(env.entries[i].second);
    }
    out << "}";
    return out.str();
}

}  // namespace cerl
