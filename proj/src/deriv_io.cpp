#include "cerl/deriv_io.hpp"

#include <json.hpp>

#include "cerl/parser.hpp"

namespace cerl {

namespace {

using Json = nlohmann::ordered_json;

// ----------------------------------------------------------------- writing

Json funid_to_json(const FunctionIdentifier& fid) {
    return Json{{"name", fid.name}, {"arity", fid.arity}};
}

Json value_to_json(const Value& v);

Json env_to_json(const Environment& env) {
    Json out = Json::array();
    for (const auto& [key, value] : env.entries) {
        Json entry;
        if (const auto* var = std::get_if<std::string>(&key))
            entry["var"] = *var;
        else
            entry["funid"] = funid_to_json(std::get<FunctionIdentifier>(key));
        entry["value"] = value_to_json(*value);
        out.push_back(std::move(entry));
    }
    return out;
}

Json clos_to_json(const ClosureEnv& clos) {
    Json out = Json::array();
    for (const auto& [fid, env] : clos.entries)
        out.push_back(
            Json{{"funid", funid_to_json(fid)}, {"env", env_to_json(env)}});
    return out;
}

Json value_to_json(const Value& v) {
    if (const auto* l = std::get_if<VLiteral>(&v.node)) {
        if (const auto* a = std::get_if<Atom>(&l->lit))
            return Json{{"kind", "atom"}, {"text", a->text}};
        if (const auto* i = std::get_if<Integer>(&l->lit))
            return Json{{"kind", "int"}, {"value", i->value}};
        if (std::holds_alternative<EmptyList>(l->lit))
            return Json{{"kind", "empty_list"}};
        if (std::holds_alternative<EmptyTuple>(l->lit))
            return Json{{"kind", "empty_tuple"}};
        return Json{{"kind", "empty_map"}};
    }
    if (const auto* c = std::get_if<VClosure>(&v.node)) {
        Json ref;
        if (const auto* env = std::get_if<Environment>(&c->ref))
            ref = Json{{"env", env_to_json(*env)}};
        else
            ref = Json{{"funid",
                        funid_to_json(std::get<FunctionIdentifier>(c->ref))}};
        return Json{{"kind", "closure"},
                    {"ref", std::move(ref)},
                    {"params", c->params},
                    {"body", format_expr(c->body)}};
    }
    if (const auto* l = std::get_if<VList>(&v.node))
        return Json{{"kind", "list"},
                    {"head", value_to_json(*l->head)},
                    {"tail", value_to_json(*l->tail)}};
    if (const auto* t = std::get_if<VTuple>(&v.node)) {
        Json elements = Json::array();
        for (const auto& el : t->elements)
            elements.push_back(value_to_json(*el));
        return Json{{"kind", "tuple"}, {"elements", std::move(elements)}};
    }
    const auto& m = std::get<VMap>(v.node);
    Json keys = Json::array(), values = Json::array();
    for (const auto& k : m.keys) keys.push_back(value_to_json(*k));
    for (const auto& val : m.values) values.push_back(value_to_json(*val));
    return Json{{"kind", "map"},
                {"keys", std::move(keys)},
                {"values", std::move(values)}};
}

Json node_to_json(const DerivationNode& d) {
    Json out;
    out["rule"] = d.rule;
    out["env"] = env_to_json(d.env);
    out["clos"] = clos_to_json(d.clos);
    out["expr"] = format_expr(d.expr);
    out["result"] = value_to_json(*d.result);
    Json premises = Json::array();
    for (const auto& p : d.premises) premises.push_back(node_to_json(*p));
    out["premises"] = std::move(premises);
    if (d.case_evidence) {
        Json skipped = Json::array();
        for (const auto& s : d.case_evidence->skipped) {
            Json entry;
            entry["clause"] = s.clause;
            if (s.guard_false)
                entry["guard_false"] = node_to_json(*s.guard_false);
            else
                entry["no_match"] = true;
            skipped.push_back(std::move(entry));
        }
        out["case_evidence"] = Json{{"chosen", d.case_evidence->chosen},
                                    {"skipped", std::move(skipped)}};
    }
    return out;
}

// ----------------------------------------------------------------- reading

struct LoadFail {
    std::string message;
};

[[noreturn]] void fail(std::string message) {
    throw LoadFail{std::move(message)};
}

const Json& field(const Json& j, const char* name) {
    if (!j.is_object() || !j.contains(name))
        fail(std::string("missing field '") + name + "'");
    return j.at(name);
}

FunctionIdentifier funid_from_json(const Json& j) {
    return FunctionIdentifier{field(j, "name").get<std::string>(),
                              field(j, "arity").get<std::size_t>()};
}

ExprPtr expr_from_text(const std::string& text) {
    auto r = parse_expr(text);
    if (const auto* err = std::get_if<ParseError>(&r))
        fail("bad expression text: " + describe(*err));
    return std::get<ExprPtr>(r);
}

ValuePtr value_from_json(const Json& j);

Environment env_from_json(const Json& j) {
    if (!j.is_array()) fail("environment must be an array");
    Environment env;
    for (const auto& entry : j) {
        EnvKey key;
        if (entry.contains("var"))
            key = entry.at("var").get<std::string>();
        else
            key = funid_from_json(field(entry, "funid"));
        env.entries.emplace_back(std::move(key),
                                 value_from_json(field(entry, "value")));
    }
    return env;
}

ClosureEnv clos_from_json(const Json& j) {
    if (!j.is_array()) fail("closure environment must be an array");
    ClosureEnv clos;
    for (const auto& entry : j)
        clos.entries.emplace_back(funid_from_json(field(entry, "funid")),
                                  env_from_json(field(entry, "env")));
    return clos;
}

ValuePtr value_from_json(const Json& j) {
    const std::string kind = field(j, "kind").get<std::string>();
    if (kind == "atom") return vatom(field(j, "text").get<std::string>());
    if (kind == "int") return vint(field(j, "value").get<std::int64_t>());
    if (kind == "empty_list") return vlit(EmptyList{});
    if (kind == "empty_tuple") return vlit(EmptyTuple{});
    if (kind == "empty_map") return vlit(EmptyMap{});
    if (kind == "closure") {
        const Json& refj = field(j, "ref");
        ClosureRef ref = refj.contains("env")
                             ? ClosureRef{env_from_json(refj.at("env"))}
                             : ClosureRef{funid_from_json(field(refj, "funid"))};
        return vclosure(std::move(ref),
                        field(j, "params").get<std::vector<std::string>>(),
                        expr_from_text(field(j, "body").get<std::string>()));
    }
    if (kind == "list")
        return vlist(value_from_json(field(j, "head")),
                     value_from_json(field(j, "tail")));
    if (kind == "tuple") {
        std::vector<ValuePtr> elements;
        for (const auto& el : field(j, "elements"))
            elements.push_back(value_from_json(el));
        return vtuple(std::move(elements));
    }
    if (kind == "map") {
        std::vector<ValuePtr> keys, values;
        for (const auto& k : field(j, "keys")) keys.push_back(value_from_json(k));
        for (const auto& v : field(j, "values"))
            values.push_back(value_from_json(v));
        if (keys.size() != values.size())
            fail("map value with mismatched key/value counts");
        return vmap(std::move(keys), std::move(values));
    }
    fail("unknown value kind '" + kind + "'");
}

DerivPtr node_from_json(const Json& j) {
    DerivationNode d;
    d.rule = field(j, "rule").get<int>();
    d.env = env_from_json(field(j, "env"));
    d.clos = clos_from_json(field(j, "clos"));
    d.expr = expr_from_text(field(j, "expr").get<std::string>());
    d.result = value_from_json(field(j, "result"));
    for (const auto& p : field(j, "premises"))
        d.premises.push_back(node_from_json(p));
    if (j.contains("case_evidence")) {
        const Json& ev = j.at("case_evidence");
        CaseEvidence out;
        out.chosen = field(ev, "chosen").get<std::size_t>();
        for (const auto& s : field(ev, "skipped")) {
            CaseSkip skip;
            skip.clause = field(s, "clause").get<std::size_t>();
            if (s.contains("guard_false"))
                skip.guard_false = node_from_json(s.at("guard_false"));
            else if (!s.contains("no_match"))
                fail("skip entry needs no_match or guard_false");
            out.skipped.push_back(std::move(skip));
        }
        d.case_evidence = std::move(out);
    }
    return std::make_shared<const DerivationNode>(std::move(d));
}

}  // namespace

std::string serialize_derivation(const DerivationNode& d) {
    return node_to_json(d).dump(2) + "\n";
}

DerivLoadResult parse_derivation(const std::string& text) {
    try {
        Json j = Json::parse(text);
        return node_from_json(j);
    } catch (const LoadFail& f) {
        return DerivLoadError{f.message};
    } catch (const nlohmann::json::exception& e) {
        return DerivLoadError{e.what()};
    }
}

}  // namespace cerl
