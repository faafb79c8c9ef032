#include "cerl/env.hpp"

#include "cerl/values.hpp"

namespace cerl {

std::string render_env_key(const EnvKey& key) {
    if (const auto* v = std::get_if<std::string>(&key)) return *v;
    return render_funid(std::get<FunctionIdentifier>(key));
}

std::optional<ValuePtr> get_value(const Environment& env, const EnvKey& key) {
    for (const auto& [k, v] : env.entries)
        if (k == key) return v;
    return std::nullopt;
}

Environment insert_value(Environment env, EnvKey key, ValuePtr value) {
    for (auto& [k, v] : env.entries) {
        if (k == key) {
            v = std::move(value);
            return env;
        }
    }
    env.entries.emplace_back(std::move(key), std::move(value));
    return env;
}

Environment add_bindings(const Bindings& bindings, Environment env) {
    for (const auto& [name, value] : bindings)
        env = insert_value(std::move(env), EnvKey{name}, value);
    return env;
}

std::optional<Environment> append_vars_to_env(
    const std::vector<std::string>& vars, const std::vector<ValuePtr>& vals,
    Environment env) {
    if (vars.size() != vals.size()) return std::nullopt;
    for (std::size_t i = 0; i < vars.size(); ++i)
        env = insert_value(std::move(env), EnvKey{vars[i]}, vals[i]);
    return env;
}

std::optional<Environment> append_funs_to_env(
    const std::vector<FunctionIdentifier>& fnames,
    const std::vector<FunDef>& funs, Environment env) {
    if (fnames.size() != funs.size()) return std::nullopt;
    for (std::size_t i = 0; i < fnames.size(); ++i) {
        env = insert_value(
            std::move(env), EnvKey{fnames[i]},
            vclosure(ClosureRef{fnames[i]}, funs[i].params, funs[i].body));
    }
    return env;
}

Environment get_env(const ClosureRef& ref, const ClosureEnv& clos) {
    if (const auto* env = std::get_if<Environment>(&ref)) return *env;
    return get_env_from_closure(std::get<FunctionIdentifier>(ref), clos);
}

Environment get_env_from_closure(const FunctionIdentifier& fid,
                                 const ClosureEnv& clos) {
    for (const auto& [k, env] : clos.entries)
        if (k == fid) return env;
    return Environment{};
}

ClosureEnv set_closure(ClosureEnv clos, FunctionIdentifier fid,
                       Environment env) {
    for (auto& [k, e] : clos.entries) {
        if (k == fid) {
            e = std::move(env);
            return clos;
        }
    }
    clos.entries.emplace_back(std::move(fid), std::move(env));
    return clos;
}

ClosureEnv append_funs_to_closure(const std::vector<FunctionIdentifier>& fnames,
                                  ClosureEnv clos, const Environment& env) {
    for (const auto& fid : fnames)
        clos = set_closure(std::move(clos), fid, env);
    return clos;
}

}  // namespace cerl
