#include "cerl/eval.hpp"

#include <pthread.h>

#include <sstream>

namespace cerl {

const char* eval_error_name(const EvalError& err) {
    struct Namer {
        const char* operator()(const UnboundIdentifier&) const {
            return "UnboundIdentifier";
        }
        const char* operator()(const NotAClosure&) const {
            return "NotAClosure";
        }
        const char* operator()(const BadArity&) const { return "BadArity"; }
        const char* operator()(const NoMatchingClause&) const {
            return "NoMatchingClause";
        }
        const char* operator()(const NonBooleanGuard&) const {
            return "NonBooleanGuard";
        }
        const char* operator()(const LengthMismatch&) const {
            return "LengthMismatch";
        }
        const char* operator()(const OutOfFuel&) const { return "OutOfFuel"; }
    };
    return std::visit(Namer{}, err.reason);
}

std::string describe(const EvalError& err) {
    std::ostringstream out;
    out << eval_error_name(err);
    if (const auto* u = std::get_if<UnboundIdentifier>(&err.reason))
        out << ": " << render_env_key(u->key);
    else if (const auto* n = std::get_if<NotAClosure>(&err.reason))
        out << ": " << render_value(n->value);
    else if (const auto* b = std::get_if<BadArity>(&err.reason))
        out << ": expected " << b->expected << " arguments, got " << b->got;
    else if (const auto* g = std::get_if<NonBooleanGuard>(&err.reason))
        out << ": " << render_value(g->value);
    else if (const auto* m = std::get_if<LengthMismatch>(&err.reason))
        out << " at " << m->site;
    // Deep recursion produces very long paths; abbreviate the middle.
    std::string path = err.path;
    if (path.size() > 96)
        path = path.substr(0, 48) + "..." + path.substr(path.size() - 24);
    out << " (at " << path << ")";
    return out.str();
}

int rule_for(const Expression& e) {
    struct Ruler {
        int operator()(const ELiteral&) const { return kRuleLiteral; }
        int operator()(const EVar&) const { return kRuleVar; }
        int operator()(const EFunSig&) const { return kRuleFunSig; }
        int operator()(const EFun&) const { return kRuleFun; }
        int operator()(const EList&) const { return kRuleList; }
        int operator()(const ETuple&) const { return kRuleTuple; }
        int operator()(const ECall&) const { return kRuleCall; }
        int operator()(const EApply&) const { return kRuleApply; }
        int operator()(const ECase&) const { return kRuleCase; }
        int operator()(const ELet&) const { return kRuleLet; }
        int operator()(const ELetrec&) const { return kRuleLetrec; }
        int operator()(const EMap&) const { return kRuleMap; }
    };
    return std::visit(Ruler{}, e.node);
}

// ---------------------------------------------------------------- builtins

void BuiltinRegistry::register_fn(std::string name, BuiltinFn fn) {
    table_[std::move(name)] = std::move(fn);
}

ValuePtr BuiltinRegistry::apply(const std::string& fname,
                                std::span<const ValuePtr> vals) const {
    auto it = table_.find(fname);
    if (it == table_.end()) return vatom("@undef");
    return it->second(vals);
}

namespace {

const std::int64_t* as_int(const ValuePtr& v) {
    const auto* lit = std::get_if<VLiteral>(&v->node);
    if (!lit) return nullptr;
    const auto* i = std::get_if<Integer>(&lit->lit);
    return i ? &i->value : nullptr;
}

ValuePtr builtin_plus(std::span<const ValuePtr> vals) {
    if (vals.size() == 2) {
        const auto* a = as_int(vals[0]);
        const auto* b = as_int(vals[1]);
        if (a && b) {
            // Two's-complement wrap keeps the operation total and symmetric.
            const auto sum = static_cast<std::int64_t>(
                static_cast<std::uint64_t>(*a) +
                static_cast<std::uint64_t>(*b));
            return vint(sum);
        }
    }
    return vatom("@badarith");
}

}  // namespace

const BuiltinRegistry& BuiltinRegistry::standard() {
    static const BuiltinRegistry reg = [] {
        BuiltinRegistry r;
        r.register_fn("plus", builtin_plus);
        return r;
    }();
    return reg;
}

ValuePtr builtin_eval(const std::string& fname,
                      std::span<const ValuePtr> vals) {
    return BuiltinRegistry::standard().apply(fname, vals);
}

// --------------------------------------------------------------- evaluator

namespace {

struct Res {
    ValuePtr value;
    DerivPtr deriv;
};

class Evaluator {
  public:
    EvalOutcome run(const EvalConfig& cfg) {
        auto out = eval(cfg.env, cfg.clos, cfg.expr, cfg.fuel);
        if (auto* err = std::get_if<EvalError>(&out)) return std::move(*err);
        auto& res = std::get<Res>(out);
        return Success{std::move(res.value), std::move(res.deriv)};
    }

  private:
    using Out = std::variant<Res, EvalError>;

    std::vector<std::string> path_;

    std::string current_path() const {
        if (path_.empty()) return "/";
        std::string out;
        for (const auto& seg : path_) out += "/" + seg;
        return out;
    }

    template <typename Reason>
    EvalError fail(Reason reason) {
        return EvalError{std::move(reason), current_path()};
    }

    Out child(const std::string& seg, const Environment& env,
              const ClosureEnv& clos, const ExprPtr& expr,
              std::uint64_t fuel) {
        path_.push_back(seg);
        Out out = eval(env, clos, expr, fuel);
        path_.pop_back();
        return out;
    }

    // Left-to-right evaluation of a sequence; the first failure wins.
    std::optional<EvalError> eval_all(const std::string& seg,
                                      const Environment& env,
                                      const ClosureEnv& clos,
                                      const std::vector<ExprPtr>& exprs,
                                      std::uint64_t fuel,
                                      std::vector<Res>& out) {
        for (std::size_t i = 0; i < exprs.size(); ++i) {
            Out r = child(seg + "[" + std::to_string(i) + "]", env, clos,
                          exprs[i], fuel);
            if (auto* err = std::get_if<EvalError>(&r)) return std::move(*err);
            out.push_back(std::move(std::get<Res>(r)));
        }
        return std::nullopt;
    }

    static DerivPtr node(int rule, const Environment& env,
                         const ClosureEnv& clos, const ExprPtr& expr,
                         ValuePtr result, std::vector<DerivPtr> premises = {},
                         std::optional<CaseEvidence> evidence = std::nullopt) {
        return std::make_shared<const DerivationNode>(DerivationNode{
            rule, env, clos, expr, std::move(result), std::move(premises),
            std::move(evidence)});
    }

    static std::vector<ValuePtr> values_of(const std::vector<Res>& rs) {
        std::vector<ValuePtr> out;
        out.reserve(rs.size());
        for (const auto& r : rs) out.push_back(r.value);
        return out;
    }

    static std::vector<DerivPtr> derivs_of(std::vector<Res>&& rs) {
        std::vector<DerivPtr> out;
        out.reserve(rs.size());
        for (auto& r : rs) out.push_back(std::move(r.deriv));
        return out;
    }

    Out eval(const Environment& env, const ClosureEnv& clos,
             const ExprPtr& expr, std::uint64_t fuel) {
        if (fuel == 0) return fail(OutOfFuel{});
        const std::uint64_t rest = fuel - 1;

        if (const auto* n = std::get_if<ELiteral>(&expr->node)) {
            ValuePtr v = vlit(n->lit);
            return Res{v, node(kRuleLiteral, env, clos, expr, v)};
        }

        if (const auto* n = std::get_if<EVar>(&expr->node)) {
            auto v = get_value(env, EnvKey{n->name});
            if (!v) return fail(UnboundIdentifier{EnvKey{n->name}});
            return Res{*v, node(kRuleVar, env, clos, expr, *v)};
        }

        if (const auto* n = std::get_if<EFunSig>(&expr->node)) {
            auto v = get_value(env, EnvKey{n->fid});
            if (!v) return fail(UnboundIdentifier{EnvKey{n->fid}});
            return Res{*v, node(kRuleFunSig, env, clos, expr, *v)};
        }

        if (const auto* n = std::get_if<EFun>(&expr->node)) {
            ValuePtr v = vclosure(ClosureRef{env}, n->params, n->body);
            return Res{v, node(kRuleFun, env, clos, expr, v)};
        }

        if (const auto* n = std::get_if<EList>(&expr->node)) {
            Out h = child("head", env, clos, n->head, rest);
            if (auto* err = std::get_if<EvalError>(&h)) return std::move(*err);
            Out t = child("tail", env, clos, n->tail, rest);
            if (auto* err = std::get_if<EvalError>(&t)) return std::move(*err);
            auto& hr = std::get<Res>(h);
            auto& tr = std::get<Res>(t);
            ValuePtr v = vlist(hr.value, tr.value);
            return Res{v, node(kRuleList, env, clos, expr, v,
                               {std::move(hr.deriv), std::move(tr.deriv)})};
        }

        if (const auto* n = std::get_if<ETuple>(&expr->node)) {
            std::vector<Res> rs;
            if (auto err =
                    eval_all("elements", env, clos, n->elements, rest, rs))
                return std::move(*err);
            ValuePtr v = vtuple(values_of(rs));
            return Res{v, node(kRuleTuple, env, clos, expr, v,
                               derivs_of(std::move(rs)))};
        }

        if (const auto* n = std::get_if<ECall>(&expr->node))
            return eval_call(env, clos, expr, *n, rest);

        if (const auto* n = std::get_if<EApply>(&expr->node))
            return eval_apply(env, clos, expr, *n, rest);

        if (const auto* n = std::get_if<ECase>(&expr->node))
            return eval_case(env, clos, expr, *n, rest);

        if (const auto* n = std::get_if<ELet>(&expr->node))
            return eval_let(env, clos, expr, *n, rest);

        if (const auto* n = std::get_if<ELetrec>(&expr->node))
            return eval_letrec(env, clos, expr, *n, rest);

        return eval_map(env, clos, expr, std::get<EMap>(expr->node), rest);
    }

    Out eval_call(const Environment& env, const ClosureEnv& clos,
                  const ExprPtr& expr, const ECall& n, std::uint64_t rest) {
        std::vector<Res> rs;
        if (auto err = eval_all("args", env, clos, n.args, rest, rs))
            return std::move(*err);
        auto vals = values_of(rs);
        ValuePtr v = builtin_eval(n.fname, vals);
        return Res{v, node(kRuleCall, env, clos, expr, v,
                           derivs_of(std::move(rs)))};
    }

    Out eval_apply(const Environment& env, const ClosureEnv& clos,
                   const ExprPtr& expr, const EApply& n, std::uint64_t rest) {
        std::vector<Res> rs;
        if (auto err = eval_all("args", env, clos, n.args, rest, rs))
            return std::move(*err);
        Out t = child("target", env, clos, n.target, rest);
        if (auto* err = std::get_if<EvalError>(&t)) return std::move(*err);
        auto& tr = std::get<Res>(t);
        const auto* cl = std::get_if<VClosure>(&tr.value->node);
        if (!cl) return fail(NotAClosure{tr.value});
        if (cl->params.size() != n.args.size())
            return fail(BadArity{cl->params.size(), n.args.size()});
        auto body_env =
            append_vars_to_env(cl->params, values_of(rs), get_env(cl->ref, clos));
        Out b = child("body", *body_env, clos, cl->body, rest);
        if (auto* err = std::get_if<EvalError>(&b)) return std::move(*err);
        auto& br = std::get<Res>(b);
        auto premises = derivs_of(std::move(rs));
        premises.push_back(std::move(tr.deriv));
        premises.push_back(std::move(br.deriv));
        return Res{br.value, node(kRuleApply, env, clos, expr, br.value,
                                  std::move(premises))};
    }

    Out eval_case(const Environment& env, const ClosureEnv& clos,
                  const ExprPtr& expr, const ECase& n, std::uint64_t rest) {
        Out s = child("scrutinee", env, clos, n.scrutinee, rest);
        if (auto* err = std::get_if<EvalError>(&s)) return std::move(*err);
        auto& sr = std::get<Res>(s);

        std::vector<CaseSkip> skipped;
        for (std::size_t i = 0; i < n.clauses.size(); ++i) {
            auto cm = match_clause(*sr.value, n.clauses, i);
            if (!cm) {
                skipped.push_back(CaseSkip{i, nullptr});
                continue;
            }
            Environment extended = add_bindings(cm->bindings, env);
            Out g = child("clauses[" + std::to_string(i) + "]/guard", extended,
                          clos, cm->guard, rest);
            if (auto* err = std::get_if<EvalError>(&g)) return std::move(*err);
            auto& gr = std::get<Res>(g);
            if (is_ff(*gr.value)) {
                skipped.push_back(CaseSkip{i, std::move(gr.deriv)});
                continue;
            }
            if (!is_tt(*gr.value)) return fail(NonBooleanGuard{gr.value});
            Out b = child("clauses[" + std::to_string(i) + "]/body", extended,
                          clos, cm->body, rest);
            if (auto* err = std::get_if<EvalError>(&b)) return std::move(*err);
            auto& br = std::get<Res>(b);
            return Res{br.value,
                       node(kRuleCase, env, clos, expr, br.value,
                            {std::move(sr.deriv), std::move(gr.deriv),
                             std::move(br.deriv)},
                            CaseEvidence{i, std::move(skipped)})};
        }
        return fail(NoMatchingClause{});
    }

    Out eval_let(const Environment& env, const ClosureEnv& clos,
                 const ExprPtr& expr, const ELet& n, std::uint64_t rest) {
        if (n.vars.size() != n.binds.size())
            return fail(LengthMismatch{"let"});
        std::vector<Res> rs;
        if (auto err = eval_all("binds", env, clos, n.binds, rest, rs))
            return std::move(*err);
        auto body_env = append_vars_to_env(n.vars, values_of(rs), env);
        Out b = child("body", *body_env, clos, n.body, rest);
        if (auto* err = std::get_if<EvalError>(&b)) return std::move(*err);
        auto& br = std::get<Res>(b);
        auto premises = derivs_of(std::move(rs));
        premises.push_back(std::move(br.deriv));
        return Res{br.value, node(kRuleLet, env, clos, expr, br.value,
                                  std::move(premises))};
    }

    Out eval_letrec(const Environment& env, const ClosureEnv& clos,
                    const ExprPtr& expr, const ELetrec& n,
                    std::uint64_t rest) {
        if (n.fnames.size() != n.funs.size())
            return fail(LengthMismatch{"letrec"});
        auto extended = append_funs_to_env(n.fnames, n.funs, env);
        ClosureEnv clos2 = append_funs_to_closure(n.fnames, clos, *extended);
        Out b = child("body", *extended, clos2, n.body, rest);
        if (auto* err = std::get_if<EvalError>(&b)) return std::move(*err);
        auto& br = std::get<Res>(b);
        return Res{br.value, node(kRuleLetrec, env, clos, expr, br.value,
                                  {std::move(br.deriv)})};
    }

    Out eval_map(const Environment& env, const ClosureEnv& clos,
                 const ExprPtr& expr, const EMap& n, std::uint64_t rest) {
        if (n.keys.size() != n.values.size())
            return fail(LengthMismatch{"map"});
        std::vector<Res> ks;
        if (auto err = eval_all("keys", env, clos, n.keys, rest, ks))
            return std::move(*err);
        std::vector<Res> vs;
        if (auto err = eval_all("values", env, clos, n.values, rest, vs))
            return std::move(*err);
        ValuePtr v = vmap(values_of(ks), values_of(vs));
        auto premises = derivs_of(std::move(ks));
        auto vderivs = derivs_of(std::move(vs));
        premises.insert(premises.end(),
                        std::make_move_iterator(vderivs.begin()),
                        std::make_move_iterator(vderivs.end()));
        return Res{v, node(kRuleMap, env, clos, expr, v, std::move(premises))};
    }
};

struct StackedCall {
    const EvalConfig* cfg;
    EvalOutcome result = EvalError{OutOfFuel{}, "/"};
};

void* stacked_entry(void* arg) {
    auto* call = static_cast<StackedCall*>(arg);
    call->result = eval_expr(*call->cfg);
    return nullptr;
}

}  // namespace

EvalOutcome eval_expr(const EvalConfig& cfg) { return Evaluator{}.run(cfg); }

EvalOutcome eval_expr_stacked(const EvalConfig& cfg, std::size_t stack_bytes) {
    StackedCall call{&cfg};
    pthread_attr_t attr;
    pthread_attr_init(&attr);
    pthread_attr_setstacksize(&attr, stack_bytes);
    pthread_t tid;
    if (pthread_create(&tid, &attr, stacked_entry, &call) != 0) {
        pthread_attr_destroy(&attr);
        return eval_expr(cfg);  // fall back to the caller's stack
    }
    pthread_join(tid, nullptr);
    pthread_attr_destroy(&attr);
    return call.result;
}

}  // namespace cerl
