#include "cerl/checker.hpp"

namespace cerl {

namespace {

class Checker {
  public:
    CheckReport run(const DerivationNode& d) {
        check(d, "/");
        CheckReport report;
        report.valid = violations_.empty();
        report.violations = std::move(violations_);
        return report;
    }

  private:
    std::vector<Violation> violations_;

    void flag(const std::string& path, int rule, std::string reason) {
        violations_.push_back(Violation{path, rule, std::move(reason)});
    }

    static std::string sub(const std::string& path, const std::string& seg) {
        return path == "/" ? "/" + seg : path + "/" + seg;
    }

    // Premise at index i must replay (env, clos, expr); its own subtree is
    // validated as well. Returns the premise result, or null on shape error.
    ValuePtr premise(const DerivationNode& d, const std::string& path,
                     std::size_t i, const Environment& env,
                     const ClosureEnv& clos, const ExprPtr& expr) {
        if (i >= d.premises.size() || !d.premises[i]) {
            flag(path, d.rule, "missing premise " + std::to_string(i));
            return nullptr;
        }
        const auto& p = *d.premises[i];
        const std::string ppath = sub(path, "premises[" + std::to_string(i) + "]");
        if (!p.expr || !expr || !(*p.expr == *expr))
            flag(ppath, d.rule, "premise expression differs");
        if (!env_eq(p.env, env))
            flag(ppath, d.rule, "premise environment differs");
        if (!closure_env_eq(p.clos, clos))
            flag(ppath, d.rule, "premise closure environment differs");
        check(p, ppath);
        return p.result;
    }

    void require(bool ok, const std::string& path, int rule,
                 const char* reason) {
        if (!ok) flag(path, rule, reason);
    }

    void check(const DerivationNode& d, const std::string& path) {
        if (!d.expr || !d.result) {
            flag(path, d.rule, "node lacks expression or result");
            return;
        }
        if (rule_for(*d.expr) != d.rule) {
            flag(path, d.rule, "rule id does not fit the expression");
            return;
        }
        if (d.case_evidence.has_value() != (d.rule == kRuleCase)) {
            flag(path, d.rule, "case evidence present iff rule is case");
            return;
        }

        switch (d.rule) {
            case kRuleLiteral: {
                require(d.premises.empty(), path, d.rule, "expected no premises");
                const auto& n = std::get<ELiteral>(d.expr->node);
                require(value_eq(*d.result, *vlit(n.lit)), path, d.rule,
                        "result is not the literal's value");
                break;
            }
            case kRuleVar: {
                require(d.premises.empty(), path, d.rule, "expected no premises");
                const auto& n = std::get<EVar>(d.expr->node);
                auto v = get_value(d.env, EnvKey{n.name});
                if (!v)
                    flag(path, d.rule, "variable unbound in environment");
                else
                    require(value_eq(*v, d.result), path, d.rule,
                            "result disagrees with environment lookup");
                break;
            }
            case kRuleFunSig: {
                require(d.premises.empty(), path, d.rule, "expected no premises");
                const auto& n = std::get<EFunSig>(d.expr->node);
                auto v = get_value(d.env, EnvKey{n.fid});
                if (!v)
                    flag(path, d.rule, "function identifier unbound");
                else
                    require(value_eq(*v, d.result), path, d.rule,
                            "result disagrees with environment lookup");
                break;
            }
            case kRuleFun: {
                require(d.premises.empty(), path, d.rule, "expected no premises");
                const auto& n = std::get<EFun>(d.expr->node);
                const auto* cl = std::get_if<VClosure>(&d.result->node);
                if (!cl) {
                    flag(path, d.rule, "result is not a closure");
                    break;
                }
                const auto* ref = std::get_if<Environment>(&cl->ref);
                require(ref != nullptr, path, d.rule,
                        "closure ref must be the defining environment");
                if (ref)
                    require(env_eq(*ref, d.env), path, d.rule,
                            "captured environment differs");
                require(cl->params == n.params, path, d.rule,
                        "closure parameters differ");
                require(*cl->body == *n.body, path, d.rule,
                        "closure body differs");
                break;
            }
            case kRuleList: {
                const auto& n = std::get<EList>(d.expr->node);
                if (d.premises.size() != 2) {
                    flag(path, d.rule, "expected head and tail premises");
                    break;
                }
                auto hv = premise(d, path, 0, d.env, d.clos, n.head);
                auto tv = premise(d, path, 1, d.env, d.clos, n.tail);
                if (hv && tv)
                    require(value_eq(*d.result, *vlist(hv, tv)), path, d.rule,
                            "result is not the cons of the premises");
                break;
            }
            case kRuleTuple: {
                const auto& n = std::get<ETuple>(d.expr->node);
                if (d.premises.size() != n.elements.size()) {
                    flag(path, d.rule, "premise count differs from elements");
                    break;
                }
                std::vector<ValuePtr> vals;
                for (std::size_t i = 0; i < n.elements.size(); ++i)
                    vals.push_back(
                        premise(d, path, i, d.env, d.clos, n.elements[i]));
                if (all_present(vals))
                    require(value_eq(*d.result, *vtuple(vals)), path, d.rule,
                            "result does not assemble the premises");
                break;
            }
            case kRuleCall: {
                const auto& n = std::get<ECall>(d.expr->node);
                if (d.premises.size() != n.args.size()) {
                    flag(path, d.rule, "premise count differs from arguments");
                    break;
                }
                std::vector<ValuePtr> vals;
                for (std::size_t i = 0; i < n.args.size(); ++i)
                    vals.push_back(premise(d, path, i, d.env, d.clos, n.args[i]));
                if (all_present(vals))
                    require(value_eq(builtin_eval(n.fname, vals), d.result),
                            path, d.rule,
                            "result disagrees with the builtin call");
                break;
            }
            case kRuleApply:
                check_apply(d, path);
                break;
            case kRuleCase:
                check_case(d, path);
                break;
            case kRuleLet:
                check_let(d, path);
                break;
            case kRuleLetrec:
                check_letrec(d, path);
                break;
            case kRuleMap:
                check_map(d, path);
                break;
            default:
                flag(path, d.rule, "unknown rule id");
        }
    }

    static bool all_present(const std::vector<ValuePtr>& vals) {
        for (const auto& v : vals)
            if (!v) return false;
        return true;
    }

    void check_apply(const DerivationNode& d, const std::string& path) {
        const auto& n = std::get<EApply>(d.expr->node);
        if (d.premises.size() != n.args.size() + 2) {
            flag(path, d.rule, "expected argument, target and body premises");
            return;
        }
        std::vector<ValuePtr> vals;
        for (std::size_t i = 0; i < n.args.size(); ++i)
            vals.push_back(premise(d, path, i, d.env, d.clos, n.args[i]));
        auto target =
            premise(d, path, n.args.size(), d.env, d.clos, n.target);
        if (!target || !all_present(vals)) return;
        const auto* cl = std::get_if<VClosure>(&target->node);
        if (!cl) {
            flag(path, d.rule, "target premise is not a closure");
            return;
        }
        if (cl->params.size() != n.args.size()) {
            flag(path, d.rule, "closure arity differs from argument count");
            return;
        }
        auto body_env =
            append_vars_to_env(cl->params, vals, get_env(cl->ref, d.clos));
        const auto& body = d.premises[n.args.size() + 1];
        if (!body) {
            flag(path, d.rule, "missing body premise");
            return;
        }
        const std::string bpath = sub(
            path, "premises[" + std::to_string(n.args.size() + 1) + "]");
        if (!(*body->expr == *cl->body))
            flag(bpath, d.rule, "body premise expression differs");
        if (!env_eq(body->env, *body_env))
            flag(bpath, d.rule,
                 "body premise environment is not the closure environment "
                 "extended with the arguments");
        if (!closure_env_eq(body->clos, d.clos))
            flag(bpath, d.rule, "body premise closure environment differs");
        check(*body, bpath);
        require(value_eq(body->result, d.result), path, d.rule,
                "result differs from the body premise");
    }

    void check_case(const DerivationNode& d, const std::string& path) {
        const auto& n = std::get<ECase>(d.expr->node);
        if (d.premises.size() != 3) {
            flag(path, d.rule, "expected scrutinee, guard and body premises");
            return;
        }
        auto v = premise(d, path, 0, d.env, d.clos, n.scrutinee);
        if (!v) return;
        const auto& ev = *d.case_evidence;
        if (ev.chosen >= n.clauses.size()) {
            flag(path, d.rule, "chosen clause index out of range");
            return;
        }
        auto cm = match_clause(*v, n.clauses, ev.chosen);
        if (!cm) {
            flag(path, d.rule, "chosen clause does not match the scrutinee");
            return;
        }
        Environment extended = add_bindings(cm->bindings, d.env);
        auto gv = premise(d, path, 1, extended, d.clos, cm->guard);
        if (gv)
            require(is_tt(*gv), path, d.rule,
                    "chosen guard premise does not evaluate to 'true'");
        auto bv = premise(d, path, 2, extended, d.clos, cm->body);
        if (bv)
            require(value_eq(bv, d.result), path, d.rule,
                    "result differs from the body premise");

        // Every earlier clause needs evidence: a recomputed pattern
        // mismatch, or a guard derivation concluding 'false'.
        if (ev.skipped.size() != ev.chosen) {
            flag(path, d.rule, "evidence does not cover every earlier clause");
            return;
        }
        for (std::size_t j = 0; j < ev.skipped.size(); ++j) {
            const auto& skip = ev.skipped[j];
            const std::string spath =
                sub(path, "case_evidence[" + std::to_string(j) + "]");
            if (skip.clause != j) {
                flag(spath, d.rule, "evidence indices out of order");
                continue;
            }
            auto cj = match_clause(*v, n.clauses, j);
            if (!skip.guard_false) {
                if (cj)
                    flag(spath, d.rule,
                         "clause recorded as mismatch actually matches");
                continue;
            }
            if (!cj) {
                flag(spath, d.rule,
                     "guard evidence for a clause that does not match");
                continue;
            }
            const auto& g = *skip.guard_false;
            Environment ext_j = add_bindings(cj->bindings, d.env);
            if (!g.expr || !(*g.expr == *cj->guard))
                flag(spath, d.rule, "guard evidence expression differs");
            if (!env_eq(g.env, ext_j))
                flag(spath, d.rule, "guard evidence environment differs");
            if (!closure_env_eq(g.clos, d.clos))
                flag(spath, d.rule,
                     "guard evidence closure environment differs");
            if (!g.result || !is_ff(*g.result))
                flag(spath, d.rule,
                     "guard evidence does not conclude 'false'");
            check(g, spath);
        }
    }

    void check_let(const DerivationNode& d, const std::string& path) {
        const auto& n = std::get<ELet>(d.expr->node);
        if (n.vars.size() != n.binds.size()) {
            flag(path, d.rule, "variable and binding counts differ");
            return;
        }
        if (d.premises.size() != n.binds.size() + 1) {
            flag(path, d.rule, "expected binding and body premises");
            return;
        }
        std::vector<ValuePtr> vals;
        for (std::size_t i = 0; i < n.binds.size(); ++i)
            vals.push_back(premise(d, path, i, d.env, d.clos, n.binds[i]));
        if (!all_present(vals)) return;
        auto body_env = append_vars_to_env(n.vars, vals, d.env);
        auto bv = premise(d, path, n.binds.size(), *body_env, d.clos, n.body);
        if (bv)
            require(value_eq(bv, d.result), path, d.rule,
                    "result differs from the body premise");
    }

    void check_letrec(const DerivationNode& d, const std::string& path) {
        const auto& n = std::get<ELetrec>(d.expr->node);
        if (n.fnames.size() != n.funs.size()) {
            flag(path, d.rule, "identifier and definition counts differ");
            return;
        }
        if (d.premises.size() != 1) {
            flag(path, d.rule, "expected a single body premise");
            return;
        }
        auto extended = append_funs_to_env(n.fnames, n.funs, d.env);
        ClosureEnv clos2 = append_funs_to_closure(n.fnames, d.clos, *extended);
        if (!d.premises[0]) {
            flag(path, d.rule, "missing body premise");
            return;
        }
        const auto& body = *d.premises[0];
        const std::string bpath = sub(path, "premises[0]");
        if (!(*body.expr == *n.body))
            flag(bpath, d.rule, "body premise expression differs");
        if (!env_eq(body.env, *extended))
            flag(bpath, d.rule,
                 "body premise environment lacks the new closures");
        if (!closure_env_eq(body.clos, clos2))
            flag(bpath, d.rule,
                 "body premise closure environment differs");
        check(body, bpath);
        require(value_eq(body.result, d.result), path, d.rule,
                "result differs from the body premise");
    }

    void check_map(const DerivationNode& d, const std::string& path) {
        const auto& n = std::get<EMap>(d.expr->node);
        if (n.keys.size() != n.values.size()) {
            flag(path, d.rule, "key and value counts differ");
            return;
        }
        if (d.premises.size() != n.keys.size() + n.values.size()) {
            flag(path, d.rule, "expected key premises then value premises");
            return;
        }
        std::vector<ValuePtr> kvals, vvals;
        for (std::size_t i = 0; i < n.keys.size(); ++i)
            kvals.push_back(premise(d, path, i, d.env, d.clos, n.keys[i]));
        for (std::size_t i = 0; i < n.values.size(); ++i)
            vvals.push_back(premise(d, path, n.keys.size() + i, d.env, d.clos,
                                    n.values[i]));
        if (all_present(kvals) && all_present(vvals))
            require(value_eq(*d.result, *vmap(kvals, vvals)), path, d.rule,
                    "result does not assemble the premises");
    }
};

}  // namespace

CheckReport validate(const DerivationNode& d) { return Checker{}.run(d); }

}  // namespace cerl
