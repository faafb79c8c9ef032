#include "cerl/gen.hpp"

namespace cerl::gen {

namespace {

const std::vector<std::string> kAtomPool = {"ok",   "error", "a",    "b",
                                            "c",    "left",  "right"};
const std::vector<std::string> kVarPool = {"X", "Y", "Z", "Acc", "N", "V"};
const std::vector<FunctionIdentifier> kFidPool = {
    {"f", 0}, {"f", 1}, {"g", 1}, {"g", 2}, {"h", 0}};

}  // namespace

Literal literal(Rng& rng) {
    switch (rng.below(6)) {
        case 0: return Atom{rng.pick(kAtomPool)};
        case 1: return Atom{rng.percent(50) ? "true" : "false"};
        case 2: return EmptyList{};
        case 3: return EmptyTuple{};
        case 4: return EmptyMap{};
        default: return Integer{rng.range(-50, 50)};
    }
}

// ------------------------------------------------------------------ values

ValuePtr value(Rng& rng, int depth) {
    if (depth <= 0 || rng.percent(35)) return vlit(literal(rng));
    switch (rng.below(4)) {
        case 0:
            return vlist(value(rng, depth - 1), value(rng, depth - 1));
        case 1: {
            std::vector<ValuePtr> elements;
            const std::size_t n = rng.below(4);
            for (std::size_t i = 0; i < n; ++i)
                elements.push_back(value(rng, depth - 1));
            return vtuple(std::move(elements));
        }
        case 2: {
            std::vector<ValuePtr> keys, values;
            const std::size_t n = rng.below(3);
            for (std::size_t i = 0; i < n; ++i) {
                keys.push_back(value(rng, depth - 1));
                values.push_back(value(rng, depth - 1));
            }
            return vmap(std::move(keys), std::move(values));
        }
        default: {
            std::vector<std::string> params;
            const std::size_t n = rng.below(3);
            for (std::size_t i = 0; i < n; ++i)
                params.push_back(kVarPool[i]);
            ExprPtr body = well_formed_expr(rng, 1);
            if (rng.percent(50)) {
                Environment env;
                const std::size_t m = rng.below(3);
                for (std::size_t i = 0; i < m; ++i)
                    env.entries.emplace_back(EnvKey{kVarPool[i + 3]},
                                             value(rng, depth - 1));
                return vclosure(ClosureRef{std::move(env)}, std::move(params),
                                std::move(body));
            }
            return vclosure(ClosureRef{rng.pick(kFidPool)}, std::move(params),
                            std::move(body));
        }
    }
}

// ---------------------------------------------------- terminating programs

namespace {

class TerminatingGen {
  public:
    explicit TerminatingGen(Rng& rng) : rng_(rng) {}

    ExprPtr gen(int depth) {
        if (depth <= 0) return leaf();
        switch (rng_.below(12)) {
            case 0:
            case 1: return leaf();
            case 2:
                return elist(gen(depth - 1), gen(depth - 1));
            case 3: {
                std::vector<ExprPtr> elements;
                const std::size_t n = 1 + rng_.below(3);
                for (std::size_t i = 0; i < n; ++i)
                    elements.push_back(gen(depth - 1));
                return etuple(std::move(elements));
            }
            case 4: {
                std::vector<ExprPtr> keys, values;
                const std::size_t n = 1 + rng_.below(2);
                for (std::size_t i = 0; i < n; ++i) {
                    keys.push_back(gen(depth - 1));
                    values.push_back(gen(depth - 1));
                }
                return emap(std::move(keys), std::move(values));
            }
            case 5:
                return ecall("plus", {gen(depth - 1), gen(depth - 1)});
            case 6: return let_expr(depth);
            case 7: return apply_inline_fun(depth);
            case 8: return case_expr(depth);
            case 9: return letrec_expr(depth);
            case 10:
                if (!fids_.empty()) return apply_bound(depth);
                return let_expr(depth);
            default:
                if (rng_.percent(25)) return counting_recursion(depth);
                return apply_inline_fun(depth);
        }
    }

  private:
    Rng& rng_;
    std::vector<std::string> vars_;
    std::vector<FunctionIdentifier> fids_;
    // Arity of each bound identifier mirrors fids_.
    int counter_ = 0;

    std::string fresh_var() { return "X" + std::to_string(++counter_); }
    FunctionIdentifier fresh_fid(std::size_t arity) {
        return FunctionIdentifier{"f" + std::to_string(++counter_), arity};
    }

    template <typename Fn>
    auto scoped_vars(const std::vector<std::string>& names, Fn fn) {
        const std::size_t n = vars_.size();
        vars_.insert(vars_.end(), names.begin(), names.end());
        auto out = fn();
        vars_.resize(n);
        return out;
    }

    ExprPtr leaf() {
        if (!vars_.empty() && rng_.percent(40))
            return evar(rng_.pick(vars_));
        if (!fids_.empty() && rng_.percent(10)) {
            const auto& fid = rng_.pick(fids_);
            return efunsig(fid.name, fid.arity);
        }
        return elit(literal(rng_));
    }

    ExprPtr let_expr(int depth) {
        const std::size_t n = 1 + rng_.below(2);
        std::vector<std::string> names;
        std::vector<ExprPtr> binds;
        for (std::size_t i = 0; i < n; ++i) {
            names.push_back(fresh_var());
            binds.push_back(gen(depth - 1));
        }
        ExprPtr body = scoped_vars(names, [&] { return gen(depth - 1); });
        return elet(std::move(names), std::move(binds), std::move(body));
    }

    ExprPtr apply_inline_fun(int depth) {
        const std::size_t n = rng_.below(3);
        std::vector<std::string> params;
        for (std::size_t i = 0; i < n; ++i) params.push_back(fresh_var());
        ExprPtr body = scoped_vars(params, [&] { return gen(depth - 1); });
        std::vector<ExprPtr> args;
        for (std::size_t i = 0; i < n; ++i) args.push_back(gen(depth - 1));
        return eapply(efun(std::move(params), std::move(body)),
                      std::move(args));
    }

    ExprPtr case_expr(int depth) {
        ExprPtr scrutinee = gen(depth - 1);
        std::vector<Clause> clauses;
        const std::size_t extra = rng_.below(3);
        for (std::size_t i = 0; i < extra; ++i) {
            // May or may not match; if it does, the body must still succeed.
            PatternPtr p;
            switch (rng_.below(3)) {
                case 0: p = pint(rng_.range(-2, 2)); break;
                case 1: p = patom(rng_.pick(kAtomPool)); break;
                default: {
                    std::string a = fresh_var(), b = fresh_var();
                    PatternPtr pa = pvar(a);
                    PatternPtr pb = pvar(b);
                    ExprPtr body = scoped_vars({a, b}, [&] {
                        return gen(depth - 1);
                    });
                    clauses.push_back(Clause{
                        ptuple({std::move(pa), std::move(pb)}),
                        eatom(rng_.percent(70) ? "true" : "false"),
                        std::move(body)});
                    continue;
                }
            }
            clauses.push_back(
                Clause{std::move(p),
                       eatom(rng_.percent(70) ? "true" : "false"),
                       gen(depth - 1)});
        }
        std::string catch_all = fresh_var();
        ExprPtr body =
            scoped_vars({catch_all}, [&] { return gen(depth - 1); });
        clauses.push_back(
            Clause{pvar(catch_all), eatom("true"), std::move(body)});
        return ecase(std::move(scrutinee), std::move(clauses));
    }

    // Definitions never call the identifiers being introduced, so applying
    // them cannot loop.
    ExprPtr letrec_expr(int depth) {
        const std::size_t n = 1 + rng_.below(2);
        std::vector<FunctionIdentifier> fnames;
        std::vector<FunDef> funs;
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t arity = rng_.below(3);
            fnames.push_back(fresh_fid(arity));
            std::vector<std::string> params;
            for (std::size_t j = 0; j < arity; ++j)
                params.push_back(fresh_var());
            ExprPtr body = scoped_vars(params, [&] { return gen(depth - 1); });
            funs.push_back(FunDef{std::move(params), std::move(body)});
        }
        const std::size_t nf = fids_.size();
        fids_.insert(fids_.end(), fnames.begin(), fnames.end());
        ExprPtr body = gen(depth - 1);
        fids_.resize(nf);
        return eletrec(std::move(fnames), std::move(funs), std::move(body));
    }

    ExprPtr apply_bound(int depth) {
        // Copy: generating the arguments can grow fids_ underneath us.
        const FunctionIdentifier fid = rng_.pick(fids_);
        std::vector<ExprPtr> args;
        for (std::size_t i = 0; i < fid.arity; ++i)
            args.push_back(gen(depth - 1));
        return eapply(efunsig(fid.name, fid.arity), std::move(args));
    }

    ExprPtr counting_recursion(int depth) {
        FunctionIdentifier fid = fresh_fid(1);
        std::string param = fresh_var();
        std::string m = fresh_var();
        ExprPtr base = scoped_vars({param}, [&] { return gen(depth - 1); });
        ExprPtr step = eapply(efunsig(fid.name, 1),
                              {ecall("plus", {evar(m), eint(-1)})});
        ExprPtr fun_body = ecase(
            evar(param),
            {Clause{pint(0), eatom("true"), std::move(base)},
             Clause{pvar(m), eatom("true"), std::move(step)}});
        return eletrec({fid}, {FunDef{{param}, std::move(fun_body)}},
                       eapply(efunsig(fid.name, 1),
                              {eint(rng_.range(0, 3))}));
    }
};

// ------------------------------------------------- arbitrary well-formed

class SyntaxGen {
  public:
    explicit SyntaxGen(Rng& rng) : rng_(rng) {}

    ExprPtr gen(int depth) {
        if (depth <= 0) return leaf();
        switch (rng_.below(12)) {
            case 0: return leaf();
            case 1: return efun(params(rng_.below(3)), gen(depth - 1));
            case 2: return elist(gen(depth - 1), gen(depth - 1));
            case 3: {
                std::vector<ExprPtr> elements;
                const std::size_t n = 1 + rng_.below(3);
                for (std::size_t i = 0; i < n; ++i)
                    elements.push_back(gen(depth - 1));
                return etuple(std::move(elements));
            }
            case 4: {
                std::vector<ExprPtr> args;
                const std::size_t n = rng_.below(3);
                for (std::size_t i = 0; i < n; ++i)
                    args.push_back(gen(depth - 1));
                return ecall(rng_.percent(60) ? "plus" : rng_.pick(kAtomPool),
                             std::move(args));
            }
            case 5: {
                std::vector<ExprPtr> args;
                const std::size_t n = rng_.below(3);
                for (std::size_t i = 0; i < n; ++i)
                    args.push_back(gen(depth - 1));
                return eapply(gen(depth - 1), std::move(args));
            }
            case 6: {
                std::vector<Clause> clauses;
                const std::size_t n = 1 + rng_.below(2);
                for (std::size_t i = 0; i < n; ++i) {
                    pattern_names_ = 0;
                    clauses.push_back(Clause{pattern(depth - 1),
                                             gen(depth - 1), gen(depth - 1)});
                }
                return ecase(gen(depth - 1), std::move(clauses));
            }
            case 7: {
                const std::size_t n = 1 + rng_.below(2);
                std::vector<ExprPtr> binds;
                for (std::size_t i = 0; i < n; ++i)
                    binds.push_back(gen(depth - 1));
                return elet(params(n), std::move(binds), gen(depth - 1));
            }
            case 8: {
                const std::size_t n = 1 + rng_.below(2);
                std::vector<FunctionIdentifier> fnames;
                std::vector<FunDef> funs;
                for (std::size_t i = 0; i < n; ++i) {
                    const std::size_t arity = rng_.below(3);
                    fnames.push_back(FunctionIdentifier{
                        "r" + std::to_string(++name_counter_), arity});
                    funs.push_back(FunDef{params(arity), gen(depth - 1)});
                }
                return eletrec(std::move(fnames), std::move(funs),
                               gen(depth - 1));
            }
            case 9: {
                std::vector<ExprPtr> keys, values;
                const std::size_t n = 1 + rng_.below(2);
                for (std::size_t i = 0; i < n; ++i) {
                    keys.push_back(gen(depth - 1));
                    values.push_back(gen(depth - 1));
                }
                return emap(std::move(keys), std::move(values));
            }
            case 10: {
                const auto& fid = rng_.pick(kFidPool);
                return efunsig(fid.name, fid.arity);
            }
            default: return leaf();
        }
    }

  private:
    Rng& rng_;
    int name_counter_ = 0;
    int pattern_names_ = 0;

    ExprPtr leaf() {
        if (rng_.percent(35)) return evar(rng_.pick(kVarPool));
        return elit(literal(rng_));
    }

    std::vector<std::string> params(std::size_t n) {
        std::vector<std::string> out;
        for (std::size_t i = 0; i < n; ++i)
            out.push_back("P" + std::to_string(++name_counter_));
        return out;
    }

    PatternPtr pattern(int depth) {
        if (depth <= 0 || rng_.percent(40)) {
            if (rng_.percent(50))
                return pvar("Q" + std::to_string(++pattern_names_));
            return plit(literal(rng_));
        }
        if (rng_.percent(50))
            return plist(pattern(depth - 1), pattern(depth - 1));
        std::vector<PatternPtr> elements;
        const std::size_t n = 1 + rng_.below(3);
        for (std::size_t i = 0; i < n; ++i)
            elements.push_back(pattern(depth - 1));
        return ptuple(std::move(elements));
    }
};

}  // namespace

ExprPtr terminating_expr(Rng& rng, int depth) {
    return TerminatingGen(rng).gen(depth);
}

ExprPtr well_formed_expr(Rng& rng, int depth) {
    return SyntaxGen(rng).gen(depth);
}

}  // namespace cerl::gen
