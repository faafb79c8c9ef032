#include "cerl/ast.hpp"

#include <algorithm>

namespace cerl {

bool operator<(const FunctionIdentifier& a, const FunctionIdentifier& b) {
    if (a.name != b.name) return a.name < b.name;
    return a.arity < b.arity;
}

std::string render_funid(const FunctionIdentifier& fid) {
    return "'" + fid.name + "'/" + std::to_string(fid.arity);
}

// ---------------------------------------------------------------- equality

bool operator==(const Pattern& a, const Pattern& b) {
    if (a.node.index() != b.node.index()) return false;
    if (const auto* pa = std::get_if<PVar>(&a.node))
        return pa->name == std::get<PVar>(b.node).name;
    if (const auto* pa = std::get_if<PLiteral>(&a.node))
        return pa->lit == std::get<PLiteral>(b.node).lit;
    if (const auto* pa = std::get_if<PList>(&a.node)) {
        const auto& pb = std::get<PList>(b.node);
        return *pa->head == *pb.head && *pa->tail == *pb.tail;
    }
    const auto& ta = std::get<PTuple>(a.node);
    const auto& tb = std::get<PTuple>(b.node);
    return std::equal(ta.elements.begin(), ta.elements.end(),
                      tb.elements.begin(), tb.elements.end(),
                      [](const PatternPtr& x, const PatternPtr& y) {
                          return *x == *y;
                      });
}

namespace {

bool all_equal(const std::vector<ExprPtr>& a, const std::vector<ExprPtr>& b) {
    return std::equal(
        a.begin(), a.end(), b.begin(), b.end(),
        [](const ExprPtr& x, const ExprPtr& y) { return *x == *y; });
}

}  // namespace

bool operator==(const Clause& a, const Clause& b) {
    return *a.pattern == *b.pattern && *a.guard == *b.guard &&
           *a.body == *b.body;
}

bool operator==(const FunDef& a, const FunDef& b) {
    return a.params == b.params && *a.body == *b.body;
}

bool operator==(const Expression& a, const Expression& b) {
    if (a.node.index() != b.node.index()) return false;
    if (const auto* x = std::get_if<ELiteral>(&a.node))
        return x->lit == std::get<ELiteral>(b.node).lit;
    if (const auto* x = std::get_if<EVar>(&a.node))
        return x->name == std::get<EVar>(b.node).name;
    if (const auto* x = std::get_if<EFunSig>(&a.node))
        return x->fid == std::get<EFunSig>(b.node).fid;
    if (const auto* x = std::get_if<EFun>(&a.node)) {
        const auto& y = std::get<EFun>(b.node);
        return x->params == y.params && *x->body == *y.body;
    }
    if (const auto* x = std::get_if<EList>(&a.node)) {
        const auto& y = std::get<EList>(b.node);
        return *x->head == *y.head && *x->tail == *y.tail;
    }
    if (const auto* x = std::get_if<ETuple>(&a.node))
        return all_equal(x->elements, std::get<ETuple>(b.node).elements);
    if (const auto* x = std::get_if<ECall>(&a.node)) {
        const auto& y = std::get<ECall>(b.node);
        return x->fname == y.fname && all_equal(x->args, y.args);
    }
    if (const auto* x = std::get_if<EApply>(&a.node)) {
        const auto& y = std::get<EApply>(b.node);
        return *x->target == *y.target && all_equal(x->args, y.args);
    }
    if (const auto* x = std::get_if<ECase>(&a.node)) {
        const auto& y = std::get<ECase>(b.node);
        return *x->scrutinee == *y.scrutinee && x->clauses == y.clauses;
    }
    if (const auto* x = std::get_if<ELet>(&a.node)) {
        const auto& y = std::get<ELet>(b.node);
        return x->vars == y.vars && all_equal(x->binds, y.binds) &&
               *x->body == *y.body;
    }
    if (const auto* x = std::get_if<ELetrec>(&a.node)) {
        const auto& y = std::get<ELetrec>(b.node);
        return x->fnames == y.fnames && x->funs == y.funs &&
               *x->body == *y.body;
    }
    const auto& ma = std::get<EMap>(a.node);
    const auto& mb = std::get<EMap>(b.node);
    return all_equal(ma.keys, mb.keys) && all_equal(ma.values, mb.values);
}

// ---------------------------------------------------------------- builders

PatternPtr pvar(std::string name) {
    return std::make_shared<const Pattern>(Pattern{PVar{std::move(name)}});
}
PatternPtr plit(Literal lit) {
    return std::make_shared<const Pattern>(Pattern{PLiteral{std::move(lit)}});
}
PatternPtr pint(std::int64_t v) { return plit(Integer{v}); }
PatternPtr patom(std::string text) { return plit(Atom{std::move(text)}); }
PatternPtr plist(PatternPtr head, PatternPtr tail) {
    return std::make_shared<const Pattern>(
        Pattern{PList{std::move(head), std::move(tail)}});
}
PatternPtr ptuple(std::vector<PatternPtr> elements) {
    return std::make_shared<const Pattern>(
        Pattern{PTuple{std::move(elements)}});
}

ExprPtr elit(Literal lit) {
    return std::make_shared<const Expression>(
        Expression{ELiteral{std::move(lit)}});
}
ExprPtr eint(std::int64_t v) { return elit(Integer{v}); }
ExprPtr eatom(std::string text) { return elit(Atom{std::move(text)}); }
ExprPtr evar(std::string name) {
    return std::make_shared<const Expression>(Expression{EVar{std::move(name)}});
}
ExprPtr efunsig(std::string name, std::size_t arity) {
    return std::make_shared<const Expression>(
        Expression{EFunSig{FunctionIdentifier{std::move(name), arity}}});
}
ExprPtr efun(std::vector<std::string> params, ExprPtr body) {
    return std::make_shared<const Expression>(
        Expression{EFun{std::move(params), std::move(body)}});
}
ExprPtr elist(ExprPtr head, ExprPtr tail) {
    return std::make_shared<const Expression>(
        Expression{EList{std::move(head), std::move(tail)}});
}
ExprPtr etuple(std::vector<ExprPtr> elements) {
    return std::make_shared<const Expression>(
        Expression{ETuple{std::move(elements)}});
}
ExprPtr ecall(std::string fname, std::vector<ExprPtr> args) {
    return std::make_shared<const Expression>(
        Expression{ECall{std::move(fname), std::move(args)}});
}
ExprPtr eapply(ExprPtr target, std::vector<ExprPtr> args) {
    return std::make_shared<const Expression>(
        Expression{EApply{std::move(target), std::move(args)}});
}
ExprPtr ecase(ExprPtr scrutinee, std::vector<Clause> clauses) {
    return std::make_shared<const Expression>(
        Expression{ECase{std::move(scrutinee), std::move(clauses)}});
}
ExprPtr elet(std::vector<std::string> vars, std::vector<ExprPtr> binds,
             ExprPtr body) {
    return std::make_shared<const Expression>(
        Expression{ELet{std::move(vars), std::move(binds), std::move(body)}});
}
ExprPtr eletrec(std::vector<FunctionIdentifier> fnames,
                std::vector<FunDef> funs, ExprPtr body) {
    return std::make_shared<const Expression>(Expression{
        ELetrec{std::move(fnames), std::move(funs), std::move(body)}});
}
ExprPtr emap(std::vector<ExprPtr> keys, std::vector<ExprPtr> values) {
    return std::make_shared<const Expression>(
        Expression{EMap{std::move(keys), std::move(values)}});
}

// ------------------------------------------------------------ static checks

const char* diag_code_name(DiagCode code) {
    switch (code) {
        case DiagCode::LengthMismatch: return "LengthMismatch";
        case DiagCode::NonlinearPattern: return "NonlinearPattern";
        case DiagCode::DuplicateParams: return "DuplicateParams";
        case DiagCode::ArityMismatch: return "ArityMismatch";
        case DiagCode::EmptyAtom: return "EmptyAtom";
        case DiagCode::EmptyFunctionName: return "EmptyFunctionName";
    }
    return "?";
}

namespace {

class WellFormed {
  public:
    std::vector<Diagnostic> run(const Expression& e) {
        path_ = "";
        visit(e);
        return std::move(diags_);
    }

  private:
    std::string path_;
    std::vector<Diagnostic> diags_;

    void report(DiagCode code, std::string detail) {
        diags_.push_back(
            Diagnostic{path_.empty() ? "/" : path_, code, std::move(detail)});
    }

    void at(const std::string& seg, const auto& fn) {
        std::string saved = path_;
        path_ += "/" + seg;
        fn();
        path_ = saved;
    }

    void check_literal(const Literal& lit) {
        if (const auto* a = std::get_if<Atom>(&lit); a && a->text.empty())
            report(DiagCode::EmptyAtom, "atom text must be non-empty");
    }

    void check_funid(const FunctionIdentifier& fid) {
        if (fid.name.empty())
            report(DiagCode::EmptyFunctionName,
                   "function identifier name must be non-empty");
    }

    void check_params(const std::vector<std::string>& params) {
        std::set<std::string> seen;
        for (const auto& p : params) {
            if (!seen.insert(p).second) {
                report(DiagCode::DuplicateParams,
                       "parameter " + p + " repeats");
                return;
            }
        }
    }

    // Collects pattern variables; repeats break linearity.
    void check_pattern(const Pattern& p, std::set<std::string>& seen) {
        if (const auto* v = std::get_if<PVar>(&p.node)) {
            if (!seen.insert(v->name).second)
                report(DiagCode::NonlinearPattern,
                       "variable " + v->name + " repeats in pattern");
            return;
        }
        if (const auto* l = std::get_if<PLiteral>(&p.node)) {
            check_literal(l->lit);
            return;
        }
        if (const auto* c = std::get_if<PList>(&p.node)) {
            check_pattern(*c->head, seen);
            check_pattern(*c->tail, seen);
            return;
        }
        for (const auto& el : std::get<PTuple>(p.node).elements)
            check_pattern(*el, seen);
    }

    void visit(const Expression& e) {
        std::visit([this](const auto& n) { node(n); }, e.node);
    }

    void node(const ELiteral& n) { check_literal(n.lit); }
    void node(const EVar&) {}
    void node(const EFunSig& n) { check_funid(n.fid); }

    void node(const EFun& n) {
        check_params(n.params);
        at("body", [&] { visit(*n.body); });
    }

    void node(const EList& n) {
        at("head", [&] { visit(*n.head); });
        at("tail", [&] { visit(*n.tail); });
    }

    void node(const ETuple& n) {
        for (std::size_t i = 0; i < n.elements.size(); ++i)
            at("elements[" + std::to_string(i) + "]",
               [&] { visit(*n.elements[i]); });
    }

    void node(const ECall& n) {
        for (std::size_t i = 0; i < n.args.size(); ++i)
            at("args[" + std::to_string(i) + "]", [&] { visit(*n.args[i]); });
    }

    void node(const EApply& n) {
        at("target", [&] { visit(*n.target); });
        for (std::size_t i = 0; i < n.args.size(); ++i)
            at("args[" + std::to_string(i) + "]", [&] { visit(*n.args[i]); });
    }

    void node(const ECase& n) {
        at("scrutinee", [&] { visit(*n.scrutinee); });
        for (std::size_t i = 0; i < n.clauses.size(); ++i) {
            const auto& c = n.clauses[i];
            const std::string base = "clauses[" + std::to_string(i) + "]";
            at(base + "/pattern", [&] {
                std::set<std::string> seen;
                check_pattern(*c.pattern, seen);
            });
            at(base + "/guard", [&] { visit(*c.guard); });
            at(base + "/body", [&] { visit(*c.body); });
        }
    }

    void node(const ELet& n) {
        if (n.vars.size() != n.binds.size())
            report(DiagCode::LengthMismatch,
                   std::to_string(n.vars.size()) + " vars, " +
                       std::to_string(n.binds.size()) + " binds");
        for (std::size_t i = 0; i < n.binds.size(); ++i)
            at("binds[" + std::to_string(i) + "]", [&] { visit(*n.binds[i]); });
        at("body", [&] { visit(*n.body); });
    }

    void node(const ELetrec& n) {
        if (n.fnames.size() != n.funs.size())
            report(DiagCode::LengthMismatch,
                   std::to_string(n.fnames.size()) + " fnames, " +
                       std::to_string(n.funs.size()) + " funs");
        for (const auto& fid : n.fnames) check_funid(fid);
        for (std::size_t i = 0; i < n.funs.size(); ++i) {
            const auto& fd = n.funs[i];
            const std::string base = "funs[" + std::to_string(i) + "]";
            if (i < n.fnames.size() &&
                fd.params.size() != n.fnames[i].arity) {
                at(base, [&] {
                    report(DiagCode::ArityMismatch,
                           render_funid(n.fnames[i]) + " defined with " +
                               std::to_string(fd.params.size()) +
                               " parameters");
                });
            }
            at(base, [&] { check_params(fd.params); });
            at(base + "/body", [&] { visit(*fd.body); });
        }
        at("body", [&] { visit(*n.body); });
    }

    void node(const EMap& n) {
        if (n.keys.size() != n.values.size())
            report(DiagCode::LengthMismatch,
                   std::to_string(n.keys.size()) + " keys, " +
                       std::to_string(n.values.size()) + " values");
        for (std::size_t i = 0; i < n.keys.size(); ++i)
            at("keys[" + std::to_string(i) + "]", [&] { visit(*n.keys[i]); });
        for (std::size_t i = 0; i < n.values.size(); ++i)
            at("values[" + std::to_string(i) + "]",
               [&] { visit(*n.values[i]); });
    }
};

void pattern_vars(const Pattern& p, std::set<std::string>& out) {
    if (const auto* v = std::get_if<PVar>(&p.node)) {
        out.insert(v->name);
    } else if (const auto* c = std::get_if<PList>(&p.node)) {
        pattern_vars(*c->head, out);
        pattern_vars(*c->tail, out);
    } else if (const auto* t = std::get_if<PTuple>(&p.node)) {
        for (const auto& el : t->elements) pattern_vars(*el, out);
    }
}

class FreeVarScan {
  public:
    FreeVars run(const Expression& e) {
        visit(e);
        return std::move(out_);
    }

  private:
    FreeVars out_;
    std::vector<std::string> var_scope_;
    std::vector<FunctionIdentifier> fid_scope_;

    bool var_bound(const std::string& name) const {
        return std::find(var_scope_.begin(), var_scope_.end(), name) !=
               var_scope_.end();
    }
    bool fid_bound(const FunctionIdentifier& fid) const {
        return std::find(fid_scope_.begin(), fid_scope_.end(), fid) !=
               fid_scope_.end();
    }

    void scoped(const std::vector<std::string>& vars,
                const std::vector<FunctionIdentifier>& fids, const auto& fn) {
        const std::size_t nv = var_scope_.size();
        const std::size_t nf = fid_scope_.size();
        var_scope_.insert(var_scope_.end(), vars.begin(), vars.end());
        fid_scope_.insert(fid_scope_.end(), fids.begin(), fids.end());
        fn();
        var_scope_.resize(nv);
        fid_scope_.resize(nf);
    }

    void visit(const Expression& e) {
        std::visit([this](const auto& n) { node(n); }, e.node);
    }

    void node(const ELiteral&) {}
    void node(const EVar& n) {
        if (!var_bound(n.name)) out_.vars.insert(n.name);
    }
    void node(const EFunSig& n) {
        if (!fid_bound(n.fid)) out_.fun_ids.insert(n.fid);
    }
    void node(const EFun& n) {
        scoped(n.params, {}, [&] { visit(*n.body); });
    }
    void node(const EList& n) {
        visit(*n.head);
        visit(*n.tail);
    }
    void node(const ETuple& n) {
        for (const auto& el : n.elements) visit(*el);
    }
    void node(const ECall& n) {
        for (const auto& a : n.args) visit(*a);
    }
    void node(const EApply& n) {
        visit(*n.target);
        for (const auto& a : n.args) visit(*a);
    }
    void node(const ECase& n) {
        visit(*n.scrutinee);
        for (const auto& c : n.clauses) {
            std::set<std::string> pv;
            pattern_vars(*c.pattern, pv);
            std::vector<std::string> bound(pv.begin(), pv.end());
            scoped(bound, {}, [&] {
                visit(*c.guard);
                visit(*c.body);
            });
        }
    }
    void node(const ELet& n) {
        for (const auto& b : n.binds) visit(*b);
        scoped(n.vars, {}, [&] { visit(*n.body); });
    }
    void node(const ELetrec& n) {
        scoped({}, n.fnames, [&] {
            for (const auto& fd : n.funs)
                scoped(fd.params, {}, [&] { visit(*fd.body); });
            visit(*n.body);
        });
    }
    void node(const EMap& n) {
        for (const auto& k : n.keys) visit(*k);
        for (const auto& v : n.values) visit(*v);
    }
};

}  // namespace

std::vector<Diagnostic> well_formed(const Expression& e) {
    return WellFormed{}.run(e);
}

FreeVars free_variables(const Expression& e) { return FreeVarScan{}.run(e); }

}  // namespace cerl
