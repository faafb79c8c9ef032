#include "cerl/match.hpp"

namespace cerl {

namespace {

bool match_into(const ValuePtr& v, const Pattern& p, Bindings& out) {
    if (const auto* pv = std::get_if<PVar>(&p.node)) {
        out.emplace_back(pv->name, v);
        return true;
    }
    if (const auto* pl = std::get_if<PLiteral>(&p.node)) {
        const auto* vl = std::get_if<VLiteral>(&v->node);
        return vl && vl->lit == pl->lit;
    }
    if (const auto* pc = std::get_if<PList>(&p.node)) {
        const auto* vc = std::get_if<VList>(&v->node);
        return vc && match_into(vc->head, *pc->head, out) &&
               match_into(vc->tail, *pc->tail, out);
    }
    const auto& pt = std::get<PTuple>(p.node);
    const auto* vt = std::get_if<VTuple>(&v->node);
    if (!vt || vt->elements.size() != pt.elements.size()) return false;
    for (std::size_t i = 0; i < pt.elements.size(); ++i)
        if (!match_into(vt->elements[i], *pt.elements[i], out)) return false;
    return true;
}

}  // namespace

std::optional<Bindings> match_pattern(const Value& v, const Pattern& p) {
    Bindings out;
    if (!match_into(std::make_shared<const Value>(v), p, out))
        return std::nullopt;
    return out;
}

std::optional<ClauseMatch> match_clause(const Value& v,
                                        const std::vector<Clause>& cs,
                                        std::size_t i) {
    if (i >= cs.size()) return std::nullopt;
    auto bindings = match_pattern(v, *cs[i].pattern);
    if (!bindings) return std::nullopt;
    return ClauseMatch{cs[i].guard, cs[i].body, std::move(*bindings)};
}

}  // namespace cerl
