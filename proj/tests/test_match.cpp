#include <doctest.h>

#include <map>

#include "cerl/gen.hpp"
#include "cerl/match.hpp"

using namespace cerl;

namespace {

// Independent matcher used as an oracle: merges name->value maps bottom-up
// instead of concatenating binding lists.
using BindMap = std::map<std::string, ValuePtr>;

std::optional<BindMap> naive_match(const Value& v, const Pattern& p) {
    if (const auto* pv = std::get_if<PVar>(&p.node)) {
        BindMap out;
        out.emplace(pv->name, std::make_shared<const Value>(v));
        return out;
    }
    if (const auto* pl = std::get_if<PLiteral>(&p.node)) {
        const auto* vl = std::get_if<VLiteral>(&v.node);
        if (vl && vl->lit == pl->lit) return BindMap{};
        return std::nullopt;
    }
    if (const auto* pc = std::get_if<PList>(&p.node)) {
        const auto* vc = std::get_if<VList>(&v.node);
        if (!vc) return std::nullopt;
        auto h = naive_match(*vc->head, *pc->head);
        auto t = naive_match(*vc->tail, *pc->tail);
        if (!h || !t) return std::nullopt;
        h->insert(t->begin(), t->end());
        return h;
    }
    const auto& pt = std::get<PTuple>(p.node);
    const auto* vt = std::get_if<VTuple>(&v.node);
    if (!vt || vt->elements.size() != pt.elements.size()) return std::nullopt;
    BindMap out;
    for (std::size_t i = 0; i < pt.elements.size(); ++i) {
        auto sub = naive_match(*vt->elements[i], *pt.elements[i]);
        if (!sub) return std::nullopt;
        out.insert(sub->begin(), sub->end());
    }
    return out;
}

BindMap as_map(const Bindings& bindings) {
    BindMap out;
    for (const auto& [name, value] : bindings) out.emplace(name, value);
    return out;
}

bool maps_agree(const BindMap& a, const BindMap& b) {
    if (a.size() != b.size()) return false;
    for (const auto& [name, value] : a) {
        auto it = b.find(name);
        if (it == b.end() || !value_eq(value, it->second)) return false;
    }
    return true;
}

// Linear pattern whose shape mirrors the value, mixing variables and ground
// sub-patterns; only literals, lists and tuples are mirrored.
PatternPtr pattern_of_value(const Value& v, gen::Rng& rng, int& counter) {
    if (rng.percent(30)) return pvar("M" + std::to_string(++counter));
    if (const auto* l = std::get_if<VLiteral>(&v.node)) return plit(l->lit);
    if (const auto* c = std::get_if<VList>(&v.node))
        return plist(pattern_of_value(*c->head, rng, counter),
                     pattern_of_value(*c->tail, rng, counter));
    if (const auto* t = std::get_if<VTuple>(&v.node)) {
        std::vector<PatternPtr> elements;
        for (const auto& el : t->elements)
            elements.push_back(pattern_of_value(*el, rng, counter));
        return ptuple(std::move(elements));
    }
    return pvar("M" + std::to_string(++counter));
}

// Ground (variable-free) values only: literals, lists, tuples.
ValuePtr ground_value(gen::Rng& rng, int depth) {
    if (depth <= 0 || rng.percent(40)) return vlit(gen::literal(rng));
    if (rng.percent(50))
        return vlist(ground_value(rng, depth - 1), ground_value(rng, depth - 1));
    std::vector<ValuePtr> elements;
    const std::size_t n = rng.below(3);
    for (std::size_t i = 0; i < n; ++i)
        elements.push_back(ground_value(rng, depth - 1));
    return vtuple(std::move(elements));
}

}  // namespace

TEST_CASE("match_pattern basics") {
    auto hit = match_pattern(*vint(5), *pvar("X"));
    REQUIRE(hit.has_value());
    REQUIRE(hit->size() == 1);
    CHECK(hit->front().first == "X");
    CHECK(value_eq(hit->front().second, vint(5)));

    CHECK(!match_pattern(*vint(5), *pint(6)).has_value());
    CHECK(match_pattern(*vint(5), *pint(5)).has_value());
    CHECK(match_pattern(*vint(5), *pint(5))->empty());
}

TEST_CASE("tuple patterns match componentwise") {
    auto v = vtuple({vint(1), vint(2)});
    auto hit = match_pattern(*v, *ptuple({pvar("A"), pvar("B")}));
    REQUIRE(hit.has_value());
    REQUIRE(hit->size() == 2);
    CHECK((*hit)[0].first == "A");
    CHECK(value_eq((*hit)[0].second, vint(1)));
    CHECK((*hit)[1].first == "B");
    CHECK(value_eq((*hit)[1].second, vint(2)));

    auto oracle = naive_match(*v, *ptuple({pvar("A"), pvar("B")}));
    REQUIRE(oracle.has_value());
    CHECK(maps_agree(as_map(*hit), *oracle));
}

TEST_CASE("tuple arity mismatch fails instead of erroring") {
    auto v = vtuple({vint(1), vint(2)});
    CHECK(!match_pattern(*v, *ptuple({pvar("A")})).has_value());
    CHECK(!match_pattern(*v, *ptuple({pvar("A"), pvar("B"), pvar("C")}))
               .has_value());
}

TEST_CASE("list patterns walk head and tail") {
    auto v = vlist(vint(1), vlist(vint(2), vlit(EmptyList{})));
    auto hit = match_pattern(
        *v, *plist(pvar("H"), plist(pvar("M"), plit(EmptyList{}))));
    REQUIRE(hit.has_value());
    REQUIRE(hit->size() == 2);
    CHECK(value_eq((*hit)[0].second, vint(1)));
    CHECK(value_eq((*hit)[1].second, vint(2)));
}

TEST_CASE("maps only match variables") {
    auto m = vmap({vatom("k")}, {vint(1)});
    CHECK(match_pattern(*m, *pvar("X")).has_value());
    CHECK(!match_pattern(*m, *plit(EmptyMap{})).has_value());
    CHECK(!match_pattern(*m, *ptuple({pvar("A")})).has_value());
    // The empty-map literal value still matches its literal pattern.
    CHECK(match_pattern(*vlit(EmptyMap{}), *plit(EmptyMap{})).has_value());
}

TEST_CASE("closures only match variables") {
    auto cl = vclosure(ClosureRef{Environment{}}, {}, eint(1));
    CHECK(match_pattern(*cl, *pvar("F")).has_value());
    CHECK(!match_pattern(*cl, *patom("f")).has_value());
}

TEST_CASE("match_pattern agrees with the naive oracle on generated inputs") {
    for (std::uint64_t seed = 1; seed <= 400; ++seed) {
        gen::Rng rng(seed);
        auto v = ground_value(rng, 3);
        int counter = 0;
        PatternPtr p;
        if (rng.percent(70)) {
            p = pattern_of_value(*v, rng, counter);
        } else {
            // Unrelated pattern; usually a mismatch.
            auto other = ground_value(rng, 2);
            p = pattern_of_value(*other, rng, counter);
        }
        auto mine = match_pattern(*v, *p);
        auto oracle = naive_match(*v, *p);
        REQUIRE(mine.has_value() == oracle.has_value());
        if (mine) {
            CHECK(maps_agree(as_map(*mine), *oracle));
            // Linearity: every variable bound exactly once.
            CHECK(as_map(*mine).size() == mine->size());
        }
    }
}

TEST_CASE("ground patterns match exactly the equal value") {
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        gen::Rng rng(seed);
        auto v = ground_value(rng, 3);
        // Fully ground mirror of the value, no variables anywhere.
        struct Grounder {
            static PatternPtr of(const Value& v) {
                if (const auto* l = std::get_if<VLiteral>(&v.node))
                    return plit(l->lit);
                if (const auto* c = std::get_if<VList>(&v.node))
                    return plist(of(*c->head), of(*c->tail));
                const auto& t = std::get<VTuple>(v.node);
                std::vector<PatternPtr> elements;
                for (const auto& el : t.elements)
                    elements.push_back(of(*el));
                return ptuple(std::move(elements));
            }
        };
        auto p = Grounder::of(*v);
        auto hit = match_pattern(*v, *p);
        REQUIRE(hit.has_value());
        CHECK(hit->empty());

        // A perturbed value no longer matches.
        auto perturbed = vtuple({std::make_shared<const Value>(*v), vint(99)});
        CHECK(!match_pattern(*perturbed, *p).has_value());
    }
}

TEST_CASE("match_clause selects by index") {
    std::vector<Clause> cs = {Clause{pvar("X"), eatom("true"), evar("X")}};
    auto hit = match_clause(*vint(5), cs, 0);
    REQUIRE(hit.has_value());
    CHECK(*hit->guard == *eatom("true"));
    CHECK(*hit->body == *evar("X"));
    REQUIRE(hit->bindings.size() == 1);
    CHECK(value_eq(hit->bindings.front().second, vint(5)));

    std::vector<Clause> no = {Clause{pint(6), eatom("true"), eint(0)}};
    CHECK(!match_clause(*vint(5), no, 0).has_value());
    CHECK(!match_clause(*vint(5), cs, cs.size()).has_value());
}
