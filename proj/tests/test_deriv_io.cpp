#include <doctest.h>

#include "cerl/checker.hpp"
#include "cerl/deriv_io.hpp"
#include "cerl/eval.hpp"
#include "cerl/gen.hpp"
#include "helpers.hpp"

using namespace cerl;

namespace {

DerivPtr derivation_of(const ExprPtr& e, std::uint64_t fuel = 2000) {
    auto out = eval_expr(EvalConfig{{}, {}, e, fuel});
    const auto* s = std::get_if<Success>(&out);
    REQUIRE(s != nullptr);
    return s->derivation;
}

}  // namespace

TEST_CASE("serialize/parse round trip is byte stable") {
    for (const char* name :
         {"let_binding.core", "case_guard.core", "letrec_countdown.core",
          "map_build.core", "fun_wrap_right.core"}) {
        CAPTURE(name);
        auto d = derivation_of(testutil::corpus_expr(name));
        const std::string text = serialize_derivation(*d);
        auto loaded = parse_derivation(text);
        const auto* back = std::get_if<DerivPtr>(&loaded);
        REQUIRE(back != nullptr);
        CHECK(serialize_derivation(**back) == text);
        CHECK(validate(**back).valid);
    }
}

TEST_CASE("serialization is deterministic") {
    auto e = testutil::corpus_expr("case_guard.core");
    CHECK(serialize_derivation(*derivation_of(e)) ==
          serialize_derivation(*derivation_of(e)));
}

TEST_CASE("closure-carrying results survive the round trip intact") {
    // The result is a closure over a non-trivial environment; its captured
    // bindings must come back exactly, not just its display form.
    auto e = testutil::parse_or_throw(
        "let A = {1, 'x'} in let B = fun(P) -> {P, A} in B");
    auto d = derivation_of(e);
    auto loaded = parse_derivation(serialize_derivation(*d));
    const auto* back = std::get_if<DerivPtr>(&loaded);
    REQUIRE(back != nullptr);
    CHECK(value_eq((*back)->result, d->result));
    CHECK(validate(**back).valid);
}

TEST_CASE("generated derivations survive the round trip") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        gen::Rng rng(seed);
        auto e = gen::terminating_expr(rng, 3);
        auto d = derivation_of(e, 600);
        const std::string text = serialize_derivation(*d);
        auto loaded = parse_derivation(text);
        const auto* back = std::get_if<DerivPtr>(&loaded);
        REQUIRE(back != nullptr);
        CHECK(serialize_derivation(**back) == text);
    }
}

TEST_CASE("malformed input reports a load error") {
    CHECK(std::holds_alternative<DerivLoadError>(parse_derivation("not json")));
    CHECK(std::holds_alternative<DerivLoadError>(parse_derivation("{}")));
    CHECK(std::holds_alternative<DerivLoadError>(
        parse_derivation(R"({"rule": 1, "env": [], "clos": [],
                             "expr": "@@", "result": {"kind": "int",
                             "value": 1}, "premises": []})")));
    // Structurally broken values are rejected, not half-loaded.
    CHECK(std::holds_alternative<DerivLoadError>(
        parse_derivation(R"({"rule": 1, "env": [], "clos": [],
                             "expr": "~{}~",
                             "result": {"kind": "map",
                                        "keys": [{"kind": "int", "value": 1}],
                                        "values": []},
                             "premises": []})")));
}

TEST_CASE("tampered payloads parse but do not validate") {
    auto d = derivation_of(testutil::corpus_expr("let_binding.core"));
    std::string text = serialize_derivation(*d);
    const auto pos = text.find("\"rule\": 9");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 9, "\"rule\": 5");
    auto loaded = parse_derivation(text);
    const auto* back = std::get_if<DerivPtr>(&loaded);
    REQUIRE(back != nullptr);
    CHECK(!validate(**back).valid);
}
