#include <doctest.h>

#include "cerl/checker.hpp"
#include "cerl/eval.hpp"
#include "cerl/gen.hpp"
#include "helpers.hpp"
#include "mutations.hpp"

using namespace cerl;

namespace {

DerivPtr derivation_of(const std::string& corpus_name,
                       std::uint64_t fuel = 2000) {
    auto e = testutil::corpus_expr(corpus_name);
    auto out = eval_expr(EvalConfig{{}, {}, e, fuel});
    const auto* s = std::get_if<Success>(&out);
    REQUIRE(s != nullptr);
    return s->derivation;
}

}  // namespace

TEST_CASE("evaluator-produced derivations validate") {
    for (const char* name :
         {"let_binding.core", "closure_env_capture.core",
          "case_guard.core", "letrec_countdown.core", "map_build.core",
          "fun_apply_args.core", "list_pair.core"}) {
        CAPTURE(name);
        auto d = derivation_of(name);
        auto report = validate(*d);
        CHECK(report.valid);
        CHECK(report.violations.empty());
    }
}

TEST_CASE("altering the root result is rejected") {
    auto d = derivation_of("let_binding.core");
    DerivationNode tampered = *d;
    tampered.result = vint(6);
    auto report = validate(tampered);
    CHECK(!report.valid);
    REQUIRE(!report.violations.empty());
    CHECK(report.violations.front().path == "/");
}

TEST_CASE("a fabricated lookup node is rejected") {
    // {X:5} claims X evaluates to 7.
    DerivationNode node;
    node.rule = kRuleVar;
    node.env = insert_value({}, EnvKey{"X"}, vint(5));
    node.expr = evar("X");
    node.result = vint(7);
    auto report = validate(node);
    CHECK(!report.valid);
}

TEST_CASE("a lookup node over an unbound variable is rejected") {
    DerivationNode node;
    node.rule = kRuleVar;
    node.expr = evar("X");
    node.result = vint(7);
    CHECK(!validate(node).valid);
}

TEST_CASE("rule ids must fit the expression constructor") {
    auto d = derivation_of("let_binding.core");
    DerivationNode tampered = *d;
    tampered.rule = kRuleTuple;
    CHECK(!validate(tampered).valid);
}

TEST_CASE("case nodes need complete evidence") {
    auto d = derivation_of("case_guard.core");
    REQUIRE(d->case_evidence.has_value());

    DerivationNode no_evidence = *d;
    no_evidence.case_evidence.reset();
    CHECK(!validate(no_evidence).valid);

    DerivationNode partial = *d;
    auto ev = *partial.case_evidence;
    REQUIRE(!ev.skipped.empty());
    ev.skipped.pop_back();
    partial.case_evidence = ev;
    CHECK(!validate(partial).valid);

    // Claiming a matching clause was a mismatch is caught by recomputation.
    DerivationNode lied = *d;
    auto ev2 = *lied.case_evidence;
    REQUIRE(ev2.skipped.size() == 2);
    REQUIRE(ev2.skipped[1].guard_false != nullptr);
    ev2.skipped[1].guard_false = nullptr;
    lied.case_evidence = ev2;
    CHECK(!validate(lied).valid);
}

TEST_CASE("evidence on non-case nodes is rejected") {
    auto d = derivation_of("let_binding.core");
    DerivationNode tampered = *d;
    tampered.case_evidence = CaseEvidence{0, {}};
    CHECK(!validate(tampered).valid);
}

TEST_CASE("premise environments are cross-checked") {
    auto d = derivation_of("closure_env_capture.core");
    // Tamper with the innermost reachable premise environment.
    DerivationNode tampered = *d;
    REQUIRE(!tampered.premises.empty());
    DerivationNode child = *tampered.premises.back();
    child.env = insert_value(std::move(child.env), EnvKey{"Zz"}, vint(1));
    tampered.premises.back() = std::make_shared<const DerivationNode>(child);
    CHECK(!validate(tampered).valid);
}

TEST_CASE("systematic single-field mutations are all rejected") {
    for (const char* name : {"case_guard.core", "letrec_countdown.core",
                             "swap_values_left.core", "fun_apply_args.core"}) {
        CAPTURE(name);
        auto d = derivation_of(name);
        auto mutants = testutil::all_single_mutations(d);
        CHECK(mutants.size() >= 20);
        for (std::size_t i = 0; i < mutants.size(); ++i) {
            CAPTURE(i);
            CHECK(!validate(*mutants[i]).valid);
        }
    }
}

TEST_CASE("mutations of generated derivations are rejected") {
    for (std::uint64_t seed = 40; seed <= 60; ++seed) {
        gen::Rng rng(seed);
        auto e = gen::terminating_expr(rng, 3);
        auto out = eval_expr(EvalConfig{{}, {}, e, 600});
        const auto* s = std::get_if<Success>(&out);
        REQUIRE(s != nullptr);
        for (const auto& mutant :
             testutil::all_single_mutations(s->derivation))
            CHECK(!validate(*mutant).valid);
    }
}
