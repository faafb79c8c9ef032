#include <doctest.h>

#include "cerl/gen.hpp"
#include "cerl/parser.hpp"
#include "helpers.hpp"

using namespace cerl;

namespace {

ExprPtr ok(const std::string& src) { return testutil::parse_or_throw(src); }

ParseError err(const std::string& src) {
    auto r = parse_expr(src);
    const auto* e = std::get_if<ParseError>(&r);
    REQUIRE(e != nullptr);
    return *e;
}

}  // namespace

TEST_CASE("representative listings parse to the expected trees") {
    CHECK(*ok("let X = 5 in X") == *elet({"X"}, {eint(5)}, evar("X")));

    CHECK(*ok("letrec 'x'/0 = fun() -> apply 'x'/0() in apply 'x'/0()") ==
          *eletrec({{"x", 0}},
                   {FunDef{{}, eapply(efunsig("x", 0), {})}},
                   eapply(efunsig("x", 0), {})));

    CHECK(*ok("let <X, Y> = <6, 5> in call 'plus'(X, Y)") ==
          *elet({"X", "Y"}, {eint(6), eint(5)},
                ecall("plus", {evar("X"), evar("Y")})));
}

TEST_CASE("every corpus file parses") {
    auto files = testutil::corpus_files();
    CHECK(files.size() >= 9);
    for (const auto& path : files) {
        CAPTURE(path.string());
        auto r = parse_expr(testutil::read_file(path));
        CHECK(std::holds_alternative<ExprPtr>(r));
    }
}

TEST_CASE("literals and aggregates") {
    CHECK(*ok("-3") == *eint(-3));
    CHECK(*ok("'ok'") == *eatom("ok"));
    CHECK(*ok("[]") == *elit(EmptyList{}));
    CHECK(*ok("{}") == *elit(EmptyTuple{}));
    CHECK(*ok("~{}~") == *elit(EmptyMap{}));
    CHECK(*ok("[1 | []]") == *elist(eint(1), elit(EmptyList{})));
    CHECK(*ok("{1, 'a'}") == *etuple({eint(1), eatom("a")}));
    CHECK(*ok("~{'k' => 1}~") == *emap({eatom("k")}, {eint(1)}));
}

TEST_CASE("function signature sugar in apply position") {
    CHECK(*ok("apply 'f'/1(2)") == *eapply(efunsig("f", 1), {eint(2)}));
    CHECK(*ok("'f'/1") == *efunsig("f", 1));
    // An atom not followed by a slash stays a literal.
    CHECK(*ok("'f'") == *eatom("f"));
}

TEST_CASE("module-qualified calls keep only the function atom") {
    CHECK(*ok("call 'erlang':'plus'(1, 2)") ==
          *ok("call 'plus'(1, 2)"));
}

TEST_CASE("case clauses with guards") {
    auto e = ok("case 1 of 0 when 'false' -> 'a' X when 'true' -> X end");
    const auto* c = std::get_if<ECase>(&e->node);
    REQUIRE(c != nullptr);
    REQUIRE(c->clauses.size() == 2);
    CHECK(*c->clauses[0].pattern == *pint(0));
    CHECK(*c->clauses[1].pattern == *pvar("X"));
    CHECK(*c->clauses[1].guard == *eatom("true"));
}

TEST_CASE("comments and whitespace are insignificant") {
    CHECK(*ok("let\n% bound\n  X =\t5 in X % trailing\n") ==
          *ok("let X = 5 in X"));
}

TEST_CASE("nested lets bind as far right as possible") {
    CHECK(*ok("let X = let Y = 1 in Y in X") ==
          *elet({"X"}, {elet({"Y"}, {eint(1)}, evar("Y"))}, evar("X")));
    // The body of the fun reaches to the end of the apply arguments.
    CHECK(*ok("let F = fun() -> let A = 1 in A in apply F()") ==
          *elet({"F"}, {efun({}, elet({"A"}, {eint(1)}, evar("A")))},
                eapply(evar("F"), {})));
}

TEST_CASE("parse errors carry positions and expectations") {
    auto e1 = err("let X = in X");
    CHECK(e1.line == 1);
    CHECK(e1.column == 9);
    CHECK(!e1.expected.empty());

    auto e2 = err("let X = 5");
    CHECK(!e2.expected.empty());

    auto e3 = err("case 1 of end");
    CHECK(e3.line == 1);

    auto multi = err("let X = 5 in\nlet Y = ? in X");
    CHECK(multi.line == 2);
}

TEST_CASE("reserved and malformed atoms are rejected") {
    CHECK(err("'@badarith'").message.find("reserved") != std::string::npos);
    CHECK(!std::holds_alternative<ExprPtr>(parse_expr("''")));
    CHECK(!std::holds_alternative<ExprPtr>(parse_expr("'unterminated")));
    CHECK(!std::holds_alternative<ExprPtr>(parse_expr("bare_word")));
}

TEST_CASE("trailing input is an error") {
    CHECK(!std::holds_alternative<ExprPtr>(parse_expr("5 6")));
    CHECK(!std::holds_alternative<ExprPtr>(parse_expr("let X = 5 in X end")));
}

TEST_CASE("formatting is canonical") {
    CHECK(format_expr(elet({"X"}, {eint(5)}, evar("X"))) ==
          "let X = 5 in X");
    CHECK(format_expr(efunsig("x", 0)) == "'x'/0");
    CHECK(format_expr(eint(5)) == "5");
    CHECK(format_expr(emap({eatom("k")}, {eint(1)})) == "~{'k' => 1}~");
    CHECK(format_expr(eletrec({{"f", 1}}, {FunDef{{"A"}, evar("A")}},
                              eapply(efunsig("f", 1), {eint(2)}))) ==
          "letrec 'f'/1 = fun(A) -> A in apply 'f'/1(2)");
}

TEST_CASE("format then parse is the identity on generated programs") {
    for (std::uint64_t seed = 1; seed <= 500; ++seed) {
        gen::Rng rng(seed);
        auto e = gen::well_formed_expr(rng, 4);
        const std::string text = format_expr(e);
        CAPTURE(text);
        auto r = parse_expr(text);
        const auto* back = std::get_if<ExprPtr>(&r);
        REQUIRE(back != nullptr);
        CHECK(**back == *e);
        // Formatting is stable under the round trip.
        CHECK(format_expr(*back) == text);
    }
}

TEST_CASE("literal-only parser for inline bindings") {
    auto lit = parse_literal_text("5");
    REQUIRE(lit.has_value());
    CHECK(*lit == Literal{Integer{5}});
    CHECK(parse_literal_text("'ok'").has_value());
    CHECK(parse_literal_text("[]").has_value());
    CHECK(!parse_literal_text("let X = 5 in X").has_value());
    CHECK(!parse_literal_text("{1}").has_value());
}
