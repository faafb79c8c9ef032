#include <doctest.h>

#include "cerl/ast.hpp"
#include "cerl/gen.hpp"
#include "cerl/parser.hpp"
#include "helpers.hpp"

using namespace cerl;

TEST_CASE("well_formed accepts leaves") {
    CHECK(well_formed(*eint(5)).empty());
    CHECK(well_formed(*eatom("ok")).empty());
    CHECK(well_formed(*evar("X")).empty());
}

TEST_CASE("well_formed flags letrec length mismatch at root") {
    auto e = eletrec({{"f", 0}}, {}, evar("X"));
    auto diags = well_formed(*e);
    REQUIRE(diags.size() == 1);
    CHECK(diags[0].code == DiagCode::LengthMismatch);
    CHECK(diags[0].path == "/");
}

TEST_CASE("well_formed flags let length mismatch at root") {
    auto e = elet({"X", "Y"}, {eint(5)}, evar("X"));
    auto diags = well_formed(*e);
    REQUIRE(diags.size() == 1);
    CHECK(diags[0].code == DiagCode::LengthMismatch);
    CHECK(diags[0].path == "/");
}

TEST_CASE("well_formed flags map length mismatch") {
    auto e = emap({eint(1)}, {});
    auto diags = well_formed(*e);
    REQUIRE(diags.size() == 1);
    CHECK(diags[0].code == DiagCode::LengthMismatch);
}

TEST_CASE("well_formed flags nonlinear patterns") {
    auto clause =
        Clause{ptuple({pvar("A"), pvar("A")}), eatom("true"), evar("A")};
    auto e = ecase(eint(1), {clause});
    auto diags = well_formed(*e);
    REQUIRE(diags.size() == 1);
    CHECK(diags[0].code == DiagCode::NonlinearPattern);
    CHECK(diags[0].path == "/clauses[0]/pattern");
}

TEST_CASE("well_formed flags duplicate fun parameters") {
    auto diags = well_formed(*efun({"X", "X"}, evar("X")));
    REQUIRE(diags.size() == 1);
    CHECK(diags[0].code == DiagCode::DuplicateParams);
}

TEST_CASE("well_formed flags letrec arity disagreement") {
    auto e = eletrec({{"f", 2}}, {FunDef{{"A"}, evar("A")}}, eint(1));
    auto diags = well_formed(*e);
    REQUIRE(diags.size() == 1);
    CHECK(diags[0].code == DiagCode::ArityMismatch);
    CHECK(diags[0].path == "/funs[0]");
}

TEST_CASE("well_formed flags empty atom text and empty function names") {
    auto atom_diags = well_formed(*eatom(""));
    REQUIRE(atom_diags.size() == 1);
    CHECK(atom_diags[0].code == DiagCode::EmptyAtom);
    auto fid_diags = well_formed(*efunsig("", 0));
    REQUIRE(fid_diags.size() == 1);
    CHECK(fid_diags[0].code == DiagCode::EmptyFunctionName);
}

TEST_CASE("well_formed reports nested paths") {
    auto bad = elet({"X", "Y"}, {eint(1)}, evar("X"));
    auto e = etuple({eint(1), bad});
    auto diags = well_formed(*e);
    REQUIRE(diags.size() == 1);
    CHECK(diags[0].path == "/elements[1]");
}

TEST_CASE("free_variables basics") {
    CHECK(free_variables(*evar("X")).vars == std::set<std::string>{"X"});
    CHECK(free_variables(*elet({"X"}, {eint(5)}, evar("X"))).vars.empty());
    CHECK(free_variables(*efun({}, evar("X"))).vars ==
          std::set<std::string>{"X"});
}

TEST_CASE("free_variables scoping rules") {
    // Let binds only in its body; the bound expressions still see X free.
    auto e = elet({"X"}, {evar("X")}, evar("X"));
    CHECK(free_variables(*e).vars == std::set<std::string>{"X"});

    // Fun parameters shadow.
    CHECK(free_variables(*efun({"X"}, evar("X"))).vars.empty());

    // Clause patterns bind in guard and body, not in the scrutinee.
    auto c = Clause{pvar("A"), evar("A"), evar("A")};
    CHECK(free_variables(*ecase(evar("A"), {c})).vars ==
          std::set<std::string>{"A"});

    // Letrec binds its identifiers in the definitions and in the body.
    auto lr = eletrec({{"f", 0}}, {FunDef{{}, eapply(efunsig("f", 0), {})}},
                      eapply(efunsig("f", 0), {}));
    CHECK(free_variables(*lr).fun_ids.empty());
    CHECK(free_variables(*eapply(efunsig("f", 0), {})).fun_ids ==
          std::set<FunctionIdentifier>{{"f", 0}});
}

TEST_CASE("free_variables distinguishes namespaces") {
    // A call's function name is not an identifier reference.
    auto fv = free_variables(*ecall("plus", {eint(1), eint(2)}));
    CHECK(fv.vars.empty());
    CHECK(fv.fun_ids.empty());
}

TEST_CASE("structural equality is deep") {
    CHECK(*elet({"X"}, {eint(5)}, evar("X")) ==
          *elet({"X"}, {eint(5)}, evar("X")));
    CHECK(!(*elet({"X"}, {eint(5)}, evar("X")) ==
            *elet({"X"}, {eint(6)}, evar("X"))));
    CHECK(*ptuple({pvar("A")}) == *ptuple({pvar("A")}));
    CHECK(!(*ptuple({pvar("A")}) == *plit(EmptyTuple{})));
}

TEST_CASE("free variables survive a format/parse round trip") {
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        gen::Rng rng(seed);
        auto e = gen::well_formed_expr(rng, 4);
        auto back = testutil::parse_or_throw(format_expr(e));
        CHECK(free_variables(*back) == free_variables(*e));
    }
}

TEST_CASE("generated syntax is well formed") {
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        gen::Rng rng(seed);
        auto e = gen::well_formed_expr(rng, 4);
        CHECK(well_formed(*e).empty());
    }
}
