#include <sstream>

#include "doctest.h"

#include "artifact/algexpr.hpp"
#include "artifact/catalog.hpp"
#include "artifact/error.hpp"
#include "artifact/real.hpp"

#include "common.hpp"

using artifact::real;
using namespace artifact::catalog;
using testutil::near_abs;
using testutil::near_rel;
using testutil::R;

namespace {
const real tol = R("1e-9");
}

TEST_CASE("builtin table") {
    artifact::set_precision(30);
    const auto& names = witt_symbols();
    REQUIRE(names.size() == 12);
    CHECK(names.front() == "U5");
    CHECK(names.back() == "UR5");
    for (const auto& name : names) {
        CAPTURE(name);
        CHECK(has_builtin(name));
        const auto& s = builtin(name);
        CHECK(s.witt == name);
        CHECK(s.dimension == 5);
        CHECK(s.size() == 6);
        CHECK(!s.coxeter_symbol.empty());
        int m = static_cast<int>(testutil::gsimplex(name).at("t_tan").size());
        CHECK(s.ideal_count() == m);
    }
    CHECK(!has_builtin("Z9"));
    CHECK_THROWS_AS(builtin("Z9"), artifact::NotFoundError);
    try {
        builtin("Z9");
    } catch (const artifact::NotFoundError& e) {
        CHECK(std::string(e.what()).find("U5") != std::string::npos);
    }
}

TEST_CASE("builtin diagrams match the recorded edge lists") {
    artifact::set_precision(30);
    for (const auto& name : witt_symbols()) {
        CAPTURE(name);
        const auto& s = builtin(name);
        const auto& want = testutil::gsimplex(name).at("diagram");
        REQUIRE(s.diagram.size() == want.size());
        for (std::size_t k = 0; k < s.diagram.size(); ++k) {
            int wi = want[k][0].get<int>();
            int wj = want[k][1].get<int>();
            int ww = want[k][2].get<int>();
            CHECK(s.diagram[k].i == wi);
            CHECK(s.diagram[k].j == wj);
            CHECK(s.diagram[k].weight == ww);
        }
    }
}

TEST_CASE("every builtin passes verification") {
    artifact::set_precision(30);
    for (const auto& name : witt_symbols()) {
        CAPTURE(name);
        auto report = verify(builtin(name), tol);
        REQUIRE(report.checks.size() == 5);
        for (const auto& c : report.checks) {
            CAPTURE(c.name);
            CAPTURE(c.detail);
            CHECK(c.pass);
        }
        CHECK(report.pass());
    }
}

TEST_CASE("verification catches a flipped facet form") {
    artifact::set_precision(30);
    CoxeterSimplex s = builtin("U5");
    for (auto& e : s.form_exprs[0]) {
        auto neg = std::make_shared<artifact::algexpr::Node>();
        neg->op = artifact::algexpr::Op::Neg;
        neg->lhs = e;
        e = neg;
    }
    auto report = verify(s, tol);
    CHECK(!report.pass());
    bool gram_violation = false;
    for (const auto& c : report.checks)
        if (!c.pass && (c.name == "sign" || c.name == "diagram"))
            gram_violation = true;
    CHECK(gram_violation);
}

TEST_CASE("verification surfaces evaluation errors as failures") {
    artifact::set_precision(30);
    CoxeterSimplex s = builtin("U5");
    s.vertex_exprs[3][2] = artifact::algexpr::parse("sqrt(1-2)");
    auto report = verify(s, tol);
    CHECK(!report.pass());
    bool mentioned = false;
    for (const auto& c : report.checks)
        if (!c.pass && !c.detail.empty())
            mentioned = true;
    CHECK(mentioned);
}

TEST_CASE("serialize and load round-trip") {
    artifact::set_precision(30);
    for (const auto& name : {"U5", "P5", "AU5", "UR5"}) {
        CAPTURE(name);
        const auto& s = builtin(name);
        std::string text = serialize(s);
        std::istringstream in(text);
        CoxeterSimplex back = load(in);
        CHECK(back.witt == s.witt);
        CHECK(back.dimension == s.dimension);
        CHECK(back.ideal == s.ideal);
        REQUIRE(back.diagram.size() == s.diagram.size());
        for (std::size_t k = 0; k < s.diagram.size(); ++k) {
            CHECK(back.diagram[k].i == s.diagram[k].i);
            CHECK(back.diagram[k].j == s.diagram[k].j);
            CHECK(back.diagram[k].weight == s.diagram[k].weight);
        }
        REQUIRE(back.volume.has_value());
        CHECK(*back.volume == *s.volume);
        for (int i = 0; i < s.size(); ++i)
            for (int k = 0; k <= 5; ++k) {
                CHECK(artifact::algexpr::render(back.vertex_exprs[i][k]) ==
                      artifact::algexpr::render(s.vertex_exprs[i][k]));
                CHECK(artifact::algexpr::render(back.form_exprs[i][k]) ==
                      artifact::algexpr::render(s.form_exprs[i][k]));
            }
        CHECK(verify(back, tol).pass());
        CHECK(serialize(back) == text);
    }
}

TEST_CASE("load rejects malformed files with line numbers") {
    artifact::set_precision(30);
    auto load_text = [](const std::string& text) {
        std::istringstream in(text);
        return load(in);
    };

    CHECK_THROWS_AS(load_text("witt A\nbogus 1 2 3\n"), artifact::FormatError);
    try {
        load_text("witt A\nbogus 1 2 3\n");
    } catch (const artifact::FormatError& e) {
        CHECK(e.where == 2);
    }

    // vertex before dim
    CHECK_THROWS_AS(load_text("witt A\nvertex 1 0 0 0 0 0\n"), artifact::FormatError);

    // wrong arity
    try {
        load_text("witt A\ndim 5\nvertex 1 0 0\n");
        FAIL("expected FormatError");
    } catch (const artifact::FormatError& e) {
        CHECK(e.where == 3);
        CHECK(std::string(e.what()).find("expected") != std::string::npos);
    }

    // broken expression inside an entry
    CHECK_THROWS_AS(load_text("witt A\ndim 5\nvertex 1 0 0 0 0 sqrt(\n"),
                    artifact::FormatError);

    // duplicate diagram edge
    CHECK_THROWS_AS(load_text("witt A\ndim 5\ndiagram 0-1:3 0-1:4\n"),
                    artifact::FormatError);

    // malformed volume
    CHECK_THROWS_AS(load_text("witt A\ndim 5\nvolume zeta3 7\n"), artifact::FormatError);
    CHECK_THROWS_AS(load_text("witt A\ndim 5\nvolume literal abc\n"), artifact::FormatError);

    CHECK_THROWS_AS(load_file("./no_such_file.simplex"), artifact::NotFoundError);
}

TEST_CASE("zeta values") {
    artifact::set_precision(30);
    real pi = 2 * acos(real(0));
    CHECK(near_rel(zeta(2), pi * pi / 6, "1e-28"));

    artifact::set_precision(55);
    real z3 = zeta(3);
    real want = testutil::gstr(golden::doc().at("zeta3"));
    CHECK(near_abs(z3, want, "1e-49"));

    artifact::set_precision(15);
    real coarse = zeta(3);
    CHECK(abs(real(coarse) - want) < R("1e-13"));
    artifact::set_precision(30);
}

TEST_CASE("zeta series bounds are honest under term doubling") {
    artifact::set_precision(30);
    auto v1 = zeta_eval(3);
    CHECK(v1.terms > 0);
    auto v2 = zeta_eval(3, 2 * v1.terms);
    CHECK(abs(v1.value - v2.value) <= v1.tail_bound + v2.tail_bound);

    auto h1 = hurwitz_zeta_eval(3, 1, 2);
    auto h2 = hurwitz_zeta_eval(3, 1, 2, 2 * h1.terms);
    CHECK(abs(h1.value - h2.value) <= h1.tail_bound + h2.tail_bound);
    // zeta(3, 1/2) = 7 zeta(3)
    CHECK(near_rel(h1.value, 7 * zeta(3), "1e-28"));
}

TEST_CASE("legendre symbol") {
    artifact::set_precision(30);
    int mod5[] = {0, 1, -1, -1, 1};
    for (long a = 0; a < 5; ++a)
        CHECK(legendre_symbol(a, 5) == mod5[a]);
    CHECK(legendre_symbol(5, 5) == 0);
    CHECK(legendre_symbol(6, 5) == 1);
    int mod7[] = {0, 1, 1, -1, 1, -1, -1};
    for (long a = 0; a < 7; ++a)
        CHECK(legendre_symbol(a, 7) == mod7[a]);
    CHECK_THROWS_AS(legendre_symbol(1, 4), artifact::DomainError);
    CHECK_THROWS_AS(legendre_symbol(1, 2), artifact::DomainError);
}

TEST_CASE("dirichlet L(3,5)") {
    artifact::set_precision(55);
    real want = testutil::gstr(golden::doc().at("L_3_5"));
    CHECK(near_abs(dirichlet_L(3, 5), want, "1e-49"));

    auto v1 = dirichlet_L_eval(3, 5);
    auto v2 = dirichlet_L_eval(3, 5, 2 * v1.terms);
    CHECK(abs(v1.value - v2.value) <= v1.tail_bound + v2.tail_bound);
    artifact::set_precision(30);
}

TEST_CASE("volume descriptors and values") {
    artifact::set_precision(30);
    CHECK(volume_expression(*builtin("U5").volume) == "7*zeta(3)/46080");
    CHECK(volume_expression(*builtin("P5").volume) == "5^(3/2)*L(3,5)/4608");
    CHECK(volume_expression(*builtin("AU5").volume) == "0.0075726186");

    artifact::set_precision(55);
    for (const auto& name : witt_symbols()) {
        CAPTURE(name);
        real got = exact_volume(builtin(name));
        real want = testutil::gstr(testutil::gsimplex(name).at("volume"));
        std::string eps = (name == std::string("AU5")) ? "1e-9" : "1e-45";
        CHECK(near_rel(got, want, eps));
    }
    artifact::set_precision(30);

    CoxeterSimplex s = builtin("U5");
    s.volume.reset();
    CHECK_THROWS_AS(exact_volume(s), artifact::DomainError);
}

TEST_CASE("commensurability volume ratios") {
    artifact::set_precision(30);
    struct Edge {
        const char *a, *b;
        int ratio;
    };
    const Edge edges[] = {
        {"S5", "U5", 3},  {"Q5", "S5", 2},  {"X5", "U5", 5},  {"N5", "X5", 6},
        {"M5", "N5", 2},  {"L5", "M5", 2},  {"R5", "U5", 10}, {"O5", "R5", 2},
        {"UR5", "O5", 8}, {"N5", "S5", 10}, {"L5", "Q5", 20}, {"N5", "R5", 3},
        {"M5", "O5", 3},  {"O5", "X5", 4},
    };
    for (const auto& e : edges) {
        CAPTURE(e.a);
        CAPTURE(e.b);
        real ratio = exact_volume(builtin(e.a)) / exact_volume(builtin(e.b));
        CHECK(near_rel(ratio, real(e.ratio), "1e-12"));
    }
}
