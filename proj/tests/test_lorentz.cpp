#include <random>

#include "doctest.h"

#include "artifact/algexpr.hpp"
#include "artifact/catalog.hpp"
#include "artifact/error.hpp"
#include "artifact/lorentz.hpp"
#include "artifact/real.hpp"

#include "common.hpp"

using artifact::real;
using namespace artifact::lorentz;
using testutil::near_abs;
using testutil::near_rel;
using testutil::R;

namespace {

ProjectivePoint pt(std::initializer_list<double> v) {
    ProjectivePoint p;
    for (double x : v)
        p.coords.push_back(real(x));
    return p;
}

const real tol = R("1e-9");

} // namespace

TEST_CASE("bilinear form and pole duality") {
    artifact::set_precision(30);
    ProjectivePoint x = pt({1, 0, 0, 0, 0, 0});
    ProjectivePoint y = pt({1, 0.5, 0, 0, 0, 0.25});
    CHECK(bform(x, x) == -1);
    CHECK(bform(x, y) == -1);
    CHECK(near_abs(bform(y, y), R("-0.6875"), "1e-29"));

    HyperplaneForm u{{real(2), real(-1), real(0.5), real(0), real(3), real(-4)}};
    CHECK(near_abs(evaluate(u, y), bform(pole(u), y), "1e-28"));
    CHECK(near_abs(evaluate(polar(y), x), bform(y, x), "1e-28"));
}

TEST_CASE("classification of points") {
    artifact::set_precision(30);
    CHECK(classify(pt({1, 0, 0, 0, 0, 0}), tol) == PointClass::Proper);
    CHECK(classify(pt({1, 0, 0, 0, 0, 0.5}), tol) == PointClass::Proper);
    CHECK(classify(pt({1, 0, 0, 0, 0, 1}), tol) == PointClass::Ideal);
    CHECK(classify(pt({1, 1, 0, 0, 0, 1}), tol) == PointClass::Outer);
    CHECK(classify(pt({1, 2, 0, 0, 0, 0}), tol) == PointClass::Outer);
    CHECK(classify(pt({0, 1, 0, 0, 0, 0}), tol) == PointClass::Outer);
    ProjectivePoint zero{Vec(6, real(0))};
    CHECK_THROWS_AS(classify(zero, tol), artifact::DomainError);
}

TEST_CASE("classification, distance, foot, gram are scale free") {
    artifact::set_precision(30);
    std::mt19937 rng(20240517);
    std::uniform_real_distribution<double> expo(-6.0, 6.0);
    std::uniform_int_distribution<int> sign(0, 1);

    const auto& s = artifact::catalog::builtin("X5");
    std::vector<HyperplaneForm> forms;
    for (int i = 0; i < s.size(); ++i)
        forms.push_back(s.form(i));
    GramMatrix base_gram = gram(forms);

    ProjectivePoint a = s.vertex(1);
    ProjectivePoint b = s.vertex(2);
    real base_dist = distance(a, b, tol);
    ProjectivePoint base_foot = affine(foot(s.vertex(1), s.form(0), tol));

    for (int iter = 0; iter < 1000; ++iter) {
        real lam = exp(real(expo(rng)));
        if (sign(rng))
            lam = -lam;
        real mu = exp(real(expo(rng)));

        for (int i = 0; i < s.size(); ++i) {
            ProjectivePoint p = s.vertex(i);
            PointClass before = classify(p, tol);
            for (auto& c : p.coords)
                c *= lam;
            CHECK(classify(p, tol) == before);
        }

        ProjectivePoint a2 = a, b2 = b;
        for (auto& c : a2.coords)
            c *= lam;
        for (auto& c : b2.coords)
            c *= mu;
        CHECK(near_abs(distance(a2, b2, tol), base_dist, "1e-25"));

        ProjectivePoint x2 = s.vertex(1);
        for (auto& c : x2.coords)
            c *= mu;
        HyperplaneForm u2 = s.form(0);
        for (auto& c : u2.coeffs)
            c *= lam;
        ProjectivePoint f2 = affine(foot(x2, u2, tol));
        for (int k = 0; k <= 5; ++k)
            CHECK(near_abs(f2.coords[k], base_foot.coords[k], "1e-25"));

        std::vector<HyperplaneForm> scaled = forms;
        for (auto& f : scaled) {
            real w = exp(real(expo(rng)));
            for (auto& c : f.coeffs)
                c *= w;
        }
        GramMatrix g2 = gram(scaled);
        for (int i = 0; i < g2.size(); ++i)
            for (int j = 0; j < g2.size(); ++j)
                CHECK(near_abs(g2.entries[i][j], base_gram.entries[i][j], "1e-25"));
    }
}

TEST_CASE("distance basics") {
    artifact::set_precision(30);
    ProjectivePoint o = pt({1, 0, 0, 0, 0, 0});
    ProjectivePoint p = pt({1, 0, 0, 0, 0, 0});
    p.coords[5] = real(1) / 3;
    real d = distance(o, p, tol);
    CHECK(near_abs(d, atanh(real(1) / 3), "1e-28"));
    CHECK(near_abs(d, R("0.346573590279972654708616060729"), "1e-28"));
    CHECK(near_abs(distance(p, o, tol), d, "1e-29"));
    CHECK(distance(o, o, tol) == 0);

    ProjectivePoint q = pt({1, 0.25, 0.1, 0, 0, -0.2});
    real doq = distance(o, q, tol);
    real dpq = distance(p, q, tol);
    CHECK(distance(o, p, tol) <= doq + dpq + R("1e-28"));

    ProjectivePoint ideal = pt({1, 0, 0, 0, 0, 1});
    CHECK_THROWS_AS(distance(o, ideal, tol), artifact::DomainError);
}

TEST_CASE("distance between catalog points matches acosh(9/8)") {
    artifact::set_precision(30);
    const auto& u5 = artifact::catalog::builtin("U5");
    ProjectivePoint h2;
    for (const char* e : {"1", "4/9", "0", "0", "0", "1/9"})
        h2.coords.push_back(artifact::algexpr::eval(e));
    real d = distance(u5.vertex(1), h2, tol);
    real want = testutil::gstr(testutil::gsimplex("U5").at("acosh_9_8"));
    CHECK(near_abs(d, want, "1e-25"));
    CHECK(near_abs(d, acosh(R("1.125")), "1e-28"));
}

TEST_CASE("foot of a vertex on the opposite facet") {
    artifact::set_precision(30);
    const auto& u5 = artifact::catalog::builtin("U5");
    ProjectivePoint f = affine(foot(u5.vertex(0), u5.form(0), tol));
    ProjectivePoint a1 = affine(u5.vertex(1));
    for (int k = 0; k <= 5; ++k)
        CHECK(near_abs(f.coords[k], a1.coords[k], "1e-25"));
    CHECK(near_abs(evaluate(u5.form(0), f), real(0), "1e-25"));

    HyperplaneForm lightlike{{real(1), real(1), real(0), real(0), real(0), real(0)}};
    CHECK_THROWS_AS(foot(pt({1, 0, 0, 0, 0, 0}), lightlike, tol), artifact::DomainError);
}

TEST_CASE("affine normalization") {
    artifact::set_precision(30);
    ProjectivePoint p = pt({2, 1, 0, 0, 0, 0.5});
    ProjectivePoint a = affine(p);
    CHECK(a.coords[0] == 1);
    CHECK(near_abs(a.coords[1], R("0.5"), "1e-29"));
    CHECK_THROWS_AS(affine(pt({0, 1, 0, 0, 0, 0})), artifact::DomainError);
}

TEST_CASE("diagram cosines") {
    artifact::set_precision(30);
    CHECK(diagram_cosine(weight_infinity) == -1);
    CHECK(diagram_cosine(2) == 0);
    CHECK(near_abs(diagram_cosine(3), R("-0.5"), "1e-28"));
    CHECK(near_abs(diagram_cosine(4), -1 / sqrt(real(2)), "1e-28"));
    CHECK(near_abs(diagram_cosine(6), -sqrt(real(3)) / 2, "1e-28"));
}

TEST_CASE("gram matrix of a catalog simplex follows its diagram") {
    artifact::set_precision(30);
    const auto& u5 = artifact::catalog::builtin("U5");
    std::vector<HyperplaneForm> forms;
    for (int i = 0; i < u5.size(); ++i)
        forms.push_back(u5.form(i));
    GramMatrix g = gram(forms);
    REQUIRE(g.size() == 6);
    for (int i = 0; i < 6; ++i)
        CHECK(near_abs(g.entries[i][i], real(1), "1e-25"));

    std::vector<std::vector<int>> weight(6, std::vector<int>(6, 2));
    for (const auto& e : u5.diagram)
        weight[e.i][e.j] = weight[e.j][e.i] = e.weight;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) {
            CHECK(near_abs(g.entries[i][j], diagram_cosine(weight[i][j]), "1e-25"));
            CHECK(g.entries[i][j] <= R("1e-25"));
        }
}

TEST_CASE("signature of every catalog gram matrix is (5,1,0)") {
    artifact::set_precision(30);
    for (const auto& name : artifact::catalog::witt_symbols()) {
        CAPTURE(name);
        const auto& s = artifact::catalog::builtin(name);
        std::vector<HyperplaneForm> forms;
        for (int i = 0; i < s.size(); ++i)
            forms.push_back(s.form(i));
        auto sig = signature(gram(forms), tol);
        CHECK(sig[0] == 5);
        CHECK(sig[1] == 1);
        CHECK(sig[2] == 0);
    }
}

TEST_CASE("dense determinant and eigenvalues") {
    artifact::set_precision(30);
    std::vector<std::vector<real>> m = {
        {real(2), real(-1), real(0)},
        {real(-1), real(2), real(-1)},
        {real(0), real(-1), real(2)},
    };
    CHECK(near_abs(determinant(m), real(4), "1e-27"));

    auto eig = symmetric_eigenvalues(m);
    REQUIRE(eig.size() == 3);
    CHECK(near_abs(eig[0], 2 - sqrt(real(2)), "1e-27"));
    CHECK(near_abs(eig[1], real(2), "1e-27"));
    CHECK(near_abs(eig[2], 2 + sqrt(real(2)), "1e-27"));

    std::vector<real> values;
    std::vector<std::vector<real>> vectors;
    symmetric_eigen(m, values, vectors);
    for (std::size_t k = 0; k < values.size(); ++k) {
        for (std::size_t r = 0; r < 3; ++r) {
            real mv = 0;
            for (std::size_t c = 0; c < 3; ++c)
                mv += m[r][c] * vectors[c][k];
            CHECK(near_abs(mv, values[k] * vectors[r][k], "1e-26"));
        }
    }
}
