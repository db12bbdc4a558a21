#include "crystalcone/tropical.hpp"

#include "helpers.hpp"

#include <doctest.h>

using namespace cc;

TEST_SUITE("tropical") {

TEST_CASE("tropicalization of subtraction-free expressions") {
    auto a = LaurentPoly::var(2, 0), b = LaurentPoly::var(2, 1);
    TropicalForm f = tropicalize((a + a.monomial_inverse()) * b.monomial_inverse());
    CHECK(f.eval(qv({3, 1})) == -4);
    CHECK(f.eval(qv({-2, 0})) == -2);
    CHECK(tropicalize(a * a * b).eval(qv({5, -1})) == 9);
    CHECK_THROWS_AS(tropicalize(a - b), Error);

    // (fg)^t = f^t + g^t
    std::mt19937 rng(9);
    std::uniform_int_distribution<int> e(-3, 3), c(1, 4);
    for (int k = 0; k < 100; ++k) {
        LaurentPoly f(2), g(2);
        for (int t = 0; t < 3; ++t) {
            f.add_term({e(rng), e(rng)}, c(rng));
            g.add_term({e(rng), e(rng)}, c(rng));
        }
        QVec x{Q(e(rng), 2), Q(e(rng), 3)};
        for (auto& v : x) v.canonicalize();
        CHECK(tropicalize(f * g).eval(x) == tropicalize(f).eval(x) + tropicalize(g).eval(x));
        CHECK(tropicalize(f, g).eval(x) == tropicalize(f).eval(x) - tropicalize(g).eval(x));
    }
}

TEST_CASE("potential cones") {
    ConeH a1 = bk_cone(parse_type("A1"), {1}, ChartKind::Cluster);
    CHECK(a1.ge.size() == 2);
    CHECK(a1.contains(qv({0, -1})));
    CHECK(a1.contains(qv({2, -3})));
    CHECK_FALSE(a1.contains(qv({2, -1})));
    CHECK_FALSE(a1.strictly_contains(qv({0, 0})));

    for (auto kind : {ChartKind::Cluster, ChartKind::Factorization, ChartKind::Reduced, ChartKind::Twisted}) {
        CAPTURE(chart_kind_name(kind));
        ConeH c = bk_cone(parse_type("A2"), {1, 2, 1}, kind);
        CHECK(c.dim == 5);
        InteriorPoint ip = chebyshev_like_point(c);
        CHECK(ip.feasible);
        CHECK(sgn(ip.slack) > 0);
    }
    // delta-interior with delta = 0 is the cone; with delta > 0 it shrinks
    ConeH d0 = delta_interior(a1, 0), d1 = delta_interior(a1, 1);
    CHECK(d0.contains(qv({0, 0})));
    CHECK_FALSE(d1.contains(qv({0, 0})));
    CHECK(d1.contains(qv({0, -1})));
}

TEST_CASE("string cones") {
    ConeH s1 = string_cone(parse_type("A1"), {1});
    CHECK(s1.dim == 1);
    CHECK(s1.ge.size() == 1);
    CHECK(s1.contains(qv({0})));
    CHECK_FALSE(s1.contains(qv({-1})));

    ConeH s2 = simplify(string_cone(parse_type("A2"), {1, 2, 1}), true);
    CHECK(s2.ge.size() == 3);
    CHECK(sgn(chebyshev_like_point(s2).slack) > 0);
    // simplicial with a unimodular normal matrix, hence unimodularly equivalent to
    // {t1 >= 0, t3 >= 0, t2 >= t3}
    QMat normals(3, 3);
    for (int i = 0; i < 3; ++i) {
        CHECK(s2.ge[i].c == 0);
        for (int j = 0; j < 3; ++j) normals(i, j) = s2.ge[i].a[j];
    }
    CHECK(abs(det(normals)) == 1);
    CHECK(abs(det(QMat::from_ints({{1, 0, 0}, {0, 0, 1}, {0, 1, -1}}))) == 1);
}

TEST_CASE("highest-weight and weight maps") {
    Chart a1 = make_chart(parse_type("A1"), {1}, ChartKind::Cluster);
    // <omega_1, hw^t> = -x_1
    CHECK(a1.hw == QMat::from_ints({{0, -1}}));
    Chart f1 = make_chart(parse_type("A1"), {1}, ChartKind::Factorization);
    CHECK(f1.wt(0, 0) != 0);
    CHECK(f1.wt(0, 1) == 0);
}

TEST_CASE("tropical chart changes") {
    Chart c = make_chart(parse_type("A2"), {1, 2, 1}, ChartKind::Cluster);
    Chart m = mutate_chart(c, 1);
    REQUIRE(m.steps.size() == 1);
    PLMap f = trop_chart_change(m.steps[0], c.nvars);
    CHECK(f.pieces.size() == 2);
    std::mt19937 rng(2);
    std::uniform_int_distribution<int> d(-9, 9);
    for (int k = 0; k < 50; ++k) {
        QVec x(c.nvars);
        for (auto& v : x) v = d(rng);
        QVec y = apply_chart_steps(m.steps, x);
        CHECK(f.apply(x) == y);
        CHECK(unapply_chart_steps(m.steps, y) == x);
        // the potential cone is carried to the potential cone of the new chart
        CHECK(bk_cone(c).contains(x) == bk_cone(m).contains(y));
    }
    CHECK(identity_pl_map(3).apply(qv({1, 2, 3})) == qv({1, 2, 3}));
}

}
