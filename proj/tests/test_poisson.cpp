#include "crystalcone/charts.hpp"
#include "crystalcone/poisson.hpp"

#include "helpers.hpp"

#include <doctest.h>

using namespace cc;

TEST_SUITE("poisson") {

TEST_CASE("log-canonical coefficients in rank one") {
    Seed s = seed_from_word(parse_type("A1"), {1});
    CCoefficients c = c_coefficients(s);
    CHECK(c.zz(0, 1) == Q(1, 2));
    CHECK(c.zzbar(0, 1) == Q(-1, 2));
    for (int p = 0; p < 2; ++p) CHECK(c.zz(p, p) == 0);
    CHECK(c.zz(1, 0) == -c.zz(0, 1));
    CHECK_THROWS_AS(c_coefficients(dual_seed(s)), Error);

    PTBracketMatrix b = pt_bracket_matrix(s);
    CHECK(b.rows == std::vector<int>{-1, 1});
    CHECK(b.cols == std::vector<int>{1});
    CHECK(b.m(0, 0) == 1);
    CHECK(b.m(1, 0) == 0);
    QMat f = b.full();
    CHECK(transpose(f) == Q(-1) * f);
}

TEST_CASE("special chart formula") {
    PTBracketMatrix a2 = special_chart_brackets(parse_type("A2"), {1, 2, 1});
    CHECK(a2.m.rows == 5);
    CHECK(a2.m.cols == 3);
    CHECK(a2.m(2, 1) == 0);  // {lambda_1, phi_2}
    CHECK(a2.m(2, 2) == 1);  // {lambda_1, phi_3}
    CHECK(special_chart_brackets(parse_type("A1"), {1}).m(0, 0) == 1);

    struct Case {
        const char* type;
        WeylWord word;
    };
    for (const auto& [t, w] : std::vector<Case>{{"A1", {1}}, {"A2", {1, 2, 1}}, {"A2", {2, 1, 2}}, {"A3", {1, 2, 1, 3, 2, 1}},
                                               {"C2", {1, 2, 1, 2}}, {"C2", {2, 1, 2, 1}}, {"B2", {1, 2, 1, 2}},
                                               {"G2", {1, 2, 1, 2, 1, 2}}}) {
        CAPTURE(t);
        CAPTURE(to_string(w));
        auto g = parse_type(t);
        PTBracketMatrix sp = special_chart_brackets(g, w);
        CHECK(pt_bracket_matrix(seed_from_word(g, w)).m == sp.m);
        // {lambda_j, phi_k} = 0 for j >= k
        for (int p = 0; p < sp.m.rows; ++p)
            for (int k = 1; k <= sp.m.cols; ++k)
                if (sp.rows[p] >= k) CHECK(sp.m(p, k - 1) == 0);
    }
}

TEST_CASE("triangular normalization and Darboux coordinates") {
    DarbouxChange a1 = triangular_normalization(parse_type("A1"), {1});
    for (const QMat* m : {&a1.B, &a1.X, &a1.Y, &a1.C_phi}) CHECK(*m == QMat::identity(1));

    DarbouxChange a2 = triangular_normalization(parse_type("A2"), {1, 2, 1});
    CHECK(a2.Y == a2.B);
    CHECK(is_integral(a2.C_phi));
    CHECK(a2.Y == QMat::from_ints({{1, 1, 1}, {0, 1, 1}, {0, 0, 1}}));

    DarbouxChange c2 = triangular_normalization(parse_type("C2"), {1, 2, 1, 2});
    CHECK(c2.Y == QMat::from_ints({{1, 2, 2, 2}, {0, 1, 1, 2}, {0, 0, 1, 2}, {0, 0, 0, 1}}));
    for (const char* t : {"A3", "C2", "B2", "G2"}) {
        CAPTURE(t);
        auto g = parse_type(t);
        auto w = longest_word(g);
        DarbouxChange d = triangular_normalization(g, w);
        for (size_t j = 0; j < w.size(); ++j) CHECK(d.B(j, j) == Q(1, g.d[w[j] - 1]));
        CHECK(abs(det(d.Y)) == 1);
        DarbouxCoordinates dc = darboux_coordinates(g, w);
        CHECK(dc.canonical);
        CHECK(hw_components_are_casimirs(g, w));
    }
}

}
