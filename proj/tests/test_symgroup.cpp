#include "crystalcone/charts.hpp"
#include "crystalcone/symgroup.hpp"

#include "helpers.hpp"

#include <doctest.h>

using namespace cc;

namespace {

QMat q2(long a, long b, long c, long d) { return QMat::from_ints({{a, b}, {c, d}}); }

RMat rmat_from(const std::vector<std::vector<LaurentPoly>>& rows) {
    int n = static_cast<int>(rows.size());
    RMat m(n, RatFunc(LaurentPoly(rows[0][0].nvars())));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = RatFunc(rows[i][j]);
    return m;
}

}  // namespace

TEST_SUITE("symgroup") {

TEST_CASE("representation carriers satisfy the Chevalley relations") {
    auto c1 = rep_carrier(parse_type("A1"));
    CHECK(c1.dim == 2);
    CHECK(c1.e[0] == q2(0, 1, 0, 0));
    CHECK(c1.f[0] == q2(0, 0, 1, 0));
    CHECK(rep_carrier(parse_type("A2")).dim == 3);
    CHECK(rep_carrier(parse_type("C2")).dim == 4);
    for (const char* t : {"A1", "A2", "A3", "C2", "B2", "G2"}) {
        CAPTURE(t);
        CHECK(verify_carrier(rep_carrier(parse_type(t))) == "");
    }
}

TEST_CASE("one-parameter subgroups and Weyl lifts") {
    auto c1 = rep_carrier(parse_type("A1"));
    LMat y = elem_y(c1, 0, 0, 1);
    CHECK(evaluate(y, qv({5})) == q2(1, 0, 5, 1));
    CHECK(evaluate(y, qv({0})) == QMat::identity(2));
    CHECK(sbar(c1, 0) == q2(0, -1, 1, 0));
    CHECK(lift_sbar(c1, {}) == QMat::identity(2));

    auto c2 = rep_carrier(parse_type("A2"));
    CHECK(evaluate(elem_y(c2, 0, 0, 1), qv({3})) == QMat::identity(3) + Q(3) * c2.f[0]);
    CHECK(lift_sbar(c2, {1, 2, 1}) == lift_sbar(c2, {2, 1, 2}));
    auto cg = rep_carrier(parse_type("G2"));
    CHECK(lift_sbar(cg, {1, 2, 1, 2, 1, 2}) == lift_sbar(cg, {2, 1, 2, 1, 2, 1}));
}

TEST_CASE("Gauss decomposition") {
    // [[a, 0], [c, 1/a]] in variables (a, c)
    auto a = LaurentPoly::var(2, 0), c = LaurentPoly::var(2, 1), one = LaurentPoly::constant(2, 1), zero = LaurentPoly(2);
    RMat m = rmat_from({{a, zero}, {c, a.monomial_inverse()}});
    GaussFactors g = gauss_decompose(m);
    CHECK(g.lower(1, 0).equals(RatFunc(c, a)));
    CHECK(g.diag(0, 0).equals(RatFunc(a)));
    CHECK(g.diag(1, 1).equals(RatFunc(a.monomial_inverse())));
    CHECK(g.upper(0, 1).is_zero());

    RMat id = rmat_from({{one, zero}, {zero, one}});
    GaussFactors gi = gauss_decompose(id);
    CHECK(equals(gi.lower, id));
    CHECK(equals(gi.diag, id));
    CHECK(equals(gi.upper, id));

    RMat swap = rmat_from({{zero, one}, {one, zero}});
    CHECK_THROWS_AS(gauss_decompose(swap), Error);
}

TEST_CASE("generalized minors") {
    auto c1 = rep_carrier(parse_type("A1"));
    auto a = LaurentPoly::var(2, 0), c = LaurentPoly::var(2, 1), zero = LaurentPoly(2);
    LMat m(2, zero);
    m(0, 0) = a;
    m(1, 0) = c;
    m(1, 1) = a.monomial_inverse();
    CHECK(generalized_minor(c1, WeylWord{}, WeylWord{}, 0, m) == a);
    CHECK(generalized_minor(c1, WeylWord{1}, WeylWord{}, 0, m) == c);

    auto c2 = rep_carrier(parse_type("A2"));
    LMat id = lmat_constant(QMat::identity(3), 0);
    for (int i = 0; i < 2; ++i) CHECK(generalized_minor(c2, WeylWord{}, WeylWord{}, i, id).is_one());

    // Delta_{u w, v w}(h x h') = h^{u w} Delta(x) h'^{v w} on the factorization point of A2
    LMat x = factorization_point(c2, {1, 2, 1}, false);  // variables t1..t3
    int nv = 3 + 4;
    std::vector<int> embed_t{0, 1, 2};
    LMat xe(3, LaurentPoly(nv));
    for (int i = 0; i < 9; ++i) xe.a[i] = x.a[i].embed(embed_t, nv);
    LMat h = torus_element(c2, 3, nv), hp = torus_element(c2, 5, nv);
    for (auto [u, v] : std::vector<std::pair<WeylWord, WeylWord>>{{{1}, {}}, {{1, 2}, {}}, {{1, 2, 1}, {}}, {{2}, {1}}}) {
        for (int i = 0; i < 2; ++i) {
            LaurentPoly d = generalized_minor(c2, u, v, i, xe);
            if (d.is_zero()) continue;
            Weight uw = weyl_act(c2.datum, u, fundamental_weight(c2.datum, i));
            Weight vw = weyl_act(c2.datum, v, fundamental_weight(c2.datum, i));
            Exp e(nv, 0);
            for (int j = 0; j < 2; ++j) {
                e[3 + j] = to_long(uw[j].get_num());
                e[5 + j] = to_long(vw[j].get_num());
            }
            CHECK(generalized_minor(c2, u, v, i, h * xe * hp) == d * LaurentPoly::monomial(nv, e));
        }
    }
}

TEST_CASE("factorization points") {
    auto c1 = rep_carrier(parse_type("A1"));
    LMat p = factorization_point(c1, {1}, true);  // (c, t)
    QMat v = evaluate(p, qv({2, 3}));
    // h(c) y(t): torus on the left
    QMat expect(2, 2);
    expect(0, 0) = 2;
    expect(1, 0) = Q(3, 2);
    expect(1, 1) = Q(1, 2);
    CHECK(v == expect);
    auto c2 = rep_carrier(parse_type("A2"));
    LMat p2 = factorization_point(c2, {1, 2, 1}, true);
    QMat at0 = evaluate(p2, qv({2, 3, 0, 0, 0}));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j) CHECK(at0(i, j) == 0);
    for (const auto& e : p2.a)
        for (const auto& [exp, coef] : e.terms())
            for (int k = 2; k < 5; ++k) CHECK(exp[k] >= 0);
}

TEST_CASE("potentials") {
    Chart a1 = make_chart(parse_type("A1"), {1}, ChartKind::Cluster);
    // (z_{-1} + z_{-1}^{-1}) / z_1
    LaurentPoly z1 = LaurentPoly::var(2, 0), z2 = LaurentPoly::var(2, 1);
    CHECK(a1.potential == (z1 + z1.monomial_inverse()) * z2.monomial_inverse());

    Chart a2 = make_chart(parse_type("A2"), {1, 2, 1}, ChartKind::Cluster);
    CHECK(a2.potential.size() == 6);
    CHECK(a2.potential.all_coefficients_positive());

    Chart s1 = make_chart(parse_type("A1"), {1}, ChartKind::String);
    // the string chart uses inverted coordinates: Phi_L = 1/t becomes tau
    CHECK(s1.potential == LaurentPoly::var(1, 0));

    // Phi_BK(h x) - Phi_L(x) only involves the torus through the correction terms:
    // the difference Phi_BK - correction does not depend on h.
    for (const char* t : {"A2", "C2", "G2"}) {
        CAPTURE(t);
        auto g = parse_type(t);
        auto c = rep_carrier(g);
        Chart rf = make_chart(g, longest_word(g), ChartKind::ReducedFactorization);
        LaurentPoly rest = bk_potential(c, rf.point) - bk_correction(c, rf.point);
        CHECK(rest.all_coefficients_positive());
        for (const auto& [e, coef] : rest.terms())
            for (int v : rf.h_coords()) CHECK(e[v] == 0);
        for (const auto& [e, coef] : bk_correction(c, rf.point).terms()) {
            bool has_h = false;
            for (int v : rf.h_coords()) has_h = has_h || e[v] != 0;
            CHECK(has_h);
        }
    }
}

TEST_CASE("twist") {
    for (const char* t : {"A1", "A2", "C2"}) {
        CAPTURE(t);
        auto g = parse_type(t);
        auto c = rep_carrier(g);
        auto w = longest_word(g);
        LMat p = factorization_point(c, w, true);
        LMat z = twist(c, p);
        CHECK(twist(c, z) == p);
        // Delta^zeta_{w0 omega_i, omega_i} = Delta_{omega_i, omega_i}^{-1}
        for (int i = 0; i < g.rank; ++i) {
            LaurentPoly top = generalized_minor(c, w, WeylWord{}, i, z);
            LaurentPoly diag = generalized_minor(c, WeylWord{}, WeylWord{}, i, p);
            CHECK(top * diag == LaurentPoly::constant(p.a[0].nvars(), 1));
        }
    }
}

}
