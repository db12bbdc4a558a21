#include "crystalcone/langlands.hpp"

#include "helpers.hpp"

#include <doctest.h>

using namespace cc;

TEST_SUITE("langlands") {

TEST_CASE("comparison maps") {
    ComparisonMap a2 = comparison_trop(parse_type("A2"), {1, 2, 1});
    CHECK(a2.diag == QMat::identity(a2.diag.rows));
    ComparisonMap c2 = comparison_trop(parse_type("C2"), {1, 2, 1, 2});
    for (int p = 0; p < c2.diag.rows; ++p) CHECK((c2.diag(p, p) == 1 || c2.diag(p, p) == 2));
    CHECK(c2.diag != QMat::identity(c2.diag.rows));
}

TEST_CASE("real cones are linearly isomorphic") {
    struct Case {
        const char* type;
        WeylWord word;
    };
    for (const auto& [t, w] : std::vector<Case>{{"A1", {1}}, {"A2", {1, 2, 1}}, {"C2", {1, 2, 1, 2}}, {"C2", {2, 1, 2, 1}},
                                               {"B2", {1, 2, 1, 2}}, {"G2", {1, 2, 1, 2, 1, 2}}}) {
        CAPTURE(t);
        auto g = parse_type(t);
        Chart gc = make_chart(g, w, ChartKind::Reduced), dc = make_chart(langlands_dual(g), w, ChartKind::Reduced);
        ComparisonMap cm = comparison_trop(g, w);
        CHECK(verify_real_cone_isomorphism(bk_cone(gc), bk_cone(dc), cm.full).ok());
        DiagramReport d = check_diagrams(gc, dc, cm);
        CHECK(d.hw);
        CHECK(d.wt);
        CHECK(verify_twist_compat(g, w, 20, 4));
    }
}

TEST_CASE("symmetrizer of the wrong group breaks the isomorphism") {
    auto c2 = parse_type("C2");
    WeylWord w{1, 2, 1, 2};
    Chart gc = make_chart(c2, w, ChartKind::Reduced), dc = make_chart(langlands_dual(c2), w, ChartKind::Reduced);
    ComparisonMap good = comparison_trop(c2, w), bad = comparison_trop(langlands_dual(c2), w);
    QMat wrong = good.full;
    for (int p = 0; p < bad.diag.rows; ++p) wrong(c2.rank + p, c2.rank + p) = bad.diag(p, p);
    ConeIsoReport rep = verify_real_cone_isomorphism(bk_cone(gc), bk_cone(dc), wrong);
    CHECK_FALSE(rep.ok());
    CHECK_FALSE((rep.failures_forward.empty() && rep.failures_backward.empty()));
}

TEST_CASE("integral points map injectively") {
    auto b2 = parse_type("B2");
    WeylWord w{1, 2, 1, 2};
    Chart gc = make_chart(b2, w, ChartKind::Reduced), dc = make_chart(langlands_dual(b2), w, ChartKind::Reduced);
    SampleReport s = sample_integral_images(gc, dc, comparison_trop(b2, w).full, 60);
    CHECK(s.sampled == 60);
    CHECK(s.injective);
    CHECK(s.contained);
    CHECK(s.integral);
}

}
