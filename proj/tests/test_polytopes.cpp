#include "crystalcone/polytopes.hpp"
#include "crystalcone/reps.hpp"

#include "helpers.hpp"

#include <doctest.h>

using namespace cc;

TEST_SUITE("polytopes") {

TEST_CASE("hw fibers in rank one") {
    auto a1 = parse_type("A1");
    Chart ch = make_chart(a1, {1}, ChartKind::ReducedFactorization);
    Polytope p = hw_fiber(ch, qv({3}));
    CHECK(enumerate_lattice_points(p).size() == 4);
    CHECK(polytope_volume(p) == 3);
    CHECK(enumerate_lattice_points(hw_fiber(ch, qv({0}))).size() == 1);
    CHECK(enumerate_lattice_points(hw_fiber(ch, qv({-1}))).empty());
    for (long n = 0; n <= 10; ++n) CHECK(count_dim(a1, {1}, qv({n})).total == n + 1);
}

TEST_CASE("counts match the representation oracle") {
    auto a2 = parse_type("A2");
    CountResult r = count_dim(a2, {1, 2, 1}, qv({1, 1}));
    CHECK(r.total == 8);
    CHECK(r.by_weight.at(qv({0, 0})) == 2);
    CHECK(count_dim(a2, {1, 2, 1}, qv({1, 0})).total == 3);
    CHECK(count_weight(a2, {1, 2, 1}, qv({1, 1}), qv({1, 1})) == 1);
    CHECK(count_dim(parse_type("C2"), {1, 2, 1, 2}, qv({1, 0})).total == 4);

    for (const char* t : {"A2", "C2", "B2", "A3", "G2"}) {
        CAPTURE(t);
        auto g = parse_type(t);
        auto w = longest_word(g);
        for (const Weight& lam : {rho(g), fundamental_weight(g, 0), fundamental_weight(g, g.rank - 1)}) {
            CAPTURE(to_string(lam));
            CountResult c = count_dim(g, w, lam);
            CharacterTable tab = freudenthal(g, lam);
            CHECK(Z(c.total) == weyl_dim(g, lam));
            long sum = 0;
            for (const auto& [nu, n] : c.by_weight) {
                CHECK(n == tab.multiplicity(nu));
                sum += n;
                // Weyl symmetry of the weight counts
                for (int i = 0; i < g.rank; ++i) CHECK(c.by_weight.at(reflect(g, i, nu)) == n);
            }
            CHECK(sum == c.total);
        }
    }
}

TEST_CASE("counts do not depend on the chart or the word") {
    auto a2 = parse_type("A2");
    Weight lam = qv({2, 1});
    long expect = to_long(weyl_dim(a2, lam));
    for (auto kind : {ChartKind::ReducedFactorization, ChartKind::Reduced, ChartKind::Factorization, ChartKind::Cluster,
                      ChartKind::Twisted})
        for (const WeylWord& w : {WeylWord{1, 2, 1}, WeylWord{2, 1, 2}}) {
            CAPTURE(chart_kind_name(kind));
            CHECK(count_dim(a2, w, lam, kind).total == expect);
        }
    // mutated charts
    Chart c = make_chart(a2, {1, 2, 1}, ChartKind::Cluster);
    CHECK(count_chart(mutate_chart(c, 1), lam).total == expect);
    Chart r = make_chart(a2, {1, 2, 1}, ChartKind::Reduced);
    CHECK(count_chart(mutate_chart(r, 1), lam).by_weight == count_chart(r, lam).by_weight);
}

TEST_CASE("non-dominant weights give empty fibers with a certificate") {
    auto a2 = parse_type("A2");
    for (const Weight& lam : {qv({-1, 0}), qv({0, -2})}) {
        CountResult r = count_dim(a2, {1, 2, 1}, lam);
        CHECK(r.total == 0);
        REQUIRE(r.empty_certificate);
        Chart ch = make_chart(a2, {1, 2, 1}, ChartKind::ReducedFactorization);
        CHECK(verify_farkas(hw_fiber(ch, lam).sys, *r.empty_certificate));
    }
}

TEST_CASE("volumes") {
    auto a2 = parse_type("A2");
    Chart ch = make_chart(a2, {1, 2, 1}, ChartKind::ReducedFactorization);
    Q v1 = polytope_volume(hw_fiber(ch, qv({1, 1})));
    CHECK(v1 == 1);
    for (long k = 2; k <= 3; ++k) CHECK(polytope_volume(hw_fiber(ch, qv({k, k}))) == v1 * Q(k * k * k));
    Q va = polytope_volume(hw_fiber(ch, qv({2, 1})));
    CHECK(polytope_volume(hw_fiber(ch, qv({4, 2}))) == 8 * va);
    // the cluster chart gives the same lattice volume
    Chart cl = make_chart(a2, {1, 2, 1}, ChartKind::Cluster);
    CHECK(polytope_volume(hw_fiber(cl, qv({1, 1}))) == v1);

    HSystem cube;
    cube.dim = 2;
    cube.ge = {{qv({1, 0}), 0}, {qv({0, 1}), 0}, {qv({-1, 0}), 2}, {qv({0, -1}), 3}};
    CHECK(volume(cube) == 6);
}

}
