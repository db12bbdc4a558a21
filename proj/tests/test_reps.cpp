#include "crystalcone/reps.hpp"

#include "helpers.hpp"

#include <doctest.h>

using namespace cc;

TEST_SUITE("reps") {

TEST_CASE("Weyl dimension formula") {
    auto a1 = parse_type("A1"), a2 = parse_type("A2"), c2 = parse_type("C2");
    for (long n = 0; n <= 10; ++n) CHECK(weyl_dim(a1, qv({n})) == n + 1);
    CHECK(weyl_dim(a2, qv({1, 1})) == 8);
    CHECK(weyl_dim(a2, qv({1, 0})) == 3);
    CHECK(weyl_dim(c2, qv({1, 0})) == 4);  // alpha_1 is long in this numbering
    CHECK(weyl_dim(c2, qv({0, 1})) == 5);
    CHECK(weyl_dim(parse_type("G2"), qv({1, 0})) + weyl_dim(parse_type("G2"), qv({0, 1})) == 7 + 14);
}

TEST_CASE("Freudenthal multiplicities") {
    auto a1 = parse_type("A1"), a2 = parse_type("A2");
    auto t = freudenthal(a1, qv({2}));
    CHECK(t.multiplicity(qv({2})) == 1);
    CHECK(t.multiplicity(qv({0})) == 1);
    CHECK(t.multiplicity(qv({-2})) == 1);
    CHECK(t.mults.size() == 3);
    CHECK(freudenthal(a2, qv({1, 1})).multiplicity(qv({0, 0})) == 2);

    std::mt19937 rng(3);
    for (const char* ty : {"A2", "A3", "C2", "G2"}) {
        auto g = parse_type(ty);
        for (int k = 0; k < 8; ++k) {
            Weight lam = random_weight(rng, g.rank, 0, g.rank == 3 ? 2 : 3);
            auto tab = freudenthal(g, lam);
            CHECK(Z(tab.total()) == weyl_dim(g, lam));
            // W-invariance of the character
            for (const auto& [nu, m] : tab.mults)
                for (int i = 0; i < g.rank; ++i) CHECK(tab.multiplicity(reflect(g, i, nu)) == m);
        }
    }
}

}
