#include "crystalcone/cartan.hpp"

#include "helpers.hpp"

#include <doctest.h>

using namespace cc;

TEST_SUITE("cartan") {

TEST_CASE("Cartan matrices and symmetrizers") {
    auto a2 = build_cartan('A', 2);
    CHECK(a2.cartan == std::vector<std::vector<int>>{{2, -1}, {-1, 2}});
    CHECK(a2.d == std::vector<int>{1, 1});
    CHECK(build_cartan('A', 1).cartan == std::vector<std::vector<int>>{{2}});

    for (const char* t : {"A1", "A2", "A3", "C2", "C3", "B2", "G2"}) {
        CAPTURE(t);
        auto g = parse_type(t);
        for (int i = 0; i < g.rank; ++i) {
            CHECK(g.cartan[i][i] == 2);
            for (int j = 0; j < g.rank; ++j) {
                if (i != j) CHECK(g.cartan[i][j] <= 0);
                CHECK(g.cartan[i][j] * g.d[j] == g.cartan[j][i] * g.d[i]);
            }
        }
        int gcd = 0;
        for (int x : g.d) gcd = std::gcd(gcd, x);
        CHECK(gcd == 1);
    }
    // long root alpha_1 for C2 in this numbering
    auto c2 = parse_type("C2");
    CHECK(c2.d == std::vector<int>{2, 1});
    CHECK(langlands_dual(c2).d == std::vector<int>{1, 2});
    CHECK_THROWS_AS(parse_type("E6"), Error);
}

TEST_CASE("Weyl group action") {
    auto a1 = parse_type("A1"), a2 = parse_type("A2");
    CHECK(weyl_act(a1, {1}, qv({1})) == qv({-1}));
    CHECK(weyl_act(a2, {2}, qv({0, 1})) == qv({1, -1}));
    CHECK(weyl_act(a2, {}, qv({3, -2})) == qv({3, -2}));
    CHECK_THROWS_AS(weyl_act(a2, {3}, qv({1, 0})), Error);

    std::mt19937 rng(7);
    for (const char* t : {"A2", "A3", "C2", "G2"}) {
        auto g = parse_type(t);
        for (int k = 0; k < 20; ++k) {
            Weight x = random_weight(rng, g.rank, -5, 5);
            for (int i = 1; i <= g.rank; ++i) CHECK(weyl_act(g, {i, i}, x) == x);
        }
    }
}

TEST_CASE("longest words and positive roots") {
    CHECK(longest_word(parse_type("A1")) == WeylWord{1});
    CHECK(longest_word(parse_type("A2")) == WeylWord{1, 2, 1});
    CHECK(longest_word(parse_type("C2")).size() == 4);
    CHECK(longest_word(parse_type("G2")).size() == 6);
    for (const char* t : {"A1", "A2", "A3", "C2", "C3", "G2"}) {
        auto g = parse_type(t);
        auto w = longest_word(g);
        CHECK(is_reduced(g, w));
        CHECK(positive_roots(g).size() == w.size());
    }
    CHECK_FALSE(is_reduced(parse_type("A2"), {1, 1}));
    auto roots = positive_roots(parse_type("A2"));
    std::vector<QVec> rs;
    for (auto& r : roots) rs.push_back(r.root);
    std::sort(rs.begin(), rs.end());
    CHECK(rs == std::vector<QVec>{qv({0, 1}), qv({1, 0}), qv({1, 1})});
}

TEST_CASE("invariant bilinear form") {
    auto a1 = parse_type("A1"), a2 = parse_type("A2");
    CHECK(bilinear_weights(a1, qv({1}), qv({1})) == Q(1, 2));
    CHECK(bilinear_weights(a2, qv({1, 0}), qv({0, 1})) == Q(1, 3));

    std::mt19937 rng(11);
    std::uniform_int_distribution<int> letter(0, 100);
    for (const char* t : {"A2", "A3", "C2", "B2", "G2"}) {
        auto g = parse_type(t);
        for (int k = 0; k < 40; ++k) {
            Weight x = random_weight(rng, g.rank, -4, 4), y = random_weight(rng, g.rank, -4, 4);
            WeylWord w;
            for (int l = letter(rng) % 6; l > 0; --l) w.push_back(1 + letter(rng) % g.rank);
            CHECK(bilinear_weights(g, x, y) == bilinear_weights(g, y, x));
            CHECK(bilinear_weights(g, weyl_act(g, w, x), weyl_act(g, w, y)) == bilinear_weights(g, x, y));
        }
        // (omega_i, alpha_k) = delta_ik / d_k
        for (int i = 0; i < g.rank; ++i)
            for (int k = 0; k < g.rank; ++k)
                CHECK(bilinear_weights(g, fundamental_weight(g, i), simple_root(g, k)) == (i == k ? Q(1, g.d[k]) : Q(0)));
    }
}

TEST_CASE("comparison map psi_h") {
    auto a1 = parse_type("A1");
    CHECK(comparison_psi(a1, simple_coroot(a1, 0)) == simple_root(a1, 0));
    for (const char* t : {"A2", "C2", "B2", "G2", "C3", "A4"}) {
        auto g = parse_type(t);
        CHECK(comparison_psi(g, QVec(g.rank)) == QVec(g.rank));
        for (int i = 0; i < g.rank; ++i) {
            Weight img = comparison_psi(g, simple_coroot(g, i));
            CHECK(img == scale(Q(g.d[i]), simple_root(g, i)));
            CHECK(is_integral_weight(img));
        }
    }
}

}
