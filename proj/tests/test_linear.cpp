#include "crystalcone/laurent.hpp"
#include "crystalcone/lp.hpp"

#include "helpers.hpp"

#include <doctest.h>

using namespace cc;

TEST_SUITE("linear") {

TEST_CASE("rationals") {
    CHECK(parse_rational("-2/4") == Q(-1, 2));
    CHECK(parse_rational("0.75") == Q(3, 4));
    CHECK(parse_rational("7") == Q(7));
    CHECK_THROWS(parse_rational("x"));
    CHECK(floor_q(Q(-3, 2)) == -2);
    CHECK(ceil_q(Q(-3, 2)) == -1);
}

TEST_CASE("matrices") {
    QMat m = QMat::from_ints({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}});
    CHECK(det(m) == 4);
    auto inv = inverse(m);
    REQUIRE(inv);
    CHECK(m * *inv == QMat::identity(3));
    CHECK(rank(QMat::from_ints({{1, 2}, {2, 4}})) == 1);
    CHECK_FALSE(inverse(QMat::from_ints({{1, 2}, {2, 4}})));
    auto k = kernel(QMat::from_ints({{1, 1, 1}}));
    CHECK(k.size() == 2);
    CHECK(smith_invariants(QMat::from_ints({{2, 0}, {0, 3}})) == std::vector<Z>{1, 6});
}

TEST_CASE("exact simplex") {
    // max x + y on x, y >= 0, x + 2y <= 4, 3x + y <= 6
    HSystem s;
    s.dim = 2;
    s.ge = {{qv({1, 0}), 0}, {qv({0, 1}), 0}, {qv({-1, -2}), 4}, {qv({-3, -1}), 6}};
    LPResult r = lp_optimize(s, qv({1, 1}), true);
    REQUIRE(r.status == LPStatus::Optimal);
    CHECK(r.value == Q(14, 5));
    CHECK(r.x == QVec{Q(8, 5), Q(6, 5)});
    CHECK(lp_optimize(s, qv({-1, 0}), false).status == LPStatus::Optimal);

    HSystem open;
    open.dim = 1;
    open.ge = {{qv({1}), 0}};
    CHECK(lp_optimize(open, qv({1}), true).status == LPStatus::Unbounded);

    HSystem empty = s;
    empty.ge.push_back({qv({1, 1}), -5});
    CHECK(lp_optimize(empty, qv({1, 0}), true).status == LPStatus::Infeasible);
    auto f = infeasibility_certificate(empty);
    REQUIRE(f);
    CHECK(verify_farkas(empty, *f));
    CHECK_FALSE(infeasibility_certificate(s));

    CHECK(implies(s, {qv({-1, 0}), 2}));
    CHECK_FALSE(implies(s, {qv({-1, 0}), 1}));
    InteriorPoint ip = chebyshev_like_point(s);
    CHECK(ip.feasible);
    CHECK(s.strictly_contains(ip.x));
}

TEST_CASE("Laurent polynomials") {
    auto x = LaurentPoly::var(2, 0), y = LaurentPoly::var(2, 1);
    auto p = (x + y) * (x + y);
    CHECK(p.size() == 3);
    CHECK(p.divide_exact(x + y) == x + y);
    CHECK_FALSE((x * x + y).divide_exact(x + y));
    CHECK((x * y.monomial_inverse()).evaluate(qv({3, 4})) == Q(3, 4));
    CHECK((x + y).substitute({y, x}) == x + y);
    CHECK((x * x * y).derivative(0) == Q(2) * x * y);
    RatFunc r(x * x - y * y, x - y);
    CHECK(r.is_laurent());
    CHECK(r.laurent() == x + y);
}

}
