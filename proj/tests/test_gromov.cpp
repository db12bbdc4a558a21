#include "crystalcone/gromov.hpp"

#include "helpers.hpp"

#include <doctest.h>

using namespace cc;

TEST_SUITE("gromov") {

TEST_CASE("lambda bound") {
    auto a2 = parse_type("A2");
    CHECK(lambda_bound(a2, qv({1, 1})) == 1);
    CHECK(lambda_bound(a2, qv({2, 1})) == 1);
    CHECK(lambda_bound(a2, qv({3, 2})) == 2);
    for (long n = 1; n <= 5; ++n) CHECK(lambda_bound(parse_type("A1"), qv({n})) == n);
    CHECK_THROWS_AS(lambda_bound(a2, qv({-1, 2})), Error);
}

TEST_CASE("simplex vertices") {
    auto v = simplex_vertices(1, Q(3));
    CHECK(v == std::vector<QVec>{qv({0}), qv({3})});
    CHECK(simplex_vertices(3, Q(1)).size() == 4);
    auto a = simplex_vertices(3, Q(2, 3)), b = simplex_vertices(3, Q(4, 3));
    for (size_t i = 0; i < a.size(); ++i) CHECK(scale(Q(2), a[i]) == b[i]);
}

TEST_CASE("certificates") {
    // translated standard simplex: x, y >= 1, x + y <= 4
    HSystem tri;
    tri.dim = 2;
    tri.ge = {{qv({1, 0}), -1}, {qv({0, 1}), -1}, {qv({-1, -1}), 4}};
    auto c = max_width(tri, QMat::identity(2));
    REQUIRE(c);
    CHECK(c->ell == 2);
    CHECK(c->b == qv({1, 1}));
    CHECK(verify_certificate(*c, tri).ok);
    CHECK_FALSE(verify_certificate(*c, tri, Q(1, 10)).ok);  // touches the boundary
    WidthCertificate big = *c;
    big.ell += 1;
    CertificateCheck bad = verify_certificate(big, tri);
    CHECK_FALSE(bad.ok);
    CHECK(bad.vertex >= 1);
    CHECK(bad.facet == 2);
    WidthCertificate singular = *c;
    singular.A(0, 0) = 2;
    CHECK_FALSE(verify_certificate(singular, tri).ok);
}

TEST_CASE("width search") {
    auto a1 = parse_type("A1");
    for (long n = 1; n <= 5; ++n) {
        HSystem seg = width_polytope(a1, {1}, qv({n}));
        SearchResult r = search_embedding(seg, Q(n));
        REQUIRE(r.status == SearchStatus::Found);
        CHECK(r.best->ell == n);
        CHECK(verify_certificate(*r.best, seg).ok);
    }
    HSystem seg = width_polytope(a1, {1}, qv({4}));
    SearchOptions none;
    none.entry_bound = 0;
    CHECK(search_embedding(seg, Q(4), none).status == SearchStatus::NotFound);

    // conformality on A2: the certificate for rho scales to 2 rho and 3 rho
    auto a2 = parse_type("A2");
    HSystem p1 = width_polytope(a2, {1, 2, 1}, qv({1, 1}));
    SearchResult r1 = search_embedding(p1, Q(1));
    REQUIRE(r1.status == SearchStatus::Found);
    CHECK(r1.best->ell == 1);
    for (long k = 2; k <= 3; ++k) {
        HSystem pk = width_polytope(a2, {1, 2, 1}, qv({k, k}));
        WidthCertificate scaled = *r1.best;
        scaled.ell *= k;
        scaled.b = scale(Q(k), scaled.b);
        CHECK(verify_certificate(scaled, pk).ok);
    }
}

}
