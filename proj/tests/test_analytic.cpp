#include "crystalcone/analytic.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <cmath>

using namespace cc;

TEST_SUITE("analytic") {

TEST_CASE("detropicalization reproduces the chart coordinates") {
    AnalyticContext ctx = analytic_context(parse_type("A2"), {1, 2, 1});
    std::mt19937 rng(1);
    PTPoint p = random_pt_point(ctx, Q(1, 2), rng);
    CHECK(potential_margin(ctx, p.x) == Q(1, 2));
    const double s = -3;
    auto z = chart_values(ctx, detrop(ctx, s, p));
    for (size_t i = 0; i < z.size(); ++i) {
        cd expect = std::exp(cd(s * p.x[i].get_d() / 2, p.phi[i]));
        CHECK(std::abs(z[i].to_cd() - expect) <= 1e-12 * std::abs(expect));
    }
    CHECK_THROWS_AS(analytic_context(parse_type("C2"), {1, 2, 1, 2}), Error);
}

TEST_CASE("holomorphic brackets are log-canonical") {
    for (const char* t : {"A1", "A2"}) {
        CAPTURE(t);
        auto g = parse_type(t);
        AnalyticContext ctx = analytic_context(g, longest_word(g));
        CCoefficients c = c_coefficients(*ctx.chart.seed);
        std::mt19937 rng(4);
        for (int trial = 0; trial < 5; ++trial) {
            PTPoint p = random_pt_point(ctx, Q(1), rng);
            CMat b = detrop(ctx, -2, p);
            auto z = chart_values(ctx, b);
            NumericBrackets nb = numeric_brackets(ctx, b);
            int n = static_cast<int>(z.size());
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    cd ratio = (nb.hol[i][j] / (z[i] * z[j])).to_cd();
                    CHECK(std::abs(ratio - cd(0, c.zz(i, j).get_d())) < 1e-12);
                    CHECK(std::abs(((nb.hol[i][j] + nb.hol[j][i]) / (z[i] * z[j])).to_cd()) < 1e-12);
                }
        }
    }
}

TEST_CASE("scaled brackets approach the constant bracket") {
    AnalyticContext ctx = analytic_context(parse_type("A1"), {1});
    std::mt19937 rng(8);
    PTPoint p = random_pt_point(ctx, Q(1), rng);
    PiS pi = pi_s_in_coordinates(ctx, -10, p);
    CHECK(std::abs(pi.lambda_phi[0][0] - 1) < 1e-3);
    PiS near = pi_s_in_coordinates(ctx, -8, p), far = pi_s_in_coordinates(ctx, -12, p);
    double dn = std::abs(near.lambda_phi[1][0]), df = std::abs(far.lambda_phi[1][0]);
    if (dn > kNoiseFloor) CHECK(df < dn * std::exp(-4 * 0.75));
}

TEST_CASE("convergence fits") {
    AnalyticContext ctx = analytic_context(parse_type("A1"), {1});
    std::vector<double> grid;
    for (int s = -4; s >= -16; s -= 2) grid.push_back(s);
    for (const Q& delta : {Q(1, 2), Q(1)}) {
        std::mt19937 rng(21);
        for (int k = 0; k < 3; ++k) {
            PTPoint p = random_pt_point(ctx, delta, rng);
            ConvergenceReport rep = convergence_fit(ctx, p, grid);
            CHECK_FALSE(rep.inconclusive);
            CHECK(rep.pass);
            CHECK(rep.sup_slope >= 0.75 * delta.get_d());
        }
    }
    std::mt19937 rng(0);
    CHECK_THROWS_AS(random_pt_point(ctx, Q(0), rng), Error);
    PTPoint p = random_pt_point(ctx, Q(1), rng);
    CHECK_THROWS_AS(convergence_fit(ctx, p, {-4}), Error);
}

}
