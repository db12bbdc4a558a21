// Acceptance run: one PASS/FAIL line per criterion; exit status 1 if any fails.
#include "crystalcone/analytic.hpp"
#include "crystalcone/gromov.hpp"
#include "crystalcone/langlands.hpp"
#include "crystalcone/poisson.hpp"
#include "crystalcone/polytopes.hpp"
#include "crystalcone/reps.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

using namespace cc;

namespace {

struct Outcome {
    bool ok = true;
    std::string note;
    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            note = what;
        }
    }
};

QVec qv(std::initializer_list<long> v) {
    QVec out;
    for (long x : v) out.push_back(Q(x));
    return out;
}

Outcome lattice_counts() {
    Outcome o;
    auto a1 = parse_type("A1");
    for (long n = 0; n <= 10; ++n) o.require(count_dim(a1, {1}, qv({n})).total == n + 1, "A1 n=" + std::to_string(n));
    auto a2 = parse_type("A2");
    for (long total = 0; total <= 6; ++total)
        for (long l1 = 0; l1 <= total; ++l1) {
            Weight lam = qv({l1, total - l1});
            CharacterTable tab = freudenthal(a2, lam);
            CountResult r121 = count_dim(a2, {1, 2, 1}, lam), r212 = count_dim(a2, {2, 1, 2}, lam);
            std::string at = "A2 lambda=" + to_string(lam);
            o.require(Z(r121.total) == weyl_dim(a2, lam), at + " total");
            o.require(r121.by_weight == r212.by_weight, at + " words disagree");
            o.require(r121.by_weight == tab.mults, at + " weight multiplicities");
        }
    return o;
}

Outcome nondominant_empty() {
    Outcome o;
    auto a2 = parse_type("A2");
    Chart ch = make_chart(a2, {1, 2, 1}, ChartKind::ReducedFactorization);
    for (const Weight& lam : {qv({-1, 0}), qv({0, -2})}) {
        CountResult r = count_dim(a2, {1, 2, 1}, lam);
        o.require(r.total == 0, "nonempty fiber " + to_string(lam));
        o.require(r.empty_certificate && verify_farkas(hw_fiber(ch, lam).sys, *r.empty_certificate),
                  "no valid Farkas certificate for " + to_string(lam));
    }
    return o;
}

Outcome cluster_suite() {
    Outcome o;
    std::mt19937 rng(2024);
    int sequences = 0;
    for (const char* t : {"A2", "A3"}) {
        auto g = parse_type(t);
        Seed s0 = seed_from_word(g, longest_word(g));
        std::vector<int> ex;
        for (int p = 0; p < s0.size(); ++p)
            if (s0.exchangeable[p]) ex.push_back(s0.index[p]);
        for (int trial = 0; trial < 250; ++trial, ++sequences) {
            int len = 1 + static_cast<int>(rng() % 8);
            Seed s = s0;
            for (int step = 0; step < len; ++step) {
                int k = ex[rng() % ex.size()];
                Seed t2 = mutate(s, k);
                Seed back = mutate(t2, k);
                o.require(back.M == s.M && back.labels == s.labels, std::string(t) + " involution");
                o.require(is_skew_symmetrized(t2.M, t2.sym), std::string(t) + " skew-symmetrizer");
                o.require(check_homogeneous(t2).ok, std::string(t) + " homogeneity");
                // the new variable is a Laurent polynomial satisfying the exchange relation
                ExchangeRelation e = exchange_relation(s, k);
                int nv = s.labels[0].nvars();
                LaurentPoly pp = LaurentPoly::constant(nv, 1), pm = pp;
                for (int p = 0; p < s.size(); ++p) {
                    if (e.plus[p]) pp = pp * s.labels[p].pow(e.plus[p]);
                    if (e.minus[p]) pm = pm * s.labels[p].pow(e.minus[p]);
                }
                o.require(t2.labels[s.pos(k)] * s.labels[s.pos(k)] == pp + pm, std::string(t) + " exchange relation");
                for (const auto& l : t2.labels) o.require(!l.is_zero(), "zero cluster variable");
                s = t2;
            }
        }
    }
    o.require(sequences == 500, "sequence count");
    return o;
}

Outcome poisson_normal_form() {
    Outcome o;
    for (const char* t : {"A1", "A2", "A3", "C2"}) {
        auto g = parse_type(t);
        auto w = longest_word(g);
        std::string at = t;
        PTBracketMatrix pt = pt_bracket_matrix(seed_from_word(g, w));
        o.require(pt.m == special_chart_brackets(g, w).m, at + " bracket matrices differ");
        DarbouxChange d = triangular_normalization(g, w);
        auto xinv = inverse(d.X);
        o.require(xinv && d.B == *xinv * d.Y, at + " B != X^-1 Y");
        for (int i = 0; i < d.Y.rows; ++i)
            for (int k = 0; k < d.Y.cols; ++k) {
                const Q& y = d.Y(i, k);
                o.require(sgn(y) >= 0 && is_integer(y) && (k >= i || sgn(y) == 0) && (k != i || y == 1), at + " Y shape");
            }
        o.require(darboux_coordinates(g, w).canonical, at + " Darboux form not canonical");
        o.require(hw_components_are_casimirs(g, w), at + " hw components are not Casimirs");
    }
    return o;
}

Outcome langlands_cones() {
    Outcome o;
    auto c2 = parse_type("C2");
    auto w = longest_word(c2);
    Chart gc = make_chart(c2, w, ChartKind::Reduced), dc = make_chart(langlands_dual(c2), w, ChartKind::Reduced);
    ComparisonMap cm = comparison_trop(c2, w);
    ConeIsoReport iso = verify_real_cone_isomorphism(bk_cone(gc), bk_cone(dc), cm.full);
    o.require(iso.forward, "Psi(C) not inside the dual cone");
    o.require(iso.backward, "Psi^-1(C dual) not inside the cone");
    SampleReport s = sample_integral_images(gc, dc, cm.full, 200);
    o.require(s.sampled == 200, "fewer than 200 samples");
    o.require(s.injective && s.contained && s.integral, "sampled images not injective/contained/integral");
    DiagramReport d = check_diagrams(gc, dc, cm);
    o.require(d.hw && d.wt, "diagrams do not commute");
    return o;
}

Outcome convergence() {
    Outcome o;
    AnalyticContext ctx = analytic_context(parse_type("A1"), {1});
    std::vector<double> grid;
    for (int s = -4; s >= -16; s -= 1) grid.push_back(s);
    std::mt19937 rng(17);
    std::ostringstream slopes;
    for (const Q& delta : {Q(1, 2), Q(1)}) {
        for (int k = 0; k < 5; ++k) {
            PTPoint p = random_pt_point(ctx, delta, rng);
            ConvergenceReport rep = convergence_fit(ctx, p, grid);
            o.require(!rep.inconclusive, "inconclusive sample at delta=" + to_string(delta));
            o.require(rep.pass, "slope below 0.75 delta at delta=" + to_string(delta));
            if (delta == 1) {
                double d6 = rep.sup_deviation[2], d12 = rep.sup_deviation[8];  // s = -6, -12
                o.require(d12 * 100 <= d6, "deviation ratio below 100");
            }
            slopes << ' ' << rep.sup_slope;
        }
    }
    if (o.ok) o.note = "min slopes" + slopes.str();
    return o;
}

Outcome gromov_width() {
    Outcome o;
    auto a1 = parse_type("A1"), a2 = parse_type("A2");
    HSystem seg = width_polytope(a1, {1}, qv({4}));
    SearchResult r1 = search_embedding(seg, Q(4));
    o.require(r1.status == SearchStatus::Found && r1.best->ell == 4 && verify_certificate(*r1.best, seg).ok, "A1 4w1");
    for (const Weight& lam : {qv({1, 1}), qv({2, 1})}) {
        HSystem p = width_polytope(a2, {1, 2, 1}, lam);
        Q bound = lambda_bound(a2, lam);
        o.require(bound == 1, "lambda bound");
        SearchOptions opt;
        opt.entry_bound = 3;
        SearchResult r = search_embedding(p, bound, opt);
        o.require(r.status == SearchStatus::Found && r.best->ell >= bound, "A2 " + to_string(lam) + " not certified");
        o.require(r.best && verify_certificate(*r.best, p).ok, "A2 certificate does not verify");
    }
    // best LP value over signed permutations and shears for rho
    HSystem p = width_polytope(a2, {1, 2, 1}, qv({1, 1}));
    SearchOptions scan;
    scan.entry_bound = 3;
    scan.stop_at_target = false;
    SearchResult best = search_embedding(p, Q(1), scan);
    o.require(best.best && best.best->ell <= 1, "LP maximum exceeds the lambda bound");
    if (o.ok) o.note = "best LP over " + std::to_string(best.candidates) + " matrices = " + to_string(best.best->ell);
    return o;
}

Outcome volume_consistency() {
    Outcome o;
    auto a2 = parse_type("A2");
    Chart ch = make_chart(a2, {1, 2, 1}, ChartKind::ReducedFactorization);
    Q v1 = polytope_volume(hw_fiber(ch, qv({1, 1})));
    std::vector<Q> counts;
    for (long k = 0; k <= 4; ++k) {
        Weight lam = qv({k, k});
        if (k >= 1) o.require(polytope_volume(hw_fiber(ch, lam)) == v1 * Q(k * k * k), "volume not cubic at k=" + std::to_string(k));
        counts.push_back(Q(count_dim(a2, {1, 2, 1}, lam).total));
    }
    // cubic through k = 0..3 (third finite difference / 3! is the leading coefficient) must predict k = 4
    Q d3 = counts[3] - 3 * counts[2] + 3 * counts[1] - counts[0];
    Q d3b = counts[4] - 3 * counts[3] + 3 * counts[2] - counts[1];
    o.require(d3 == d3b, "counts are not cubic in k");
    o.require(d3 / 6 == v1, "Ehrhart leading coefficient " + to_string(d3 / 6) + " != volume " + to_string(v1));
    if (o.ok) o.note = "vol(rho) = " + to_string(v1);
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double limit;  // seconds
        std::function<Outcome()> run;
    };
    const Criterion criteria[] = {
        {1, "lattice counts equal dimensions and multiplicities", 10, lattice_counts},
        {2, "non-dominant fibers are empty with certificates", 1, nondominant_empty},
        {3, "cluster mutation property suite", 60, cluster_suite},
        {4, "Poisson normal form", 10, poisson_normal_form},
        {5, "Langlands cone isomorphism C2 <-> B2", 60, langlands_cones},
        {6, "bracket convergence rate", 30, convergence},
        {7, "width lower bound certificates", 60, gromov_width},
        {8, "volume consistency", 30, volume_consistency},
    };
    bool all = true;
    for (const auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.note = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (o.ok && secs > c.limit) {
            o.ok = false;
            o.note = "time limit exceeded";
        }
        all = all && o.ok;
        std::printf("criterion %d: %s  %s (%.2fs)%s%s\n", c.id, o.ok ? "PASS" : "FAIL", c.name, secs,
                    o.note.empty() ? "" : " - ", o.note.c_str());
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}
