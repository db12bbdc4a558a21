#include "crystalcone/langlands.hpp"

#include <random>
#include <set>

namespace cc {

ComparisonMap comparison_trop(const CartanDatum& g, const WeylWord& word) {
    int r = g.rank;
    Seed s = seed_from_word(g, word);
    ComparisonMap cm;
    cm.datum = g;
    cm.word = word;
    cm.h_block = QMat(r, r);
    for (int i = 0; i < r; ++i) {
        Coweight e(r);
        e[i] = 1;
        Weight im = comparison_psi(g, e);
        for (int j = 0; j < r; ++j) cm.h_block(j, i) = im[j];
    }
    std::vector<int> kept;
    for (int k : s.index)
        if (!s.is_last_occurrence(k)) kept.push_back(k);
    int nz = static_cast<int>(kept.size());
    cm.diag = QMat(nz, nz);
    for (int p = 0; p < nz; ++p) cm.diag(p, p) = g.d[s.letter(kept[p]) - 1];
    cm.full = QMat(r + nz, r + nz);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) cm.full(i, j) = cm.h_block(i, j);
    for (int p = 0; p < nz; ++p) cm.full(r + p, r + p) = cm.diag(p, p);
    return cm;
}

namespace {

// Facets of dst pulled back along psi, tested against src.
std::vector<InclusionFailure> inclusion_failures(const HSystem& src, const HSystem& dst, const QMat& psi) {
    std::vector<InclusionFailure> out;
    QMat pt = transpose(psi);
    for (size_t f = 0; f < dst.ge.size(); ++f) {
        Affine h{pt * dst.ge[f].a, dst.ge[f].c};
        if (implies(src, h)) continue;
        InclusionFailure fail_at;
        fail_at.facet = static_cast<int>(f);
        LPResult res = lp_optimize(src, h.a, false);
        if (res.status == LPStatus::Optimal) fail_at.witness = res.x;
        out.push_back(fail_at);
    }
    for (const auto& e : dst.eq) {
        Affine h{pt * e.a, e.c};
        Affine neg{scale(Q(-1), h.a), -h.c};
        if (!implies(src, h) || !implies(src, neg)) out.push_back({-1, std::nullopt});
    }
    return out;
}

}  // namespace

ConeIsoReport verify_real_cone_isomorphism(const ConeH& src, const ConeH& dst, const QMat& psi) {
    ConeIsoReport rep;
    rep.failures_forward = inclusion_failures(src, dst, psi);
    rep.forward = rep.failures_forward.empty();
    auto inv = inverse(psi);
    if (!inv) return rep;
    rep.failures_backward = inclusion_failures(dst, src, *inv);
    rep.backward = rep.failures_backward.empty();
    return rep;
}

SampleReport sample_integral_images(const Chart& src, const Chart& dst, const QMat& psi, int count) {
    SampleReport rep;
    int r = src.datum.rank;
    ConeH src_cone = bk_cone(src), dst_cone = bk_cone(dst);
    QMat AT = transpose(dst.datum.cartan_matrix());
    std::set<QVec> images;
    for (int total = 0; rep.sampled < count; ++total) {
        // dominant lambda with |lambda| = total, lexicographic
        std::vector<Weight> lams;
        Weight l(r);
        auto rec = [&](auto&& self, int i, int left) -> void {
            if (i == r - 1) {
                l[i] = left;
                lams.push_back(l);
                return;
            }
            for (int v = left; v >= 0; --v) {
                l[i] = v;
                self(self, i + 1, left - v);
            }
        };
        rec(rec, 0, total);
        for (const auto& lam : lams) {
            Polytope p = hw_fiber(src, src_cone, lam);
            for (const auto& y : enumerate_lattice_points(p)) {
                if (rep.sampled >= count) return rep;
                ++rep.sampled;
                QVec x = p.full(y);
                QVec im = psi * x;
                if (!images.insert(im).second) rep.injective = false;
                if (!dst_cone.contains(im)) rep.contained = false;
                for (int v = 0; v < dst.nvars; ++v)
                    if (dst.integral[v] && !is_integer(im[v])) rep.integral = false;
                Weight lam_dual = AT * (dst.hw * im);
                if (!is_integral_weight(lam_dual)) rep.integral = false;
            }
        }
        if (total > 64) fail(ErrorKind::Internal, "too few integral points to sample");
    }
    return rep;
}

DiagramReport check_diagrams(const Chart& g_chart, const Chart& dual_chart, const ComparisonMap& map) {
    DiagramReport d;
    d.hw = dual_chart.hw * map.full == map.h_block * g_chart.hw;
    d.wt = dual_chart.wt * map.full == map.h_block * g_chart.wt;
    return d;
}

std::vector<TropicalForm> twist_tropical(const CartanDatum& g, const WeylWord& word) {
    RepCarrier c = rep_carrier(g);
    Chart ch = make_chart(g, word, ChartKind::Cluster);
    LMat z = twist(c, ch.point);
    std::vector<TropicalForm> out;
    int r = g.rank, m = static_cast<int>(word.size());
    for (int k = -r; k <= m; ++k) {
        if (k == 0) continue;
        WeylWord u(word.begin(), word.begin() + std::max(k, 0));
        int i = k < 0 ? -k - 1 : word[k - 1] - 1;
        out.push_back(tropicalize(generalized_minor(c, u, WeylWord{}, i, z)));
    }
    return out;
}

bool verify_twist_compat(const CartanDatum& g, const WeylWord& word, int samples, unsigned seed) {
    CartanDatum dual = langlands_dual(g);
    auto zt = twist_tropical(g, word), zd = twist_tropical(dual, word);
    Seed s = seed_from_word(g, word);
    int n = s.size();
    QVec d(n);
    for (int p = 0; p < n; ++p) d[p] = g.d[s.letter(s.index[p]) - 1];
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> num(-60, 60), den(1, 7);
    for (int t = 0; t < samples; ++t) {
        QVec x(n), px(n);
        for (int p = 0; p < n; ++p) {
            x[p] = Q(num(rng), den(rng));
            x[p].canonicalize();
            px[p] = d[p] * x[p];
        }
        for (int p = 0; p < n; ++p)
            if (zd[p].eval(px) != d[p] * zt[p].eval(x)) return false;
    }
    return true;
}

}  // namespace cc
