#include "crystalcone/polytopes.hpp"

#include "crystalcone/parallel.hpp"

namespace cc {

QVec fiber_coordinates(const CartanDatum& cone_datum, const Weight& lambda) {
    if (static_cast<int>(lambda.size()) != cone_datum.rank) fail(ErrorKind::BadIndex, "weight has the wrong rank");
    return inverse_or_throw(transpose(cone_datum.cartan_matrix()), "A^T") * lambda;
}

Polytope hw_fiber(const Chart& chart, const ConeH& cone, const Weight& lambda) {
    int r = chart.datum.rank, n = chart.nvars;
    QVec eta = fiber_coordinates(chart.datum, lambda);
    std::vector<int> H = chart.h_coords(), I;
    for (int v = 0; v < n; ++v)
        if (chart.integral[v]) I.push_back(v);
    int ni = static_cast<int>(I.size());
    Polytope p;
    for (int v : I) p.names.push_back(chart.names[v]);
    p.lift = QMat(n, ni);
    p.shift = QVec(n);
    for (int j = 0; j < ni; ++j) p.lift(I[j], j) = 1;
    p.sys.dim = ni;
    if (!H.empty()) {
        if (static_cast<int>(H.size()) != r) fail(ErrorKind::ChartUnsupported, "torus block has the wrong size");
        QMat B(r, r), C(r, ni);
        for (int i = 0; i < r; ++i) {
            for (int j = 0; j < r; ++j) B(i, j) = chart.hw(i, H[j]);
            for (int j = 0; j < ni; ++j) C(i, j) = chart.hw(i, I[j]);
        }
        QMat Binv = inverse_or_throw(B, "hw torus block");
        QMat L = Q(-1) * (Binv * C);
        QVec s = Binv * eta;
        for (int i = 0; i < r; ++i) {
            for (int j = 0; j < ni; ++j) p.lift(H[i], j) = L(i, j);
            p.shift[H[i]] = s[i];
        }
    } else {
        // every coordinate is declared integral, but the fiber lives on a coset x0 + Z^n
        if (chart.coset.rows != n) fail(ErrorKind::ChartUnsupported, std::string(chart_kind_name(chart.kind)) + " chart has no fiber lattice");
        p.shift = chart.coset * eta;
        for (int i = 0; i < r; ++i) p.sys.eq.push_back({chart.hw.row(i), 0});
    }
    QMat liftT = transpose(p.lift);
    for (const auto& h : cone.ge) p.sys.ge.push_back({liftT * h.a, dot(h.a, p.shift) + h.c});
    for (const auto& h : cone.eq) p.sys.eq.push_back({liftT * h.a, dot(h.a, p.shift) + h.c});
    p.sys = simplify(p.sys, false);
    return p;
}

Polytope hw_fiber(const Chart& chart, const Weight& lambda) { return hw_fiber(chart, bk_cone(chart), lambda); }

namespace {

struct Enumerator {
    std::vector<HSystem> proj;  // proj[k] involves coordinates 0..k only
    int n = 0;

    explicit Enumerator(const HSystem& s) : n(s.dim) {
        proj.resize(n);
        if (n == 0) return;
        proj[n - 1] = simplify(s, false);
        for (int k = n - 1; k >= 1; --k) proj[k - 1] = fm_eliminate(proj[k], k);
    }

    // Integer range for y_k given y_0..y_{k-1}; false when empty.
    bool range(int k, const QVec& y, Z& lo, Z& hi) const {
        std::optional<Q> l, h;
        auto partial = [&](const Affine& a) {
            Q v = a.c;
            for (int j = 0; j < k; ++j)
                if (sgn(a.a[j]) != 0) v += a.a[j] * y[j];
            return v;
        };
        for (const auto& e : proj[k].eq) {
            Q v = partial(e);
            if (sgn(e.a[k]) == 0) {
                if (sgn(v) != 0) return false;
                continue;
            }
            Q x = -v / e.a[k];
            if (!is_integer(x)) return false;
            if (!l || x > *l) l = x;
            if (!h || x < *h) h = x;
        }
        for (const auto& g : proj[k].ge) {
            Q v = partial(g);
            int s = sgn(g.a[k]);
            if (s == 0) {
                if (sgn(v) < 0) return false;
                continue;
            }
            Q x = -v / g.a[k];
            if (s > 0) {
                if (!l || x > *l) l = x;
            } else if (!h || x < *h) {
                h = x;
            }
        }
        if (!l || !h) fail(ErrorKind::Unbounded, "polytope is unbounded in coordinate " + std::to_string(k + 1));
        lo = ceil_q(*l);
        hi = floor_q(*h);
        return lo <= hi;
    }

    void rec(int k, QVec& y, std::vector<QVec>& out) const {
        if (k == n) {
            out.push_back(y);
            return;
        }
        Z lo, hi;
        if (!range(k, y, lo, hi)) return;
        for (Z v = lo; v <= hi; ++v) {
            y[k] = Q(v);
            rec(k + 1, y, out);
        }
        y[k] = 0;
    }
};

}  // namespace

std::vector<QVec> enumerate_lattice_points(const Polytope& p) {
    int n = p.sys.dim;
    std::vector<QVec> out;
    if (n == 0) {
        if (p.sys.contains({})) out.push_back({});
        return out;
    }
    Enumerator en(p.sys);
    QVec y(n);
    Z lo, hi;
    if (!en.range(0, y, lo, hi)) return out;
    long slabs = to_long(Z(hi - lo + 1));
    std::vector<std::vector<QVec>> parts(slabs);
    parallel_for(static_cast<int>(slabs), [&](int i) {
        QVec yy(n);
        yy[0] = Q(Z(lo + i));
        en.rec(1, yy, parts[i]);
    });
    for (auto& part : parts)
        for (auto& v : part) out.push_back(std::move(v));
    return out;
}

CountResult count_chart(const Chart& chart, const Weight& lambda) {
    CountResult res;
    res.lambda = lambda;
    Polytope p = hw_fiber(chart, lambda);
    if (auto cert = infeasibility_certificate(p.sys)) {
        res.empty_certificate = cert;
        return res;
    }
    QMat AT = transpose(chart.datum.cartan_matrix());
    for (const auto& y : enumerate_lattice_points(p)) {
        Weight nu = AT * (chart.wt * p.full(y));
        ++res.by_weight[nu];
        ++res.total;
    }
    return res;
}

CountResult count_dim(const CartanDatum& g, const WeylWord& word, const Weight& lambda, ChartKind kind, bool raw_cone) {
    CartanDatum d = raw_cone ? g : langlands_dual(g);
    return count_chart(make_chart(d, word, kind), lambda);
}

long count_weight(const CartanDatum& g, const WeylWord& word, const Weight& lambda, const Weight& nu, ChartKind kind,
                  bool raw_cone) {
    auto res = count_dim(g, word, lambda, kind, raw_cone);
    auto it = res.by_weight.find(nu);
    return it == res.by_weight.end() ? 0 : it->second;
}

namespace {

Q lasserre(const HSystem& in) {
    HSystem s = simplify(in, false);
    int d = s.dim;
    for (const auto& h : s.ge) {
        bool zero = true;
        for (const auto& v : h.a)
            if (sgn(v) != 0) zero = false;
        if (zero && sgn(h.c) < 0) return 0;
    }
    if (d == 1) {
        std::optional<Q> lo, hi;
        for (const auto& h : s.ge) {
            int sg = sgn(h.a[0]);
            if (sg == 0) continue;
            Q x = -h.c / h.a[0];
            if (sg > 0) {
                if (!lo || x > *lo) lo = x;
            } else if (!hi || x < *hi) {
                hi = x;
            }
        }
        if (!lo || !hi) fail(ErrorKind::Unbounded, "volume of an unbounded set");
        return *hi > *lo ? Q(*hi - *lo) : Q(0);
    }
    InteriorPoint ip = chebyshev_like_point(s);
    if (!ip.feasible || sgn(ip.slack) <= 0) return 0;
    Q sum = 0;
    for (size_t i = 0; i < s.ge.size(); ++i) {
        const Affine& f = s.ge[i];
        if (sgn(f.c) == 0) continue;
        int k = 0;
        while (sgn(f.a[k]) == 0) ++k;
        // on the facet x_k = -(c + sum_{j != k} a_j x_j) / a_k; project away x_k
        HSystem facet;
        facet.dim = d - 1;
        for (size_t r = 0; r < s.ge.size(); ++r) {
            if (r == i) continue;
            const Affine& g = s.ge[r];
            Q t = g.a[k] / f.a[k];
            Affine h;
            for (int j = 0; j < d; ++j)
                if (j != k) h.a.push_back(g.a[j] - t * f.a[j]);
            h.c = g.c - t * f.c;
            facet.ge.push_back(h);
        }
        sum += f.c / abs(f.a[k]) * lasserre(facet);
    }
    return sum / Q(d);
}

}  // namespace

Q volume(const HSystem& s) {
    if (!s.eq.empty()) fail(ErrorKind::ChartUnsupported, "volume needs a full-dimensional system");
    if (s.dim == 0) return s.contains({}) ? Q(1) : Q(0);
    return lasserre(s);
}

HSystem eliminate_unit_equations(const HSystem& in) {
    HSystem s = in;
    // each step is unimodular, so lattice points and lattice volume are preserved
    while (!s.eq.empty()) {
        const Affine e = s.eq.front();
        int k = -1;
        for (int j = 0; j < s.dim; ++j)
            if (abs(e.a[j]) == 1) {
                k = j;
                break;
            }
        if (k < 0) fail(ErrorKind::ChartUnsupported, "fiber equations are not unimodular");
        HSystem t;
        t.dim = s.dim - 1;
        auto reduce = [&](const Affine& g) {
            Q f = g.a[k] / e.a[k];
            Affine h;
            for (int j = 0; j < s.dim; ++j)
                if (j != k) h.a.push_back(g.a[j] - f * e.a[j]);
            h.c = g.c - f * e.c;
            return h;
        };
        for (size_t i = 1; i < s.eq.size(); ++i) t.eq.push_back(reduce(s.eq[i]));
        for (const auto& g : s.ge) t.ge.push_back(reduce(g));
        s = simplify(t, false);
    }
    return s;
}

Q polytope_volume(const Polytope& p) { return volume(eliminate_unit_equations(p.sys)); }

}  // namespace cc
