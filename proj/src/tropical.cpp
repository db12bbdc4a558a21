#include "crystalcone/tropical.hpp"

#include <algorithm>
#include <set>

namespace cc {

namespace {

QVec to_q(const Exp& e) {
    QVec v;
    for (int x : e) v.push_back(Q(x));
    return v;
}

Q min_over(const std::vector<QVec>& cov, const QVec& x) {
    Q best = dot(cov.at(0), x);
    for (size_t i = 1; i < cov.size(); ++i) best = std::min(best, Q(dot(cov[i], x)));
    return best;
}

std::vector<QVec> covectors(const LaurentPoly& f, const char* what) {
    if (f.is_zero()) fail(ErrorKind::PositivityViolation, std::string(what) + " is zero");
    if (!f.all_coefficients_positive())
        fail(ErrorKind::PositivityViolation, std::string(what) + " is not subtraction free: " + f.to_string());
    std::vector<QVec> out;
    for (const auto& [e, c] : f.terms()) out.push_back(to_q(e));
    return out;
}

}  // namespace

Q TropicalForm::eval(const QVec& x) const {
    Q v = min_over(num, x);
    if (!den.empty()) v -= min_over(den, x);
    return v;
}

TropicalForm tropicalize(const LaurentPoly& num) {
    TropicalForm t;
    t.nvars = num.nvars();
    t.num = covectors(num, "numerator");
    return t;
}

TropicalForm tropicalize(const LaurentPoly& num, const LaurentPoly& den) {
    TropicalForm t = tropicalize(num);
    t.den = covectors(den, "denominator");
    return t;
}

ConeH cone_from_potential(const LaurentPoly& f) {
    ConeH c;
    c.dim = f.nvars();
    for (auto& v : covectors(f, "potential")) c.ge.push_back({v, 0});
    return c;
}

ConeH delta_interior(const ConeH& cone, const Q& delta) {
    ConeH c = cone;
    for (auto& h : c.ge) h.c -= delta;
    return c;
}

ConeH bk_cone(const Chart& chart) { return cone_from_potential(chart.potential); }

ConeH bk_cone(const CartanDatum& g, const WeylWord& word, ChartKind kind) {
    return bk_cone(make_chart(g, word, kind));
}

ConeH string_cone(const CartanDatum& g, const WeylWord& word) {
    return cone_from_potential(make_chart(g, word, ChartKind::String).potential);
}

bool torsion_free_cokernel(const QMat& m) {
    for (const auto& z : smith_invariants(m))
        if (z != 1) return false;
    return true;
}

Affine normalize(const Affine& h) {
    // primitive integral normal, positive scaling only so the orientation survives
    Z l = lcm_denominators(h.a);
    std::vector<Z> ints;
    for (const auto& v : h.a) ints.push_back(Q(v * l).get_num());
    Z g = gcd_vec(ints);
    if (g == 0) return h;
    Q f = Q(l) / Q(g);
    return {scale(f, h.a), f * h.c};
}

HSystem simplify(const HSystem& s, bool lp_redundancy) {
    HSystem out;
    out.dim = s.dim;
    std::set<Affine> seen_ge, seen_eq;
    for (const auto& e : s.eq) {
        Affine n = normalize(e);
        bool zero = std::all_of(n.a.begin(), n.a.end(), [](const Q& v) { return sgn(v) == 0; });
        if (zero) {
            if (sgn(n.c) != 0) {
                out.eq.push_back(n);  // inconsistent; keep as witness
            }
            continue;
        }
        // orientation of an equation is irrelevant: fix the first nonzero coefficient positive
        for (const auto& v : n.a)
            if (sgn(v) != 0) {
                if (sgn(v) < 0) {
                    for (auto& w : n.a) w = -w;
                    n.c = -n.c;
                }
                break;
            }
        if (seen_eq.insert(n).second) out.eq.push_back(n);
    }
    for (const auto& h : s.ge) {
        Affine n = normalize(h);
        bool zero = std::all_of(n.a.begin(), n.a.end(), [](const Q& v) { return sgn(v) == 0; });
        if (zero) {
            if (sgn(n.c) < 0) out.ge.push_back(n);  // 0 >= positive: infeasible witness
            continue;
        }
        if (seen_ge.insert(n).second) out.ge.push_back(n);
    }
    // among parallel rows keep the tightest constant: a.x + c >= 0 with smaller c wins
    {
        std::vector<Affine> kept;
        for (const auto& h : out.ge) {
            bool dominated = false;
            for (auto& k : kept)
                if (k.a == h.a) {
                    if (h.c < k.c) k.c = h.c;
                    dominated = true;
                    break;
                }
            if (!dominated) kept.push_back(h);
        }
        out.ge = kept;
    }
    if (lp_redundancy && out.ge.size() > 1) {
        for (size_t i = 0; i < out.ge.size();) {
            HSystem rest = out;
            Affine h = rest.ge[i];
            rest.ge.erase(rest.ge.begin() + static_cast<long>(i));
            if (implies(rest, h) && chebyshev_like_point(rest).feasible) out.ge = rest.ge;
            else ++i;
        }
    }
    return out;
}

HSystem fm_eliminate(const HSystem& s, int v) {
    HSystem out;
    out.dim = s.dim;
    // use an equation when one involves v
    for (size_t k = 0; k < s.eq.size(); ++k) {
        if (sgn(s.eq[k].a[v]) == 0) continue;
        const Affine& p = s.eq[k];
        auto subst = [&](const Affine& h) {
            if (sgn(h.a[v]) == 0) return h;
            Q f = h.a[v] / p.a[v];
            Affine r{sub(h.a, scale(f, p.a)), h.c - f * p.c};
            r.a[v] = 0;
            return r;
        };
        for (size_t j = 0; j < s.eq.size(); ++j)
            if (j != k) out.eq.push_back(subst(s.eq[j]));
        for (const auto& h : s.ge) out.ge.push_back(subst(h));
        return simplify(out, false);
    }
    std::vector<const Affine*> pos, neg;
    for (const auto& h : s.ge) {
        int sg = sgn(h.a[v]);
        if (sg > 0) pos.push_back(&h);
        else if (sg < 0) neg.push_back(&h);
        else out.ge.push_back(h);
    }
    out.eq = s.eq;
    for (const Affine* p : pos)
        for (const Affine* n : neg) {
            Q fp = -n->a[v], fn = p->a[v];  // both positive
            Affine r{add(scale(fp, p->a), scale(fn, n->a)), fp * p->c + fn * n->c};
            r.a[v] = 0;
            out.ge.push_back(r);
        }
    HSystem res = simplify(out, false);
    if (res.ge.size() > 24) res = simplify(res, true);
    return res;
}

QVec PLMap::apply(const QVec& x) const {
    for (const auto& p : pieces)
        if (p.domain.contains(x)) return add(p.A * x, p.b);
    fail(ErrorKind::Internal, "point outside every chamber of the PL map");
}

PLMap identity_pl_map(int dim) {
    PLMap m;
    m.dim = dim;
    HSystem all;
    all.dim = dim;
    m.pieces.push_back({all, QMat::identity(dim), QVec(dim)});
    return m;
}

PLMap trop_chart_change(const ChartStep& step, int dim) {
    PLMap m;
    m.dim = dim;
    QVec p(dim), q(dim);
    for (int j = 0; j < dim; ++j) {
        p[j] = step.plus[j];
        q[j] = step.minus[j];
    }
    // chamber 1: plus.x <= minus.x, x_v' = plus.x - x_v; chamber 2 the other way round
    for (int side = 0; side < 2; ++side) {
        const QVec& winner = side == 0 ? p : q;
        const QVec& loser = side == 0 ? q : p;
        PLPiece piece;
        piece.domain.dim = dim;
        piece.domain.ge.push_back({sub(loser, winner), 0});
        piece.A = QMat::identity(dim);
        for (int j = 0; j < dim; ++j) piece.A(step.var, j) = winner[j];
        piece.A(step.var, step.var) -= 1;
        piece.b = QVec(dim);
        m.pieces.push_back(piece);
    }
    return m;
}

QVec apply_chart_steps(const std::vector<ChartStep>& steps, const QVec& x) {
    QVec y = x;
    for (const auto& s : steps) y = trop_chart_change(s, static_cast<int>(x.size())).apply(y);
    return y;
}

QVec unapply_chart_steps(const std::vector<ChartStep>& steps, const QVec& x) {
    QVec y = x;
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) y = trop_chart_change(*it, static_cast<int>(x.size())).apply(y);
    return y;
}

}  // namespace cc
