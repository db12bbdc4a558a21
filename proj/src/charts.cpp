#include "crystalcone/charts.hpp"

#include <algorithm>

namespace cc {

const char* chart_kind_name(ChartKind k) {
    switch (k) {
        case ChartKind::Factorization: return "factorization";
        case ChartKind::ReducedFactorization: return "reduced-factorization";
        case ChartKind::Cluster: return "cluster";
        case ChartKind::Reduced: return "reduced";
        case ChartKind::Twisted: return "twisted";
        case ChartKind::String: return "string";
    }
    return "?";
}

ChartKind parse_chart_kind(const std::string& s) {
    for (ChartKind k : {ChartKind::Factorization, ChartKind::ReducedFactorization, ChartKind::Cluster,
                        ChartKind::Reduced, ChartKind::Twisted, ChartKind::String})
        if (s == chart_kind_name(k)) return k;
    fail(ErrorKind::ChartUnsupported, "unknown chart kind '" + s + "'");
}

std::vector<int> Chart::h_coords() const {
    std::vector<int> out;
    for (int v = 0; v < nvars; ++v)
        if (!integral[v]) out.push_back(v);
    return out;
}

Exp monomial_exponent_of(const LaurentPoly& p, const std::string& what) {
    if (!p.is_monomial() || p.monomial_coefficient() != 1)
        fail(ErrorKind::ChartUnsupported, what + " is not a unit monomial in this chart: " + p.to_string());
    return p.monomial_exponent();
}

namespace {

LMat embed(const LMat& m, const std::vector<int>& map, int nv) {
    LMat r;
    r.n = m.n;
    for (const auto& e : m.a) r.a.push_back(e.embed(map, nv));
    return r;
}

std::vector<int> shifted(int count, int offset) {
    std::vector<int> v(count);
    for (int i = 0; i < count; ++i) v[i] = offset + i;
    return v;
}

QMat prefix_matrix(const CartanDatum& g, const WeylWord& word, int k) {
    return weyl_matrix(g, WeylWord(word.begin(), word.begin() + k));
}

// Minor attached to seed index k: Delta_{omega_i,omega_i} for k < 0, Delta_{u_k omega_i, omega_i} otherwise.
LaurentPoly chamber_minor(const RepCarrier& c, const WeylWord& word, int k, const LMat& x) {
    const auto& g = c.datum;
    QMat id = QMat::identity(g.rank);
    if (k < 0) return generalized_minor(c, id, id, -k - 1, x);
    return generalized_minor(c, prefix_matrix(g, word, k), id, word[k - 1] - 1, x);
}

void fill_hw_wt(const RepCarrier& c, Chart& ch) {
    const auto& g = c.datum;
    int r = g.rank;
    QMat w0 = weyl_matrix(g, longest_word(g)), id = QMat::identity(r);
    auto star = star_involution(g);
    ch.hw = QMat(r, ch.nvars);
    ch.wt = QMat(r, ch.nvars);
    for (int i = 0; i < r; ++i) {
        std::string idx = std::to_string(i + 1);
        if (ch.kind != ChartKind::String) {
            // hw^{w0 omega_i} = Delta_{w0 omega_i, omega_i} and w0 omega_i = -omega_{i*}
            Exp e = monomial_exponent_of(generalized_minor(c, w0, id, i, ch.point), "Delta_{w0 omega_" + idx + ", omega_" + idx + "}");
            for (int v = 0; v < ch.nvars; ++v) ch.hw(star[i], v) = -e[v];
        }
        Exp f = monomial_exponent_of(generalized_minor(c, id, id, i, ch.point), "Delta_{omega_" + idx + ", omega_" + idx + "}");
        for (int v = 0; v < ch.nvars; ++v) ch.wt(i, v) = f[v];
    }
}

// x(t) = h''(t) y_i(t) in L^{w0,e}, in nv variables with t at positions offset..offset+m-1.
LMat reduced_factorization_point(const RepCarrier& c, const WeylWord& word, int offset, int nv) {
    const auto& g = c.datum;
    int r = g.rank, m = static_cast<int>(word.size());
    LMat y = embed(factorization_point(c, word, false), shifted(m, offset), nv);
    QMat w0 = weyl_matrix(g, longest_word(g)), id = QMat::identity(r);
    auto star = star_involution(g);
    std::vector<LaurentPoly> vals(r, LaurentPoly(nv));
    for (int i = 0; i < r; ++i) {
        LaurentPoly mi = generalized_minor(c, w0, id, i, y);
        monomial_exponent_of(mi, "Delta_{w0 omega_i, omega_i}(y)");
        vals[star[i]] = mi;
    }
    return torus_from_values(c, vals) * y;
}

struct TwistData {
    LMat X;               // zeta(q) in (c, t)
    LMat q;               // h(c) y_{i^op}(t)
    std::vector<Exp> E;   // chamber-minor exponents, one row per seed position
    std::vector<Exp> F;   // E^{-1}
};

TwistData twist_data(const RepCarrier& c, const WeylWord& word) {
    const auto& g = c.datum;
    int r = g.rank, m = static_cast<int>(word.size());
    WeylWord rev(word.rbegin(), word.rend());
    TwistData d;
    d.q = factorization_point(c, rev, true);
    d.X = twist(c, d.q);
    int n = r + m;
    QMat E(n, n);
    int p = 0;
    for (int k = -r; k <= m; ++k) {
        if (k == 0) continue;
        Exp e = monomial_exponent_of(chamber_minor(c, word, k, d.X), "twisted chamber minor " + std::to_string(k));
        d.E.push_back(e);
        for (int v = 0; v < n; ++v) E(p, v) = e[v];
        ++p;
    }
    auto inv = inverse(E);
    if (!inv || !is_integral(*inv))
        fail(ErrorKind::ChartUnsupported, "twisted chamber minors are not a unimodular monomial system");
    for (int v = 0; v < n; ++v) {
        Exp row(n);
        for (int j = 0; j < n; ++j) row[j] = static_cast<int>(to_long((*inv)(v, j).get_num()));
        d.F.push_back(row);
    }
    return d;
}

std::vector<std::string> seed_names(const CartanDatum& g, int m, const std::string& stem) {
    std::vector<std::string> out;
    for (int k = -g.rank; k <= m; ++k)
        if (k != 0) out.push_back(stem + std::to_string(k));
    return out;
}

void check_chamber_minors(const RepCarrier& c, const Chart& ch, const Seed& s) {
    for (int p = 0; p < s.size(); ++p) {
        int k = s.index[p];
        LaurentPoly expect = ch.seed_var[p] < 0 ? LaurentPoly::constant(ch.nvars, 1) : LaurentPoly::var(ch.nvars, ch.seed_var[p]);
        LaurentPoly got = chamber_minor(c, s.word, k, ch.point);
        if (ch.kind == ChartKind::Reduced) {
            // h(a) scales Delta_{u omega_i, omega_i} by a^{u omega_i}
            Weight uw = k < 0 ? fundamental_weight(c.datum, -k - 1)
                              : prefix_matrix(c.datum, s.word, k) * fundamental_weight(c.datum, s.word[k - 1] - 1);
            Exp e(ch.nvars, 0);
            for (int j = 0; j < c.datum.rank; ++j) e[j] = static_cast<int>(to_long(uw[j].get_num()));
            expect = expect * LaurentPoly::monomial(ch.nvars, e);
        }
        if (!(got == expect))
            fail(ErrorKind::Internal, "chamber minor " + std::to_string(k) + " does not match its chart variable");
    }
}

}  // namespace

std::vector<Exp> twisted_exponents(const CartanDatum& g, const WeylWord& word) {
    return twist_data(rep_carrier(g), word).E;
}

Chart make_chart(const CartanDatum& g, const WeylWord& word, ChartKind kind) {
    if (!is_reduced(g, word)) fail(ErrorKind::NotReduced, "word " + to_string(word) + " is not reduced");
    int r = g.rank, m = static_cast<int>(word.size());
    if (m != static_cast<int>(positive_roots(g).size()))
        fail(ErrorKind::NotReduced, "word " + to_string(word) + " is not a word for w0");
    RepCarrier c = rep_carrier(g);
    Chart ch;
    std::optional<QMat> to_chart;  // chart coordinates of a factorization point (c, t), when linear
    ch.kind = kind;
    ch.datum = g;
    ch.word = word;
    switch (kind) {
        case ChartKind::Factorization: {
            ch.nvars = r + m;
            for (int i = 1; i <= r; ++i) ch.names.push_back("c" + std::to_string(i));
            for (int k = 1; k <= m; ++k) ch.names.push_back("t" + std::to_string(k));
            ch.point = factorization_point(c, word, true);
            ch.integral.assign(ch.nvars, true);
            to_chart = QMat::identity(ch.nvars);
            break;
        }
        case ChartKind::ReducedFactorization: {
            ch.nvars = r + m;
            for (int i = 1; i <= r; ++i) ch.names.push_back("a" + std::to_string(i));
            for (int k = 1; k <= m; ++k) ch.names.push_back("t" + std::to_string(k));
            ch.point = torus_element(c, 0, ch.nvars) * reduced_factorization_point(c, word, r, ch.nvars);
            ch.integral.assign(ch.nvars, true);
            for (int i = 0; i < r; ++i) ch.integral[i] = false;
            break;
        }
        case ChartKind::String: {
            ch.nvars = m;
            for (int k = 1; k <= m; ++k) ch.names.push_back("tau" + std::to_string(k));
            // t_k = 1 / tau_k
            std::vector<Exp> rows;
            for (int k = 0; k < m; ++k) {
                Exp e(m, 0);
                e[k] = -1;
                rows.push_back(e);
            }
            ch.point = monomial_substitute(reduced_factorization_point(c, word, 0, m), rows, m);
            ch.integral.assign(ch.nvars, true);
            break;
        }
        case ChartKind::Cluster:
        case ChartKind::Twisted:
        case ChartKind::Reduced: {
            TwistData d = twist_data(c, word);
            Seed s = seed_from_word(g, word);
            int n = r + m;
            QMat E(n, n);
            for (int p = 0; p < n; ++p)
                for (int v = 0; v < n; ++v) E(p, v) = d.E[p][v];
            if (kind != ChartKind::Reduced) to_chart = E;
            if (kind == ChartKind::Twisted) {
                ch.nvars = n;
                ch.names = seed_names(g, m, "w");
                ch.point = monomial_substitute(d.q, d.F, n);
                ch.integral.assign(n, true);
                break;
            }
            LMat x = monomial_substitute(d.X, d.F, n);
            if (kind == ChartKind::Cluster) {
                ch.nvars = n;
                ch.names = seed_names(g, m, "z");
                ch.point = x;
                ch.integral.assign(n, true);
                for (int p = 0; p < n; ++p) ch.seed_var.push_back(p);
            } else {
                // drop the frozen last-occurrence variables (set to 1) and prepend H
                std::vector<Exp> rows;
                std::vector<std::string> names;
                for (int i = 1; i <= r; ++i) names.push_back("a" + std::to_string(i));
                int kept = 0;
                for (int p = 0; p < n; ++p)
                    if (s.is_last_occurrence(s.index[p])) ch.seed_var.push_back(-1);
                    else ch.seed_var.push_back(r + kept++);
                ch.nvars = r + kept;
                for (int p = 0; p < n; ++p) {
                    Exp e(ch.nvars, 0);
                    if (ch.seed_var[p] >= 0) {
                        e[ch.seed_var[p]] = 1;
                        names.push_back("z" + std::to_string(s.index[p]));
                    }
                    rows.push_back(e);
                }
                ch.names = names;
                ch.point = torus_element(c, 0, ch.nvars) * monomial_substitute(x, rows, ch.nvars);
                ch.integral.assign(ch.nvars, true);
                for (int i = 0; i < r; ++i) ch.integral[i] = false;
            }
            ch.seed = s;
            check_chamber_minors(c, ch, s);
            break;
        }
    }
    fill_hw_wt(c, ch);
    if (to_chart) {
        // base point (c0, 0) with hw(c0, 0) = eta, pushed into the chart
        QMat hwf = ch.hw * *to_chart;
        QMat B(r, r);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) B(i, j) = hwf(i, j);
        QMat base(ch.nvars, r);
        QMat Binv = inverse_or_throw(B, "torus block of the highest weight map");
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) base(i, j) = Binv(i, j);
        ch.coset = *to_chart * base;
    }
    ch.potential = kind == ChartKind::String ? string_potential(c, ch.point) : bk_potential(c, ch.point);
    return ch;
}

Chart mutate_chart(const Chart& ch, int k) {
    if (!ch.seed) fail(ErrorKind::ChartUnsupported, std::string(chart_kind_name(ch.kind)) + " chart has no seed");
    const Seed& s = *ch.seed;
    ExchangeRelation rel = exchange_relation(s, k);
    int pk = s.pos(k), v = ch.seed_var[pk];
    int nv = ch.nvars;
    ChartStep step;
    step.var = v;
    step.plus.assign(nv, 0);
    step.minus.assign(nv, 0);
    for (int p = 0; p < s.size(); ++p) {
        int sv = ch.seed_var[p];
        if (sv < 0) continue;
        step.plus[sv] += rel.plus[p];
        step.minus[sv] += rel.minus[p];
    }
    Exp ep(step.plus.begin(), step.plus.end()), em(step.minus.begin(), step.minus.end());
    LaurentPoly binom = LaurentPoly::monomial(nv, ep) + LaurentPoly::monomial(nv, em);
    std::vector<RatFunc> images;
    for (int u = 0; u < nv; ++u)
        images.push_back(u == v ? RatFunc(binom, LaurentPoly::var(nv, v)) : RatFunc(LaurentPoly::var(nv, u)));

    Chart out = ch;
    out.seed = mutate(s, k);
    out.names[v] = ch.names[v] + "'";
    for (auto& e : out.point.a) e = substitute(e, images).laurent();
    out.potential = substitute(ch.potential, images).laurent();
    require_positive(out.potential, "mutated potential");
    out.steps.push_back(step);
    if (ch.coset.rows == nv) {
        // p.x and q.x agree mod Z on the coset (homogeneous exchange), so either branch will do
        for (int j = 0; j < ch.coset.cols; ++j) {
            Q val = -ch.coset(v, j);
            for (int u = 0; u < nv; ++u) val += Q(step.plus[u]) * ch.coset(u, j);
            out.coset(v, j) = val;
        }
    }
    // frozen minors are untouched by mutation, so hw/wt keep their rows; recompute as a check
    RepCarrier c = rep_carrier(ch.datum);
    fill_hw_wt(c, out);
    if (!(out.hw == ch.hw) || !(out.wt == ch.wt)) fail(ErrorKind::Internal, "mutation moved a frozen coordinate");
    return out;
}

}  // namespace cc
