#include "crystalcone/analytic.hpp"

#include "crystalcone/lp.hpp"
#include "crystalcone/tropical.hpp"

#include <cmath>
#include <map>

namespace cc {

namespace {

mpf_class F(double v) { return mpf_class(v, kBracketPrecision); }
mpf_class F(const Q& v) { return mpf_class(v, kBracketPrecision); }

}  // namespace

MC::MC() : re(0, kBracketPrecision), im(0, kBracketPrecision) {}
MC::MC(double r, double i) : re(F(r)), im(F(i)) {}
MC::MC(mpf_class r, mpf_class i) : re(std::move(r)), im(std::move(i)) {}
MC operator+(const MC& a, const MC& b) { return {mpf_class(a.re + b.re), mpf_class(a.im + b.im)}; }
MC operator-(const MC& a, const MC& b) { return {mpf_class(a.re - b.re), mpf_class(a.im - b.im)}; }
MC operator*(const MC& a, const MC& b) {
    return {mpf_class(a.re * b.re - a.im * b.im), mpf_class(a.re * b.im + a.im * b.re)};
}
MC operator/(const MC& a, const MC& b) {
    mpf_class n = b.re * b.re + b.im * b.im;
    if (n == 0) fail(ErrorKind::ScaleError, "division by zero in bracket evaluation");
    return {mpf_class((a.re * b.re + a.im * b.im) / n), mpf_class((a.im * b.re - a.re * b.im) / n)};
}
MC conj(const MC& a) { return {a.re, mpf_class(-a.im)}; }

namespace {

bool is_zero(const MC& a) { return a.re == 0 && a.im == 0; }
mpf_class norm2(const MC& a) { return a.re * a.re + a.im * a.im; }

CMat to_cmat(const QMat& m) {
    CMat c(m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) c(i, j) = MC(F(m(i, j)), F(0.0));
    return c;
}

CMat mul(const CMat& x, const CMat& y) {
    CMat r(x.n);
    for (int i = 0; i < x.n; ++i)
        for (int k = 0; k < x.n; ++k) {
            if (is_zero(x(i, k))) continue;
            for (int j = 0; j < x.n; ++j)
                if (!is_zero(y(k, j))) r(i, j) = r(i, j) + x(i, k) * y(k, j);
        }
    return r;
}

MC det(std::vector<MC> a, int n) {
    MC d(1.0);
    for (int c = 0; c < n; ++c) {
        int piv = c;
        for (int r = c + 1; r < n; ++r)
            if (norm2(a[r * n + c]) > norm2(a[piv * n + c])) piv = r;
        if (is_zero(a[piv * n + c])) return MC();
        if (piv != c) {
            for (int j = 0; j < n; ++j) std::swap(a[c * n + j], a[piv * n + j]);
            d = MC() - d;
        }
        d = d * a[c * n + c];
        for (int r = c + 1; r < n; ++r) {
            if (is_zero(a[r * n + c])) continue;
            MC f = a[r * n + c] / a[c * n + c];
            for (int j = c; j < n; ++j) a[r * n + j] = a[r * n + j] - f * a[c * n + j];
        }
    }
    return d;
}

std::vector<MC> top_left(const CMat& m, int k) {
    std::vector<MC> out(static_cast<size_t>(k) * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) out[i * k + j] = m(i, j);
    return out;
}

MC minor(const AnalyticContext& ctx, int p, const CMat& b) {
    int k = ctx.minor_size[p];
    return det(top_left(mul(ctx.u_inv[p], b), k), k);
}

// Directional derivative of the chamber minor at b along the tangent vector v (a matrix).
MC dminor(const AnalyticContext& ctx, int p, const CMat& b, const CMat& v) {
    int k = ctx.minor_size[p];
    auto S = top_left(mul(ctx.u_inv[p], b), k);
    auto T = top_left(mul(ctx.u_inv[p], v), k);
    MC sum;
    for (int col = 0; col < k; ++col) {
        auto R = S;
        for (int i = 0; i < k; ++i) R[i * k + col] = T[i * k + col];
        sum = sum + det(R, k);
    }
    return sum;
}

// (Y.f)(b) = d/dt f(exp(-tY) b),  (f.Y)(b) = d/dt f(b exp(tY))
struct Derivs {
    std::vector<std::vector<MC>> left_h, right_h, left_pos, right_pos, left_neg, right_neg;  // [direction][position]
};

Derivs derivatives(const AnalyticContext& ctx, const CMat& b) {
    int n = ctx.chart.nvars;
    auto along = [&](const std::vector<CMat>& dirs, bool left) {
        std::vector<std::vector<MC>> out;
        for (const auto& Y : dirs) {
            CMat v = left ? mul(Y, b) : mul(b, Y);
            if (left)
                for (auto& e : v.a) e = MC() - e;
            std::vector<MC> row(n);
            for (int p = 0; p < n; ++p) row[p] = dminor(ctx, p, b, v);
            out.push_back(row);
        }
        return out;
    };
    Derivs d;
    d.left_h = along(ctx.cartan_basis, true);
    d.right_h = along(ctx.cartan_basis, false);
    d.left_pos = along(ctx.pos_roots, true);
    d.right_pos = along(ctx.pos_roots, false);
    d.left_neg = along(ctx.neg_roots, true);
    d.right_neg = along(ctx.neg_roots, false);
    return d;
}

double lsq_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
    double n = static_cast<double>(xs.size()), sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace

AnalyticContext analytic_context(const CartanDatum& g, const WeylWord& word) {
    if (g.family != 'A') fail(ErrorKind::ChartUnsupported, "numeric brackets are implemented for type A only");
    AnalyticContext ctx;
    ctx.datum = g;
    ctx.word = word;
    ctx.carrier = rep_carrier(g);
    ctx.chart = make_chart(g, word, ChartKind::Cluster);
    const Seed& s = *ctx.chart.seed;
    ctx.limit = pt_bracket_matrix(s);
    for (int p = 0; p < s.size(); ++p) {
        int k = s.index[p];
        WeylWord u(word.begin(), word.begin() + std::max(k, 0));
        ctx.u_inv.push_back(to_cmat(inverse_or_throw(lift_sbar(ctx.carrier, u), "Weyl lift")));
        ctx.minor_size.push_back(ctx.carrier.wedge[s.letter(k) - 1]);
    }
    int n = ctx.carrier.dim, r = g.rank;
    // trace form: (E_ij, E_ji) = 1, Cartan part through the inverse Gram matrix of h_1..h_r
    QMat gram(r, r);
    for (int a = 0; a < r; ++a) {
        ctx.cartan_basis.push_back(to_cmat(ctx.carrier.h[a]));
        for (int b = 0; b < r; ++b) {
            Q t = 0;
            for (int i = 0; i < n; ++i) t += ctx.carrier.h[a](i, i) * ctx.carrier.h[b](i, i);
            gram(a, b) = t;
        }
    }
    ctx.cartan_gram_inv = inverse_or_throw(gram, "Cartan Gram matrix");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            CMat e(n), f(n);
            e(i, j) = MC(1.0);
            f(j, i) = MC(1.0);
            ctx.pos_roots.push_back(e);
            ctx.neg_roots.push_back(f);
        }
    return ctx;
}

Q potential_margin(const AnalyticContext& ctx, const QVec& x) {
    ConeH cone = bk_cone(ctx.chart);
    Q best = cone.ge.at(0).eval(x);
    for (const auto& h : cone.ge) best = std::min(best, Q(h.eval(x)));
    return best;
}

PTPoint random_pt_point(const AnalyticContext& ctx, const Q& delta, std::mt19937& rng) {
    if (sgn(delta) <= 0) fail(ErrorKind::Inconclusive, "margin must be positive");
    int n = ctx.chart.nvars;
    ConeH cone = bk_cone(ctx.chart);
    // rejection sampling on a rational grid keeps the point generic
    std::uniform_int_distribution<int> coord(-70, 70);
    QVec x;
    for (int tries = 0; tries < 20000 && x.empty(); ++tries) {
        QVec y(n);
        for (auto& v : y) v = qfrac(coord(rng), 7);
        if (cone.strictly_contains(y)) x = y;
    }
    if (x.empty()) {
        // narrow cone: random convex combination of vertices of the box-truncated 1-interior
        ConeH box = delta_interior(cone, Q(1));
        for (int v = 0; v < n; ++v) {
            QVec e(n);
            e[v] = 1;
            box.ge.push_back({e, Q(10)});
            box.ge.push_back({scale(Q(-1), e), Q(10)});
        }
        std::uniform_int_distribution<int> coef(-9, 9), weight(1, 9);
        QVec sum(n);
        Q total = 0;
        for (int t = 0; t <= n; ++t) {
            QVec obj(n);
            for (auto& c : obj) c = coef(rng);
            LPResult res = lp_optimize(box, obj, true);
            if (res.status != LPStatus::Optimal) fail(ErrorKind::Internal, "cone interior is empty");
            Q w = weight(rng);
            sum = add(sum, scale(w, res.x));
            total += w;
        }
        x = scale(1 / total, sum);
    }
    PTPoint p;
    Q margin = potential_margin(ctx, x);
    p.x = scale(delta / margin, x);
    p.delta = delta;
    std::uniform_real_distribution<double> ang(0, 2 * M_PI);
    const Seed& s = *ctx.chart.seed;
    for (int q = 0; q < n; ++q) p.phi.push_back(s.index[q] < 0 ? 0.0 : ang(rng));
    return p;
}

CMat detrop(const AnalyticContext& ctx, double s, const PTPoint& p) {
    if (s == 0) fail(ErrorKind::ScaleError, "s must be nonzero");
    int n = ctx.chart.nvars;
    std::vector<MC> v(n);
    for (int q = 0; q < n; ++q) {
        double mod = std::exp(s * p.x[q].get_d() / 2);
        if (!std::isfinite(mod) || mod == 0 || !std::isfinite(1 / mod))
            fail(ErrorKind::ScaleError, "chart coordinate over/underflows at s = " + std::to_string(s));
        v[q] = MC(mod * std::cos(p.phi[q]), mod * std::sin(p.phi[q]));
    }
    // Laurent entries of the chart point, evaluated in high precision
    std::vector<std::map<int, MC>> powers(n);
    auto power = [&](int q, int e) {
        auto it = powers[q].find(e);
        if (it != powers[q].end()) return it->second;
        MC r(1.0), base = e >= 0 ? v[q] : MC(1.0) / v[q];
        for (int k = 0; k < std::abs(e); ++k) r = r * base;
        powers[q][e] = r;
        return r;
    };
    CMat b(ctx.carrier.dim);
    for (size_t i = 0; i < b.a.size(); ++i)
        for (const auto& [e, c] : ctx.chart.point.a[i].terms()) {
            MC t(F(c), F(0.0));
            for (int q = 0; q < n; ++q)
                if (e[q] != 0) t = t * power(q, e[q]);
            b.a[i] = b.a[i] + t;
        }
    return b;
}

std::vector<MC> chart_values(const AnalyticContext& ctx, const CMat& b) {
    std::vector<MC> out;
    for (int p = 0; p < ctx.chart.nvars; ++p) out.push_back(minor(ctx, p, b));
    return out;
}

NumericBrackets numeric_brackets(const AnalyticContext& ctx, const CMat& b) {
    int n = ctx.chart.nvars, r = ctx.datum.rank;
    Derivs d = derivatives(ctx, b);
    const MC I(0.0, 1.0), half_i(0.0, 0.5);
    NumericBrackets out;
    out.hol.assign(n, std::vector<MC>(n));
    out.mixed.assign(n, std::vector<MC>(n));
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
            MC hol, mix;
            for (int a = 0; a < r; ++a)
                for (int c = 0; c < r; ++c) {
                    if (sgn(ctx.cartan_gram_inv(a, c)) == 0) continue;
                    MC gi(F(ctx.cartan_gram_inv(a, c)), F(0.0));
                    hol = hol + gi * (d.left_h[a][p] * d.left_h[c][q] - d.right_h[a][p] * d.right_h[c][q]);
                    mix = mix + gi * (d.left_h[a][p] * conj(d.left_h[c][q]) - d.right_h[a][p] * conj(d.right_h[c][q]));
                }
            hol = hol * half_i;
            mix = mix * half_i;
            for (size_t al = 0; al < ctx.pos_roots.size(); ++al) {
                hol = hol + I * (d.left_pos[al][p] * d.left_neg[al][q] - d.right_pos[al][p] * d.right_neg[al][q]);
                mix = mix + I * (d.left_neg[al][p] * conj(d.left_neg[al][q]) -
                                 d.right_neg[al][p] * conj(d.right_neg[al][q]));
            }
            out.hol[p][q] = hol;
            out.mixed[p][q] = mix;
        }
    return out;
}

std::pair<cd, cd> numeric_bracket(const AnalyticContext& ctx, double s, const PTPoint& p, int i, int j) {
    const Seed& seed = *ctx.chart.seed;
    NumericBrackets nb = numeric_brackets(ctx, detrop(ctx, s, p));
    int a = seed.pos(i), b = seed.pos(j);
    return {nb.hol[a][b].to_cd(), nb.mixed[a][b].to_cd()};
}

PiS pi_s_in_coordinates(const AnalyticContext& ctx, double s, const PTPoint& p) {
    CMat b = detrop(ctx, s, p);
    auto z = chart_values(ctx, b);
    NumericBrackets nb = numeric_brackets(ctx, b);
    int n = ctx.chart.nvars;
    // brackets of log z and log zbar
    auto LL = [&](int a, int c) { return nb.hol[a][c] / (z[a] * z[c]); };
    auto LLb = [&](int a, int c) { return nb.mixed[a][c] / (z[a] * conj(z[c])); };
    auto LbL = [&](int a, int c) { return (MC() - nb.mixed[c][a]) / (z[c] * conj(z[a])); };
    auto LbLb = [&](int a, int c) { return conj(nb.hol[a][c]) / (conj(z[a]) * conj(z[c])); };
    const Seed& seed = *ctx.chart.seed;
    std::vector<int> phi_pos;
    for (int c : ctx.limit.cols) phi_pos.push_back(seed.pos(c));
    const MC inv_2i(0.0, -0.5), inv_s(1.0 / s), phi_scale(-s / 4.0);
    PiS out;
    out.lambda_phi.assign(n, std::vector<double>(phi_pos.size()));
    out.lambda_lambda.assign(n, std::vector<double>(n));
    out.phi_phi.assign(phi_pos.size(), std::vector<double>(phi_pos.size()));
    for (int a = 0; a < n; ++a) {
        for (size_t j = 0; j < phi_pos.size(); ++j) {
            int c = phi_pos[j];
            out.lambda_phi[a][j] = ((LL(a, c) - LLb(a, c) + LbL(a, c) - LbLb(a, c)) * inv_2i).re.get_d();
        }
        for (int c = 0; c < n; ++c)
            out.lambda_lambda[a][c] = ((LL(a, c) + LLb(a, c) + LbL(a, c) + LbLb(a, c)) * inv_s).re.get_d();
    }
    for (size_t i = 0; i < phi_pos.size(); ++i)
        for (size_t j = 0; j < phi_pos.size(); ++j) {
            int a = phi_pos[i], c = phi_pos[j];
            out.phi_phi[i][j] = ((LL(a, c) - LLb(a, c) - LbL(a, c) + LbLb(a, c)) * phi_scale).re.get_d();
        }
    return out;
}

ConvergenceReport convergence_fit(const AnalyticContext& ctx, const PTPoint& p, const std::vector<double>& s_grid) {
    if (s_grid.size() < 2) fail(ErrorKind::Inconclusive, "need at least two grid values");
    ConvergenceReport rep;
    rep.s_grid = s_grid;
    rep.delta = p.delta.get_d();
    const auto& lim = ctx.limit;
    int n = static_cast<int>(lim.rows.size()), m = static_cast<int>(lim.cols.size());
    std::vector<BracketSeries> all;
    auto name = [](const std::string& a, int i, const std::string& b, int j) {
        return "{" + a + "_" + std::to_string(i) + "," + b + "_" + std::to_string(j) + "}";
    };
    for (int a = 0; a < n; ++a)
        for (int j = 0; j < m; ++j) all.push_back({name("lambda", lim.rows[a], "phi", lim.cols[j]), {}, 0, 0});
    for (int a = 0; a < n; ++a)
        for (int c = a + 1; c < n; ++c) all.push_back({name("lambda", lim.rows[a], "lambda", lim.rows[c]), {}, 0, 0});
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) all.push_back({name("phi", lim.cols[i], "phi", lim.cols[j]), {}, 0, 0});
    for (double s : s_grid) {
        PiS pi = pi_s_in_coordinates(ctx, s, p);
        size_t k = 0;
        double sup = 0;
        auto push = [&](double dev) {
            dev = std::abs(dev);
            all[k++].deviation.push_back(dev);
            sup = std::max(sup, dev);
        };
        for (int a = 0; a < n; ++a)
            for (int j = 0; j < m; ++j) push(pi.lambda_phi[a][j] - lim.m(a, j).get_d());
        for (int a = 0; a < n; ++a)
            for (int c = a + 1; c < n; ++c) push(pi.lambda_lambda[a][c]);
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) push(pi.phi_phi[i][j]);
        rep.sup_deviation.push_back(sup);
    }
    auto fit = [&](const std::vector<double>& dev, int& used) {
        std::vector<double> xs, ys;
        for (size_t t = 0; t < s_grid.size(); ++t)
            if (dev[t] > kNoiseFloor) {
                xs.push_back(s_grid[t]);
                ys.push_back(std::log(dev[t]));
            }
        used = static_cast<int>(xs.size());
        return used >= 2 ? lsq_slope(xs, ys) : 0.0;
    };
    for (auto& b : all) {
        b.slope = fit(b.deviation, b.used);
        if (b.used >= 2) rep.brackets.push_back(b);
    }
    int used = 0;
    rep.sup_slope = fit(rep.sup_deviation, used);
    rep.inconclusive = rep.brackets.empty();
    rep.pass = !rep.inconclusive;
    for (const auto& b : rep.brackets)
        if (b.slope < 0.75 * rep.delta) rep.pass = false;
    return rep;
}

}  // namespace cc
