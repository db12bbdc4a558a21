#include "crystalcone/lp.hpp"

#include <sstream>

namespace cc {

bool HSystem::contains(const QVec& x) const {
    for (const auto& h : ge)
        if (sgn(h.eval(x)) < 0) return false;
    for (const auto& e : eq)
        if (sgn(e.eval(x)) != 0) return false;
    return true;
}

bool HSystem::strictly_contains(const QVec& x) const {
    for (const auto& h : ge)
        if (sgn(h.eval(x)) <= 0) return false;
    for (const auto& e : eq)
        if (sgn(e.eval(x)) != 0) return false;
    return true;
}

const char* lp_status_name(LPStatus s) {
    switch (s) {
        case LPStatus::Optimal: return "optimal";
        case LPStatus::Infeasible: return "infeasible";
        case LPStatus::Unbounded: return "unbounded";
    }
    return "?";
}

namespace {

// maximize c.x subject to A x = b, x >= 0 (dense tableau).
struct Tableau {
    int m, n;  // rows, structural columns (artificials live at n..n+m-1)
    std::vector<QVec> T;  // m+1 rows of n+m+1 entries; last row holds reduced costs
    std::vector<int> basis;
    std::vector<bool> active_row;

    Q& rhs(int i) { return T[i][n + m]; }

    void pivot(int r, int col) {
        Q p = T[r][col];
        for (auto& v : T[r]) v /= p;
        for (int i = 0; i <= m; ++i) {
            if (i == r || sgn(T[i][col]) == 0) continue;
            Q f = T[i][col];
            for (int j = 0; j <= n + m; ++j)
                if (sgn(T[r][j]) != 0) T[i][j] -= f * T[r][j];
        }
        basis[r] = col;
    }

    // Bland's rule; columns >= limit are never entered. Returns false if unbounded.
    bool run(int limit) {
        for (;;) {
            int enter = -1;
            for (int j = 0; j < limit; ++j)
                if (sgn(T[m][j]) < 0) {
                    enter = j;
                    break;
                }
            if (enter < 0) return true;
            int leave = -1;
            Q best;
            for (int i = 0; i < m; ++i) {
                if (!active_row[i] || sgn(T[i][enter]) <= 0) continue;
                Q ratio = T[i][n + m] / T[i][enter];
                if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave < 0) return false;
            pivot(leave, enter);
        }
    }
};

LPResult simplex_standard(const std::vector<QVec>& A, const QVec& b, const QVec& c) {
    int m = static_cast<int>(A.size());
    int n = static_cast<int>(c.size());
    Tableau t{m, n, {}, std::vector<int>(m), std::vector<bool>(m, true)};
    t.T.assign(m + 1, QVec(n + m + 1));
    for (int i = 0; i < m; ++i) {
        int s = sgn(b[i]) < 0 ? -1 : 1;
        for (int j = 0; j < n; ++j) t.T[i][j] = s * A[i][j];
        t.T[i][n + i] = 1;
        t.T[i][n + m] = s * b[i];
        t.basis[i] = n + i;
    }
    // phase 1: maximize -sum(artificials)
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < m; ++i) t.T[m][j] -= t.T[i][j];
    for (int i = 0; i < m; ++i) t.T[m][n + m] -= t.T[i][n + m];
    t.run(n + m);
    LPResult res;
    if (sgn(t.T[m][n + m]) != 0) {
        res.status = LPStatus::Infeasible;
        return res;
    }
    for (int i = 0; i < m; ++i) {
        if (t.basis[i] < n) continue;
        int col = -1;
        for (int j = 0; j < n; ++j)
            if (sgn(t.T[i][j]) != 0) {
                col = j;
                break;
            }
        if (col >= 0) t.pivot(i, col);
        else t.active_row[i] = false;  // redundant equation
    }
    // phase 2
    for (int j = 0; j <= n + m; ++j) t.T[m][j] = 0;
    for (int j = 0; j < n; ++j) t.T[m][j] = -c[j];
    for (int i = 0; i < m; ++i) {
        if (!t.active_row[i]) continue;
        int bcol = t.basis[i];
        if (bcol >= n || sgn(c[bcol]) == 0) continue;
        for (int j = 0; j <= n + m; ++j) t.T[m][j] += c[bcol] * t.T[i][j];
    }
    if (!t.run(n)) {
        res.status = LPStatus::Unbounded;
        return res;
    }
    res.status = LPStatus::Optimal;
    res.x.assign(n, Q(0));
    for (int i = 0; i < m; ++i)
        if (t.active_row[i] && t.basis[i] < n) res.x[t.basis[i]] = t.T[i][n + m];
    res.value = t.T[m][n + m];
    return res;
}

}  // namespace

LPResult lp_optimize(const HSystem& s, const QVec& objective, bool maximize) {
    // x = p - q, slack per inequality: a.(p-q) - sl = -c
    int d = s.dim, g = static_cast<int>(s.ge.size());
    int n = 2 * d + g;
    std::vector<QVec> A;
    QVec b;
    for (int i = 0; i < g; ++i) {
        QVec row(n);
        for (int j = 0; j < d; ++j) {
            row[j] = s.ge[i].a[j];
            row[d + j] = -s.ge[i].a[j];
        }
        row[2 * d + i] = -1;
        A.push_back(row);
        b.push_back(-s.ge[i].c);
    }
    for (const auto& e : s.eq) {
        QVec row(n);
        for (int j = 0; j < d; ++j) {
            row[j] = e.a[j];
            row[d + j] = -e.a[j];
        }
        A.push_back(row);
        b.push_back(-e.c);
    }
    QVec c(n);
    for (int j = 0; j < d; ++j) {
        Q v = maximize ? objective[j] : -objective[j];
        c[j] = v;
        c[d + j] = -v;
    }
    LPResult r = simplex_standard(A, b, c);
    if (r.status != LPStatus::Optimal) return r;
    LPResult out;
    out.status = LPStatus::Optimal;
    out.x.assign(d, Q(0));
    for (int j = 0; j < d; ++j) out.x[j] = r.x[j] - r.x[d + j];
    out.value = dot(objective, out.x);
    return out;
}

std::optional<FarkasCertificate> infeasibility_certificate(const HSystem& s) {
    int g = static_cast<int>(s.ge.size()), e = static_cast<int>(s.eq.size()), d = s.dim;
    // variables y (g, >= 0), z+ (e), z- (e); constraints sum y a + sum z e = 0 and
    // sum y c + sum z f = -1
    int n = g + 2 * e;
    std::vector<QVec> A;
    QVec b;
    for (int j = 0; j < d; ++j) {
        QVec row(n);
        for (int i = 0; i < g; ++i) row[i] = s.ge[i].a[j];
        for (int i = 0; i < e; ++i) {
            row[g + i] = s.eq[i].a[j];
            row[g + e + i] = -s.eq[i].a[j];
        }
        A.push_back(row);
        b.push_back(0);
    }
    QVec row(n);
    for (int i = 0; i < g; ++i) row[i] = s.ge[i].c;
    for (int i = 0; i < e; ++i) {
        row[g + i] = s.eq[i].c;
        row[g + e + i] = -s.eq[i].c;
    }
    A.push_back(row);
    b.push_back(-1);
    LPResult r = simplex_standard(A, b, QVec(n));
    if (r.status != LPStatus::Optimal) return std::nullopt;
    FarkasCertificate f;
    f.y.assign(r.x.begin(), r.x.begin() + g);
    for (int i = 0; i < e; ++i) f.z.push_back(r.x[g + i] - r.x[g + e + i]);
    f.value = -1;
    if (!verify_farkas(s, f)) fail(ErrorKind::Internal, "Farkas certificate failed verification");
    return f;
}

bool verify_farkas(const HSystem& s, const FarkasCertificate& f) {
    if (f.y.size() != s.ge.size() || f.z.size() != s.eq.size()) return false;
    QVec comb(s.dim);
    Q val = 0;
    for (size_t i = 0; i < s.ge.size(); ++i) {
        if (sgn(f.y[i]) < 0) return false;
        comb = add(comb, scale(f.y[i], s.ge[i].a));
        val += f.y[i] * s.ge[i].c;
    }
    for (size_t i = 0; i < s.eq.size(); ++i) {
        comb = add(comb, scale(f.z[i], s.eq[i].a));
        val += f.z[i] * s.eq[i].c;
    }
    for (const auto& v : comb)
        if (sgn(v) != 0) return false;
    return sgn(val) < 0 && val == f.value;
}

bool implies(const HSystem& s, const Affine& h) {
    LPResult r = lp_optimize(s, h.a, false);
    if (r.status == LPStatus::Infeasible) return true;
    if (r.status == LPStatus::Unbounded) return false;
    return sgn(r.value + h.c) >= 0;
}

InteriorPoint chebyshev_like_point(const HSystem& s) {
    // maximize t subject to ge_i(x) - t >= 0, t <= 1
    HSystem t;
    t.dim = s.dim + 1;
    for (const auto& h : s.ge) {
        Affine a{h.a, h.c};
        a.a.push_back(-1);
        t.ge.push_back(a);
    }
    QVec cap(t.dim);
    cap[s.dim] = -1;
    t.ge.push_back({cap, 1});
    for (const auto& e : s.eq) {
        Affine a{e.a, e.c};
        a.a.push_back(0);
        t.eq.push_back(a);
    }
    QVec obj(t.dim);
    obj[s.dim] = 1;
    LPResult r = lp_optimize(t, obj, true);
    InteriorPoint ip;
    if (r.status != LPStatus::Optimal) return ip;
    ip.feasible = true;
    ip.x.assign(r.x.begin(), r.x.begin() + s.dim);
    ip.slack = r.x[s.dim];
    return ip;
}

std::string to_string(const Affine& h, const std::vector<std::string>& names) {
    std::ostringstream os;
    bool first = true;
    for (size_t j = 0; j < h.a.size(); ++j) {
        if (sgn(h.a[j]) == 0) continue;
        std::string nm = j < names.size() ? names[j] : "x" + std::to_string(j + 1);
        Q v = h.a[j];
        if (!first) os << (sgn(v) > 0 ? " + " : " - ");
        else if (sgn(v) < 0) os << "-";
        Q av = abs(v);
        if (av != 1) os << to_string(av) << "*";
        os << nm;
        first = false;
    }
    if (sgn(h.c) != 0 || first) {
        if (first) os << to_string(h.c);
        else os << (sgn(h.c) > 0 ? " + " : " - ") << to_string(abs(h.c));
    }
    return os.str();
}

}  // namespace cc
