#include "crystalcone/symgroup.hpp"

#include <deque>
#include <map>

namespace cc {

namespace {

QMat unit(int n, int i, int j, const Q& v = 1) {
    QMat m(n, n);
    m(i, j) = v;
    return m;
}

// weights of the defining representation of A_n in omega coordinates
std::vector<Weight> type_a_weights(int r) {
    std::vector<Weight> w;
    for (int k = 0; k <= r; ++k) {
        Weight v(r);
        if (k < r) v[k] += 1;
        if (k > 0) v[k - 1] -= 1;
        w.push_back(v);
    }
    return w;
}

void fill_h(RepCarrier& c) {
    c.h.clear();
    for (int i = 0; i < c.datum.rank; ++i) c.h.push_back(commutator(c.e[i], c.f[i]));
}

void fill_contravariant(RepCarrier& c) {
    int n = c.dim;
    QVec G(n);
    std::vector<bool> known(n, false);
    G[0] = 1;
    known[0] = true;
    std::deque<int> q{0};
    while (!q.empty()) {
        int b = q.front();
        q.pop_front();
        for (int i = 0; i < c.datum.rank; ++i)
            for (int a = 0; a < n; ++a) {
                const Q& fab = c.f[i](a, b);
                if (sgn(fab) == 0 || known[a]) continue;
                // G_b (e_i)_{ba} = G_a (f_i)_{ab}
                G[a] = G[b] * c.e[i](b, a) / fab;
                known[a] = true;
                q.push_back(a);
            }
    }
    for (int a = 0; a < n; ++a)
        if (!known[a] || sgn(G[a]) <= 0) fail(ErrorKind::Internal, "carrier has no positive contravariant form");
    c.contravariant = G;
    c.depth.assign(n, -1);
    c.depth[0] = 0;
    std::deque<int> d{0};
    while (!d.empty()) {
        int b = d.front();
        d.pop_front();
        for (int i = 0; i < c.datum.rank; ++i)
            for (int a = 0; a < n; ++a)
                if (sgn(c.f[i](a, b)) != 0 && c.depth[a] < 0) {
                    c.depth[a] = c.depth[b] + 1;
                    d.push_back(a);
                }
    }
}

}  // namespace

RepCarrier rep_carrier(const CartanDatum& g) {
    RepCarrier c;
    c.datum = g;
    int r = g.rank;
    if (g.family == 'A') {
        int n = r + 1;
        c.dim = n;
        for (int i = 0; i < r; ++i) {
            c.e.push_back(unit(n, i, i + 1));
            c.f.push_back(unit(n, i + 1, i));
            c.wedge.push_back(i + 1);
        }
        c.weights = type_a_weights(r);
    } else if ((g.family == 'C' || g.family == 'B') && r == 2) {
        // basis eps1, eps2, -eps2, -eps1 of the symplectic 4-space; B2 is the same
        // module viewed as the spin representation with the labels exchanged.
        int n = 4;
        c.dim = n;
        QMat eshort = unit(n, 0, 1) + unit(n, 2, 3), fshort = unit(n, 1, 0) + unit(n, 3, 2);
        QMat elong = unit(n, 1, 2), flong = unit(n, 2, 1);
        std::vector<Weight> w = {{1, 0}, {-1, 1}, {1, -1}, {-1, 0}};
        if (g.family == 'C') {
            c.e = {eshort, elong};
            c.f = {fshort, flong};
            c.wedge = {1, 2};
            c.weights = w;
        } else {
            c.e = {elong, eshort};
            c.f = {flong, fshort};
            c.wedge = {2, 1};
            for (auto& x : w) std::swap(x[0], x[1]);
            c.weights = w;
        }
    } else if (g.family == 'G') {
        int n = 7;
        c.dim = n;
        QMat f1 = unit(n, 1, 0) + unit(n, 3, 2) + unit(n, 4, 3, 2) + unit(n, 6, 5);
        QMat e1 = unit(n, 0, 1) + unit(n, 2, 3, 2) + unit(n, 3, 4) + unit(n, 5, 6);
        QMat f2 = unit(n, 2, 1) + unit(n, 5, 4);
        QMat e2 = unit(n, 1, 2) + unit(n, 4, 5);
        std::vector<Weight> w = {{1, 0}, {-1, 1}, {2, -1}, {0, 0}, {-2, 1}, {1, -1}, {-1, 0}};
        if (g.cartan[0][1] == -3) {
            c.e = {e1, e2};
            c.f = {f1, f2};
            c.wedge = {1, 2};
        } else {
            // transposed labelling (the Langlands dual datum): long root first
            c.e = {e2, e1};
            c.f = {f2, f1};
            c.wedge = {2, 1};
            for (auto& x : w) std::swap(x[0], x[1]);
        }
        c.weights = w;
    } else {
        fail(ErrorKind::UnsupportedType, "no bundled representation for " + g.name());
    }
    fill_h(c);
    fill_contravariant(c);
    return c;
}

std::string verify_carrier(const RepCarrier& c) {
    const auto& A = c.datum.cartan;
    int r = c.datum.rank;
    for (int i = 0; i < r; ++i) {
        for (int v = 0; v < c.dim; ++v)
            if (c.h[i](v, v) != c.weights[v][i]) return "h_" + std::to_string(i + 1) + " disagrees with basis weights";
        for (int j = 0; j < r; ++j) {
            if (!(commutator(c.h[i], c.e[j]) == Q(A[i][j]) * c.e[j])) return "[h,e] relation fails";
            if (!(commutator(c.h[i], c.f[j]) == Q(-A[i][j]) * c.f[j])) return "[h,f] relation fails";
            if (i != j) {
                if (!is_zero(commutator(c.e[i], c.f[j]))) return "[e_i,f_j] != 0";
                QMat x = c.e[j], y = c.f[j];
                for (int k = 0; k < 1 - A[i][j]; ++k) {
                    x = commutator(c.e[i], x);
                    y = commutator(c.f[i], y);
                }
                if (!is_zero(x) || !is_zero(y)) return "Serre relation fails";
            }
        }
    }
    for (int i = 0; i < r; ++i) {
        Weight top(r);
        for (int k = 0; k < c.wedge[i]; ++k) top = add(top, c.weights[k]);
        if (top != fundamental_weight(c.datum, i)) return "wedge top weight is not omega_" + std::to_string(i + 1);
    }
    return "";
}

LMat lmat_constant(const QMat& m, int nvars) {
    LMat r(m.rows, LaurentPoly(nvars));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            if (sgn(m(i, j)) != 0) r(i, j) = LaurentPoly::constant(nvars, m(i, j));
    return r;
}

LMat operator*(const LMat& x, const LMat& y) {
    int n = x.n;
    int nv = x.a.empty() ? 0 : x.a[0].nvars();
    LMat r(n, LaurentPoly(nv));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (x(i, k).is_zero()) continue;
            for (int j = 0; j < n; ++j)
                if (!y(k, j).is_zero()) r(i, j) += x(i, k) * y(k, j);
        }
    return r;
}

LMat operator*(const QMat& x, const LMat& y) {
    int n = y.n;
    int nv = y.a.empty() ? 0 : y.a[0].nvars();
    LMat r(n, LaurentPoly(nv));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (sgn(x(i, k)) == 0) continue;
            for (int j = 0; j < n; ++j)
                if (!y(k, j).is_zero()) r(i, j) += x(i, k) * y(k, j);
        }
    return r;
}

LMat operator*(const LMat& x, const QMat& y) {
    int n = x.n;
    int nv = x.a.empty() ? 0 : x.a[0].nvars();
    LMat r(n, LaurentPoly(nv));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (x(i, k).is_zero()) continue;
            for (int j = 0; j < n; ++j)
                if (sgn(y(k, j)) != 0) r(i, j) += x(i, k) * y(k, j);
        }
    return r;
}

bool operator==(const LMat& x, const LMat& y) { return x.n == y.n && x.a == y.a; }

RMat to_rmat(const LMat& m) {
    RMat r;
    r.n = m.n;
    for (const auto& e : m.a) r.a.emplace_back(e);
    return r;
}

LMat to_lmat(const RMat& m) {
    LMat r;
    r.n = m.n;
    for (const auto& e : m.a) r.a.push_back(e.laurent());
    return r;
}

RMat operator*(const RMat& x, const RMat& y) {
    int n = x.n;
    RMat r;
    r.n = n;
    int nv = x.a.empty() ? 0 : x.a[0].nvars();
    r.a.assign(static_cast<size_t>(n) * n, RatFunc(LaurentPoly(nv)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            RatFunc s{LaurentPoly(nv)};
            for (int k = 0; k < n; ++k)
                if (!x(i, k).is_zero() && !y(k, j).is_zero()) s = s + x(i, k) * y(k, j);
            r(i, j) = s;
        }
    return r;
}

bool equals(const RMat& x, const RMat& y) {
    if (x.n != y.n) return false;
    for (size_t i = 0; i < x.a.size(); ++i)
        if (!x.a[i].equals(y.a[i])) return false;
    return true;
}

LMat monomial_substitute(const LMat& m, const std::vector<Exp>& rows, int new_nvars) {
    LMat r;
    r.n = m.n;
    for (const auto& e : m.a) r.a.push_back(e.monomial_substitute(rows, new_nvars));
    return r;
}

namespace {

template <class T>
T det_laplace(const std::vector<const T*>& cells, int k, const T& zero) {
    if (k == 1) return *cells[0];
    if (k == 2) return (*cells[0]) * (*cells[3]) - (*cells[1]) * (*cells[2]);
    T acc = zero;
    for (int j = 0; j < k; ++j) {
        std::vector<const T*> sub;
        sub.reserve(static_cast<size_t>(k - 1) * (k - 1));
        for (int r = 1; r < k; ++r)
            for (int c = 0; c < k; ++c)
                if (c != j) sub.push_back(cells[static_cast<size_t>(r) * k + c]);
        T m = det_laplace(sub, k - 1, zero);
        T term = (*cells[j]) * m;
        if (j % 2) acc = acc - term;
        else acc = acc + term;
    }
    return acc;
}

}  // namespace

LaurentPoly det(const LMat& m) {
    std::vector<const LaurentPoly*> cells;
    for (const auto& e : m.a) cells.push_back(&e);
    int nv = m.a.empty() ? 0 : m.a[0].nvars();
    return det_laplace(cells, m.n, LaurentPoly(nv));
}

QMat evaluate(const LMat& m, const QVec& x) {
    QMat r(m.n, m.n);
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) r(i, j) = m(i, j).evaluate(x);
    return r;
}

std::vector<std::complex<double>> evaluate(const LMat& m, const std::vector<std::complex<double>>& x) {
    std::vector<std::complex<double>> r;
    for (const auto& e : m.a) r.push_back(e.evaluate(x));
    return r;
}

QMat exp_nilpotent(const QMat& x, const Q& t) {
    int n = x.rows;
    QMat r = QMat::identity(n), p = QMat::identity(n);
    for (int k = 1; k <= n; ++k) {
        p = (t / Q(k)) * (p * x);
        if (is_zero(p)) break;
        r = r + p;
    }
    return r;
}

namespace {

LMat exp_var(const QMat& gen, int var_index, int nvars) {
    int n = gen.rows;
    LMat r = lmat_constant(QMat::identity(n), nvars);
    QMat p = QMat::identity(n);
    for (int k = 1; k <= n; ++k) {
        p = Q(1, k) * (p * gen);
        if (is_zero(p)) break;
        Exp e(nvars, 0);
        e[var_index] = k;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (sgn(p(i, j)) != 0) r(i, j).add_term(e, p(i, j));
    }
    return r;
}

}  // namespace

LMat elem_y(const RepCarrier& c, int i, int var_index, int nvars) { return exp_var(c.f.at(i), var_index, nvars); }
LMat elem_x(const RepCarrier& c, int i, int var_index, int nvars) { return exp_var(c.e.at(i), var_index, nvars); }

LMat torus_element(const RepCarrier& c, int first_var, int nvars) {
    std::vector<LaurentPoly> vals;
    for (int j = 0; j < c.datum.rank; ++j) vals.push_back(LaurentPoly::var(nvars, first_var + j));
    return torus_from_values(c, vals);
}

LMat torus_from_values(const RepCarrier& c, const std::vector<LaurentPoly>& values) {
    int nv = values.at(0).nvars();
    LMat r(c.dim, LaurentPoly(nv));
    for (int v = 0; v < c.dim; ++v) {
        LaurentPoly p = LaurentPoly::constant(nv, 1);
        for (int j = 0; j < c.datum.rank; ++j) {
            const Q& w = c.weights[v][j];
            if (!is_integer(w)) fail(ErrorKind::Internal, "non-integral carrier weight");
            long k = to_long(w.get_num());
            if (k) p = p * values[j].pow(static_cast<int>(k));
        }
        r(v, v) = p;
    }
    return r;
}

QMat sbar(const RepCarrier& c, int i) {
    QMat xm = exp_nilpotent(c.e.at(i), -1), y = exp_nilpotent(c.f.at(i), 1);
    return xm * y * xm;
}

QMat lift_sbar(const RepCarrier& c, const WeylWord& w) {
    check_word_letters(c.datum, w);
    QMat r = QMat::identity(c.dim);
    for (int i : w) r = r * sbar(c, i - 1);
    return r;
}

QMat lift_element(const RepCarrier& c, const QMat& w) { return lift_sbar(c, reduced_word(c.datum, w)); }

GaussFactors gauss_decompose(const RMat& m) {
    int n = m.n;
    int nv = m.a.empty() ? 0 : m.a[0].nvars();
    RatFunc zero{LaurentPoly(nv)}, one{LaurentPoly::constant(nv, 1)};
    RMat a = m;
    GaussFactors g;
    g.lower.n = g.diag.n = g.upper.n = n;
    g.lower.a.assign(static_cast<size_t>(n) * n, zero);
    g.diag.a.assign(static_cast<size_t>(n) * n, zero);
    g.upper.a.assign(static_cast<size_t>(n) * n, zero);
    for (int k = 0; k < n; ++k) {
        const RatFunc p = a(k, k);
        if (p.is_zero())
            fail(ErrorKind::NotDecomposable, "leading principal minor " + std::to_string(k + 1) + " vanishes");
        g.diag(k, k) = p;
        g.lower(k, k) = one;
        g.upper(k, k) = one;
        for (int j = k + 1; j < n; ++j) g.upper(k, j) = a(k, j) / p;
        for (int i = k + 1; i < n; ++i) g.lower(i, k) = a(i, k) / p;
        for (int i = k + 1; i < n; ++i) {
            if (g.lower(i, k).is_zero()) continue;
            for (int j = k + 1; j < n; ++j)
                if (!a(k, j).is_zero()) a(i, j) = a(i, j) - g.lower(i, k) * a(k, j);
        }
    }
    return g;
}

namespace {

LMat minor_block_product(const QMat& rows, const LMat& m, const QMat& cols, int k) {
    int n = m.n;
    int nv = m.a.empty() ? 0 : m.a[0].nvars();
    // T = M * cols[:, :k]
    std::vector<LaurentPoly> t(static_cast<size_t>(n) * k, LaurentPoly(nv));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (m(a, b).is_zero()) continue;
            for (int j = 0; j < k; ++j)
                if (sgn(cols(b, j)) != 0) t[static_cast<size_t>(a) * k + j] += m(a, b) * cols(b, j);
        }
    LMat r(k, LaurentPoly(nv));
    for (int i = 0; i < k; ++i)
        for (int a = 0; a < n; ++a) {
            if (sgn(rows(i, a)) == 0) continue;
            for (int j = 0; j < k; ++j) r(i, j) += rows(i, a) * t[static_cast<size_t>(a) * k + j];
        }
    return r;
}

}  // namespace

LaurentPoly generalized_minor(const RepCarrier& c, const QMat& u, const QMat& v, int i, const LMat& m) {
    if (i < 0 || i >= c.datum.rank) fail(ErrorKind::BadIndex, "fundamental index out of range");
    QMat uinv = inverse_or_throw(lift_element(c, u), "lift");
    QMat vb = lift_element(c, v);
    return det(minor_block_product(uinv, m, vb, c.wedge[i]));
}

LaurentPoly generalized_minor(const RepCarrier& c, const WeylWord& u, const WeylWord& v, int i, const LMat& m) {
    return generalized_minor(c, weyl_matrix(c.datum, u), weyl_matrix(c.datum, v), i, m);
}

LMat factorization_point(const RepCarrier& c, const WeylWord& word, bool include_h) {
    if (!is_reduced(c.datum, word)) fail(ErrorKind::NotReduced, "word " + to_string(word) + " is not reduced");
    int r = c.datum.rank, m = static_cast<int>(word.size());
    int off = include_h ? r : 0;
    int nv = off + m;
    LMat g = include_h ? torus_element(c, 0, nv) : lmat_constant(QMat::identity(c.dim), nv);
    for (int k = 0; k < m; ++k) g = g * elem_y(c, word[k] - 1, off + k, nv);
    return g;
}

RMat theta(const RepCarrier& c, const RMat& m) {
    // theta(g) = S G^{-1} (g^{-1})^T G S on the carrier; here g is upper triangular
    // or general: compute the inverse through the Gauss factors.
    int n = m.n;
    int nv = m.a.empty() ? 0 : m.a[0].nvars();
    GaussFactors gf = gauss_decompose(m);
    RatFunc zero{LaurentPoly(nv)};
    // inverse of unipotent upper U by back substitution, same for lower L
    auto unipotent_inverse_upper = [&](const RMat& U) {
        RMat inv;
        inv.n = n;
        inv.a.assign(static_cast<size_t>(n) * n, zero);
        for (int i = 0; i < n; ++i) inv(i, i) = RatFunc(LaurentPoly::constant(nv, 1));
        for (int j = 0; j < n; ++j)
            for (int i = j - 1; i >= 0; --i) {
                RatFunc s = zero;
                for (int k = i + 1; k <= j; ++k)
                    if (!U(i, k).is_zero() && !inv(k, j).is_zero()) s = s + U(i, k) * inv(k, j);
                inv(i, j) = -s;
            }
        return inv;
    };
    auto transpose_r = [&](const RMat& X) {
        RMat t = X;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) t(i, j) = X(j, i);
        return t;
    };
    RMat Uinv = unipotent_inverse_upper(gf.upper);
    RMat Linv = transpose_r(unipotent_inverse_upper(transpose_r(gf.lower)));
    RMat Dinv = gf.diag;
    for (int k = 0; k < n; ++k) Dinv(k, k) = RatFunc(LaurentPoly::constant(nv, 1)) / gf.diag(k, k);
    // g^{-1} = U^{-1} D^{-1} L^{-1}; transpose
    RMat ginvT = transpose_r(Uinv * Dinv * Linv);
    RMat out = ginvT;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (ginvT(i, j).is_zero()) continue;
            Q s = ((c.depth[i] + c.depth[j]) % 2 == 0 ? Q(1) : Q(-1)) * c.contravariant[j] / c.contravariant[i];
            out(i, j) = ginvT(i, j) * RatFunc(LaurentPoly::constant(nv, s));
        }
    return out;
}

RMat twist(const RepCarrier& c, const RMat& m) {
    int nv = m.a.empty() ? 0 : m.a[0].nvars();
    QMat w0inv = inverse_or_throw(lift_sbar(c, longest_word(c.datum)), "w0 lift");
    RMat g = to_rmat(lmat_constant(w0inv, nv)) * m;
    GaussFactors gf = gauss_decompose(g);
    RMat b = gf.diag * gf.upper;  // [w0bar^{-1} x]_{>=0}
    return theta(c, b);
}

LMat twist(const RepCarrier& c, const LMat& m) { return to_lmat(twist(c, to_rmat(m))); }

void require_positive(const LaurentPoly& p, const std::string& what) {
    if (!p.all_coefficients_positive())
        fail(ErrorKind::PositivityViolation, what + " has a non-positive coefficient: " + p.to_string());
}

namespace {

struct W0Data {
    QMat w0;
    std::vector<QMat> s, w0s;
};

W0Data w0_data(const CartanDatum& g) {
    W0Data d;
    d.w0 = weyl_matrix(g, longest_word(g));
    for (int i = 0; i < g.rank; ++i) {
        d.s.push_back(weyl_matrix(g, {i + 1}));
        d.w0s.push_back(d.w0 * d.s.back());
    }
    return d;
}

LaurentPoly frozen_inverse(const LaurentPoly& den, const std::string& label) {
    if (!den.is_monomial())
        fail(ErrorKind::ChartUnsupported, label + " is not a monomial in this chart: " + den.to_string());
    return den.monomial_inverse();
}

}  // namespace

LaurentPoly bk_correction(const RepCarrier& c, const LMat& m) {
    const auto& g = c.datum;
    W0Data d = w0_data(g);
    QMat id = QMat::identity(g.rank);
    int nv = m.a.empty() ? 0 : m.a[0].nvars();
    LaurentPoly out(nv);
    for (int i = 0; i < g.rank; ++i) {
        LaurentPoly den = generalized_minor(c, d.w0, id, i, m);
        LaurentPoly num = generalized_minor(c, d.w0s[i], id, i, m);
        out += num * frozen_inverse(den, "Delta_{w0 omega_i, omega_i}");
    }
    return out;
}

LaurentPoly string_potential(const RepCarrier& c, const LMat& m) {
    const auto& g = c.datum;
    W0Data d = w0_data(g);
    int nv = m.a.empty() ? 0 : m.a[0].nvars();
    LaurentPoly out(nv);
    for (int i = 0; i < g.rank; ++i) out += generalized_minor(c, d.w0, d.s[i], i, m);
    require_positive(out, "Phi_L");
    return out;
}

LaurentPoly bk_potential(const RepCarrier& c, const LMat& m) {
    const auto& g = c.datum;
    W0Data d = w0_data(g);
    QMat id = QMat::identity(g.rank);
    int nv = m.a.empty() ? 0 : m.a[0].nvars();
    LaurentPoly out(nv);
    for (int i = 0; i < g.rank; ++i) {
        LaurentPoly den = generalized_minor(c, d.w0, id, i, m);
        LaurentPoly num = generalized_minor(c, d.w0, d.s[i], i, m) + generalized_minor(c, d.w0s[i], id, i, m);
        out += num * frozen_inverse(den, "Delta_{w0 omega_i, omega_i}");
    }
    require_positive(out, "Phi_BK");
    return out;
}

}  // namespace cc
