#include "crystalcone/linalg.hpp"

#include <sstream>
#include <utility>

namespace cc {

QMat QMat::identity(int n) {
    QMat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

QMat QMat::from_ints(const std::vector<std::vector<long>>& v) {
    int r = static_cast<int>(v.size());
    int c = r ? static_cast<int>(v[0].size()) : 0;
    QMat m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m(i, j) = v[i][j];
    return m;
}

QMat QMat::diag(const QVec& d) {
    int n = static_cast<int>(d.size());
    QMat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = d[i];
    return m;
}

QVec QMat::row(int i) const { return QVec(a.begin() + static_cast<long>(i) * cols, a.begin() + static_cast<long>(i + 1) * cols); }

QVec QMat::col(int j) const {
    QVec v(rows);
    for (int i = 0; i < rows; ++i) v[i] = (*this)(i, j);
    return v;
}

QMat operator*(const QMat& x, const QMat& y) {
    if (x.cols != y.rows) fail(ErrorKind::Internal, "matrix shape mismatch");
    QMat r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const Q& xik = x(i, k);
            if (sgn(xik) == 0) continue;
            for (int j = 0; j < y.cols; ++j) r(i, j) += xik * y(k, j);
        }
    return r;
}

QMat operator+(const QMat& x, const QMat& y) {
    QMat r = x;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] += y.a[i];
    return r;
}

QMat operator-(const QMat& x, const QMat& y) {
    QMat r = x;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] -= y.a[i];
    return r;
}

QMat operator*(const Q& s, const QMat& x) {
    QMat r = x;
    for (auto& e : r.a) e *= s;
    return r;
}

QVec operator*(const QMat& x, const QVec& v) {
    if (x.cols != static_cast<int>(v.size())) fail(ErrorKind::Internal, "matrix-vector shape mismatch");
    QVec r(x.rows);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) r[i] += x(i, j) * v[j];
    return r;
}

QMat transpose(const QMat& x) {
    QMat r(x.cols, x.rows);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) r(j, i) = x(i, j);
    return r;
}

QMat commutator(const QMat& x, const QMat& y) { return x * y - y * x; }

Q det(QMat m) {
    int n = m.rows;
    Q d = 1;
    for (int c = 0; c < n; ++c) {
        int p = c;
        while (p < n && sgn(m(p, c)) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            for (int j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
            d = -d;
        }
        d *= m(c, c);
        for (int r = c + 1; r < n; ++r) {
            if (sgn(m(r, c)) == 0) continue;
            Q f = m(r, c) / m(c, c);
            for (int j = c; j < n; ++j) m(r, j) -= f * m(c, j);
        }
    }
    return d;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(QMat& m) {
    std::vector<int> piv;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int p = r;
        while (p < m.rows && sgn(m(p, c)) == 0) ++p;
        if (p == m.rows) continue;
        if (p != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m(p, j), m(r, j));
        Q inv = 1 / m(r, c);
        for (int j = 0; j < m.cols; ++j) m(r, j) *= inv;
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || sgn(m(i, c)) == 0) continue;
            Q f = m(i, c);
            for (int j = 0; j < m.cols; ++j) m(i, j) -= f * m(r, j);
        }
        piv.push_back(c);
        ++r;
    }
    return piv;
}

}  // namespace

int rank(QMat m) { return static_cast<int>(rref(m).size()); }

std::optional<QMat> inverse(const QMat& m) {
    int n = m.rows;
    QMat aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    auto piv = rref(aug);
    if (static_cast<int>(piv.size()) < n || piv[n - 1] != n - 1) return std::nullopt;
    QMat inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

QMat inverse_or_throw(const QMat& m, const char* what) {
    auto inv = inverse(m);
    if (!inv) fail(ErrorKind::Internal, std::string("singular matrix: ") + what);
    return *inv;
}

std::optional<QVec> solve(const QMat& m, const QVec& b) {
    QMat aug(m.rows, m.cols + 1);
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) aug(i, j) = m(i, j);
        aug(i, m.cols) = b[i];
    }
    auto piv = rref(aug);
    if (!piv.empty() && piv.back() == m.cols) return std::nullopt;
    QVec x(m.cols);
    for (size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug(static_cast<int>(r), m.cols);
    return x;
}

std::vector<QVec> kernel(const QMat& m) {
    QMat e = m;
    auto piv = rref(e);
    std::vector<bool> is_piv(m.cols, false);
    for (int p : piv) is_piv[p] = true;
    std::vector<QVec> basis;
    for (int f = 0; f < m.cols; ++f) {
        if (is_piv[f]) continue;
        QVec v(m.cols);
        v[f] = 1;
        for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -e(static_cast<int>(r), f);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool is_integral(const QMat& m) {
    for (const auto& x : m.a)
        if (!is_integer(x)) return false;
    return true;
}

bool is_zero(const QMat& m) {
    for (const auto& x : m.a)
        if (sgn(x) != 0) return false;
    return true;
}

std::vector<Z> smith_invariants(const QMat& m) {
    if (!is_integral(m)) fail(ErrorKind::Internal, "smith form of non-integral matrix");
    int R = m.rows, C = m.cols;
    std::vector<std::vector<Z>> a(R, std::vector<Z>(C));
    for (int i = 0; i < R; ++i)
        for (int j = 0; j < C; ++j) a[i][j] = m(i, j).get_num();
    std::vector<Z> inv;
    int t = 0;
    while (t < R && t < C) {
        // pick smallest nonzero |entry| in the remaining block as pivot
        int pi = -1, pj = -1;
        for (int i = t; i < R; ++i)
            for (int j = t; j < C; ++j)
                if (a[i][j] != 0 && (pi < 0 || abs(a[i][j]) < abs(a[pi][pj]))) pi = i, pj = j;
        if (pi < 0) break;
        std::swap(a[t], a[pi]);
        for (int i = 0; i < R; ++i) std::swap(a[i][t], a[i][pj]);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = t + 1; i < R; ++i) {
                if (a[i][t] == 0) continue;
                Z q = a[i][t] / a[t][t];
                for (int j = t; j < C; ++j) a[i][j] -= q * a[t][j];
                if (a[i][t] != 0) {
                    std::swap(a[t], a[i]);
                    clean = false;
                }
            }
            for (int j = t + 1; j < C; ++j) {
                if (a[t][j] == 0) continue;
                Z q = a[t][j] / a[t][t];
                for (int i = t; i < R; ++i) a[i][j] -= q * a[i][t];
                if (a[t][j] != 0) {
                    for (int i = 0; i < R; ++i) std::swap(a[i][t], a[i][j]);
                    clean = false;
                }
            }
            if (clean) {
                // divisibility condition: pivot must divide the rest of the block
                for (int i = t + 1; i < R && clean; ++i)
                    for (int j = t + 1; j < C; ++j)
                        if (a[i][j] % a[t][t] != 0) {
                            for (int k = t; k < C; ++k) a[t][k] += a[i][k];
                            clean = false;
                            break;
                        }
            }
        }
        inv.push_back(abs(a[t][t]));
        ++t;
    }
    return inv;
}

Q dot(const QVec& x, const QVec& y) {
    Q s = 0;
    for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

QVec add(const QVec& x, const QVec& y) {
    QVec r = x;
    for (size_t i = 0; i < r.size(); ++i) r[i] += y[i];
    return r;
}

QVec sub(const QVec& x, const QVec& y) {
    QVec r = x;
    for (size_t i = 0; i < r.size(); ++i) r[i] -= y[i];
    return r;
}

QVec scale(const Q& s, const QVec& x) {
    QVec r = x;
    for (auto& e : r) e *= s;
    return r;
}

std::string to_string(const QMat& m) {
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < m.rows; ++i) {
        os << (i ? "," : "") << '[';
        for (int j = 0; j < m.cols; ++j) os << (j ? "," : "") << m(i, j).get_str();
        os << ']';
    }
    os << ']';
    return os.str();
}

}  // namespace cc
