#include "crystalcone/poisson.hpp"

#include "crystalcone/charts.hpp"

namespace cc {

namespace {

// (|z_i|_1, |z_j|_1) - (|z_i|_2, |z_j|_2)
Q degree_pairing(const Seed& s, int p, int q) {
    const auto& g = s.datum;
    return bilinear_weights(g, s.degrees[p].first, s.degrees[q].first) -
           bilinear_weights(g, s.degrees[p].second, s.degrees[q].second);
}

Weight omega(const CartanDatum& g, int letter) { return fundamental_weight(g, letter - 1); }

}  // namespace

CCoefficients c_coefficients(const Seed& s) {
    if (s.degrees.empty() || !s.history.empty())
        fail(ErrorKind::ChartUnsupported, "log-canonical coefficients need the initial seed of a word");
    int n = s.size();
    CCoefficients c{QMat(n, n), QMat(n, n)};
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
            Q v = degree_pairing(s, p, q) / 2;
            c.zzbar(p, q) = v;
            // positions are ordered like the indices, so p < q is i < j
            if (p < q) c.zz(p, q) = -v;
            else if (p > q) c.zz(p, q) = v;
        }
    return c;
}

QMat PTBracketMatrix::full() const {
    int n = static_cast<int>(rows.size()), m = static_cast<int>(cols.size());
    QMat f(n + m, n + m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) {
            f(i, n + j) = this->m(i, j);
            f(n + j, i) = -this->m(i, j);
        }
    return f;
}

PTBracketMatrix pt_bracket_matrix(const Seed& s) {
    CCoefficients c = c_coefficients(s);
    PTBracketMatrix b;
    b.rows = s.index;
    for (int k : s.index)
        if (k > 0) b.cols.push_back(k);
    int m = static_cast<int>(b.cols.size());
    b.m = QMat(s.size(), m);
    for (int p = 0; p < s.size(); ++p)
        for (int j = 0; j < m; ++j) {
            int q = s.pos(b.cols[j]);
            // sqrt(-1) (c_{z,zbar} - c_{z,z}) with both coefficients in sqrt(-1) Q
            b.m(p, j) = c.zz(p, q) - c.zzbar(p, q);
        }
    return b;
}

PTBracketMatrix special_chart_brackets(const CartanDatum& g, const WeylWord& word) {
    check_word_letters(g, word);
    int r = g.rank, m = static_cast<int>(word.size());
    PTBracketMatrix b;
    for (int k = -r; k <= m; ++k)
        if (k != 0) b.rows.push_back(k);
    for (int k = 1; k <= m; ++k) b.cols.push_back(k);
    b.m = QMat(r + m, m);
    for (int p = 0; p < r + m; ++p) {
        int j = b.rows[p];
        Weight wj = omega(g, j < 0 ? -j : word[j - 1]);
        for (int k = 1; k <= m; ++k) {
            if (j >= k) continue;
            Weight wk = omega(g, word[k - 1]);
            // s_{i_{max(j,0)+1}} ... s_{i_k} omega_{i_k}
            WeylWord piece(word.begin() + std::max(j, 0), word.begin() + k);
            b.m(p, k - 1) = bilinear_weights(g, wj, wk) - bilinear_weights(g, wj, weyl_act(g, piece, wk));
        }
    }
    return b;
}

DarbouxChange triangular_normalization(const CartanDatum& g, const WeylWord& word) {
    PTBracketMatrix sp = special_chart_brackets(g, word);
    int r = g.rank, m = static_cast<int>(word.size());
    DarbouxChange d;
    d.B = QMat(m, m);
    d.X = QMat(m, m);
    for (int j = 1; j <= m; ++j) {
        int prev = -word[j - 1];
        for (int l = j - 1; l >= 1; --l)
            if (word[l - 1] == word[j - 1]) {
                prev = l;
                break;
            }
        d.j_minus.push_back(prev);
        int row = prev < 0 ? prev + r : prev + r - 1;
        for (int k = 0; k < m; ++k) d.B(j - 1, k) = sp.m(row, k);
        d.X(j - 1, j - 1) = g.d[word[j - 1] - 1];
    }
    d.Y = d.X * d.B;
    for (int i = 0; i < m; ++i)
        for (int k = 0; k < m; ++k) {
            const Q& y = d.Y(i, k);
            if (!is_integer(y) || sgn(y) < 0 || (k < i && sgn(y) != 0) || (k == i && y != 1))
                fail(ErrorKind::Internal, "Y = XB is not upper unitriangular with nonnegative integer entries");
        }
    d.C_phi = transpose(inverse_or_throw(d.Y, "Y"));
    if (!is_integral(d.C_phi)) fail(ErrorKind::Internal, "C_phi is not integral");
    return d;
}

DarbouxCoordinates darboux_coordinates(const CartanDatum& g, const WeylWord& word) {
    DarbouxCoordinates out;
    out.change = triangular_normalization(g, word);
    int r = g.rank, m = static_cast<int>(word.size()), n = r + m;
    Chart ch = make_chart(g, word, ChartKind::Cluster);
    out.hw = ch.hw;
    auto col = [&](int k) { return k < 0 ? k + r : k + r - 1; };
    out.lambda_to_x = QMat(m + r, n);
    for (int j = 0; j < m; ++j) out.lambda_to_x(j, col(out.change.j_minus[j])) = out.change.X(j, j);
    for (int i = 0; i < r; ++i)
        for (int v = 0; v < n; ++v) out.lambda_to_x(m + i, v) = ch.hw(i, v);
    if (!inverse(out.lambda_to_x)) fail(ErrorKind::Internal, "Darboux coordinates are not a coordinate system");

    QMat T(n + m, n + m);
    for (int i = 0; i < n; ++i)
        for (int v = 0; v < n; ++v) T(i, v) = out.lambda_to_x(i, v);
    for (int i = 0; i < m; ++i)
        for (int k = 0; k < m; ++k) T(n + i, n + k) = out.change.C_phi(i, k);
    QMat P = special_chart_brackets(g, word).full();
    out.bracket = T * P * transpose(T);

    QMat canon(n + m, n + m);
    for (int j = 0; j < m; ++j) {
        canon(j, n + j) = 1;
        canon(n + j, j) = -1;
    }
    out.canonical = out.bracket == canon;
    return out;
}

bool hw_components_are_casimirs(const CartanDatum& g, const WeylWord& word) {
    Chart ch = make_chart(g, word, ChartKind::Cluster);
    PTBracketMatrix b = pt_bracket_matrix(seed_from_word(g, word));
    QMat z = ch.hw * b.m;
    for (int i = 0; i < z.rows; ++i)
        for (int j = 0; j < z.cols; ++j)
            if (sgn(z(i, j)) != 0) return false;
    return true;
}

}  // namespace cc
