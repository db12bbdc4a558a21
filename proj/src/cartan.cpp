#include "crystalcone/cartan.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace cc {

QMat CartanDatum::cartan_matrix() const {
    QMat m(rank, rank);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) m(i, j) = cartan[i][j];
    return m;
}

QMat CartanDatum::cartan_inverse() const { return inverse_or_throw(cartan_matrix(), "Cartan matrix"); }

namespace {

std::vector<int> minimal_symmetrizer(const std::vector<std::vector<int>>& A) {
    int r = static_cast<int>(A.size());
    QVec d(r);
    std::vector<bool> seen(r, false);
    for (int s = 0; s < r; ++s) {
        if (seen[s]) continue;
        d[s] = 1;
        seen[s] = true;
        std::deque<int> q{s};
        while (!q.empty()) {
            int i = q.front();
            q.pop_front();
            for (int j = 0; j < r; ++j) {
                if (i == j || A[i][j] == 0) continue;
                // A[i][j] d[j] = A[j][i] d[i]
                Q dj = d[i] * Q(A[j][i]) / Q(A[i][j]);
                if (!seen[j]) {
                    d[j] = dj;
                    seen[j] = true;
                    q.push_back(j);
                } else if (d[j] != dj) {
                    fail(ErrorKind::UnsupportedType, "Cartan matrix is not symmetrizable");
                }
            }
        }
    }
    Z l = lcm_denominators(d);
    std::vector<Z> zs;
    for (auto& x : d) zs.push_back(Q(x * l).get_num());
    Z g = gcd_vec(zs);
    std::vector<int> out;
    for (auto& z : zs) out.push_back(static_cast<int>(to_long(z / g)));
    return out;
}

}  // namespace

CartanDatum build_cartan(char family, int rank) {
    CartanDatum g;
    g.family = family;
    g.rank = rank;
    if (rank < 1) fail(ErrorKind::UnsupportedType, "rank must be positive");
    std::vector<std::vector<int>> A(rank, std::vector<int>(rank, 0));
    for (int i = 0; i < rank; ++i) A[i][i] = 2;
    auto chain = [&](int upto) {
        for (int i = 0; i + 1 < upto; ++i) A[i][i + 1] = A[i + 1][i] = -1;
    };
    switch (family) {
        case 'A':
            chain(rank);
            break;
        case 'B':  // alpha_n short
            if (rank < 2) fail(ErrorKind::UnsupportedType, "B needs rank >= 2");
            chain(rank);
            A[rank - 1][rank - 2] = -2;
            break;
        case 'C':  // alpha_n long
            if (rank < 2) fail(ErrorKind::UnsupportedType, "C needs rank >= 2");
            chain(rank);
            A[rank - 2][rank - 1] = -2;
            break;
        case 'D':
            if (rank < 4) fail(ErrorKind::UnsupportedType, "D needs rank >= 4");
            chain(rank - 1);
            A[rank - 3][rank - 1] = A[rank - 1][rank - 3] = -1;
            break;
        case 'G':  // alpha_1 short
            if (rank != 2) fail(ErrorKind::UnsupportedType, "G exists only in rank 2");
            A[0][1] = -3;
            A[1][0] = -1;
            break;
        default:
            fail(ErrorKind::UnsupportedType, std::string("unknown family ") + family);
    }
    g.cartan = A;
    g.d = minimal_symmetrizer(A);
    return g;
}

CartanDatum parse_type(const std::string& s) {
    if (s.size() < 2) fail(ErrorKind::UnsupportedType, "bad type '" + s + "'");
    char fam = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    int rank = 0;
    for (size_t i = 1; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) fail(ErrorKind::UnsupportedType, "bad type '" + s + "'");
        rank = rank * 10 + (s[i] - '0');
        if (rank > 64) fail(ErrorKind::UnsupportedType, "rank too large");
    }
    return build_cartan(fam, rank);
}

CartanDatum langlands_dual(const CartanDatum& g) {
    CartanDatum h = g;
    for (int i = 0; i < g.rank; ++i)
        for (int j = 0; j < g.rank; ++j) h.cartan[i][j] = g.cartan[j][i];
    if (g.family == 'B') h.family = 'C';
    else if (g.family == 'C') h.family = 'B';
    h.d = minimal_symmetrizer(h.cartan);
    return h;
}

void check_word_letters(const CartanDatum& g, const WeylWord& w) {
    for (int i : w)
        if (i < 1 || i > g.rank)
            fail(ErrorKind::BadIndex, "letter " + std::to_string(i) + " outside [1," + std::to_string(g.rank) + "]");
}

Weight simple_root(const CartanDatum& g, int i) {
    Weight a(g.rank);
    for (int k = 0; k < g.rank; ++k) a[k] = g.cartan[k][i];
    return a;
}

Weight fundamental_weight(const CartanDatum& g, int i) {
    Weight w(g.rank);
    w.at(i) = 1;
    return w;
}

Weight rho(const CartanDatum& g) { return Weight(g.rank, Q(1)); }

Weight reflect(const CartanDatum& g, int i, const Weight& gamma) {
    Weight r = gamma;
    Q c = gamma[i];
    if (sgn(c) == 0) return r;
    for (int k = 0; k < g.rank; ++k) r[k] -= c * g.cartan[k][i];
    return r;
}

Weight weyl_act(const CartanDatum& g, const WeylWord& w, const Weight& gamma) {
    check_word_letters(g, w);
    Weight r = gamma;
    for (auto it = w.rbegin(); it != w.rend(); ++it) r = reflect(g, *it - 1, r);
    return r;
}

QMat weyl_matrix(const CartanDatum& g, const WeylWord& w) {
    check_word_letters(g, w);
    QMat m = QMat::identity(g.rank);
    for (int letter : w) {
        QMat s = QMat::identity(g.rank);
        int i = letter - 1;
        for (int k = 0; k < g.rank; ++k) s(k, i) -= g.cartan[k][i];
        m = m * s;
    }
    return m;
}

QVec to_root_coords(const CartanDatum& g, const Weight& w) { return g.cartan_inverse() * w; }

Weight from_root_coords(const CartanDatum& g, const QVec& c) { return g.cartan_matrix() * c; }

namespace {

bool is_positive_root_coords(const QVec& c) {
    bool nz = false;
    for (const auto& x : c) {
        if (sgn(x) < 0) return false;
        if (sgn(x) > 0) nz = true;
    }
    return nz;
}

}  // namespace

int weyl_length(const CartanDatum& g, const QMat& w) {
    QMat Ainv = g.cartan_inverse();
    int len = 0;
    for (const auto& pr : positive_roots(g)) {
        QVec img = Ainv * (w * from_root_coords(g, pr.root));
        if (!is_positive_root_coords(img)) ++len;
    }
    return len;
}

bool is_reduced(const CartanDatum& g, const WeylWord& w) {
    check_word_letters(g, w);
    return weyl_length(g, weyl_matrix(g, w)) == static_cast<int>(w.size());
}

WeylWord longest_word(const CartanDatum& g) {
    int N = static_cast<int>(positive_roots(g).size());
    WeylWord w;
    QMat m = QMat::identity(g.rank);
    QMat Ainv = g.cartan_inverse();
    while (static_cast<int>(w.size()) < N) {
        bool extended = false;
        for (int i = 0; i < g.rank; ++i) {
            // l(w s_i) > l(w) iff w(alpha_i) > 0
            QVec img = Ainv * (m * simple_root(g, i));
            if (is_positive_root_coords(img)) {
                w.push_back(i + 1);
                m = m * weyl_matrix(g, {i + 1});
                extended = true;
                break;
            }
        }
        if (!extended) fail(ErrorKind::Internal, "longest word construction stalled");
    }
    return w;
}

WeylWord reduced_word(const CartanDatum& g, const QMat& w) {
    WeylWord out;
    QMat m = w;
    int len = weyl_length(g, m);
    while (len > 0) {
        bool found = false;
        for (int i = 0; i < g.rank; ++i) {
            QMat cand = weyl_matrix(g, {i + 1}) * m;
            int l2 = weyl_length(g, cand);
            if (l2 < len) {
                out.push_back(i + 1);
                m = cand;
                len = l2;
                found = true;
                break;
            }
        }
        if (!found) fail(ErrorKind::Internal, "no descent found");
    }
    return out;
}

std::vector<int> star_involution(const CartanDatum& g) {
    QMat w0 = weyl_matrix(g, longest_word(g));
    std::vector<int> star(g.rank, -1);
    for (int i = 0; i < g.rank; ++i) {
        QVec img = w0 * fundamental_weight(g, i);
        for (int j = 0; j < g.rank; ++j) {
            Weight target(g.rank);
            target[j] = -1;
            if (img == target) star[i] = j;
        }
        if (star[i] < 0) fail(ErrorKind::Internal, "w0 does not permute -omega");
    }
    return star;
}

Q bilinear_weights(const CartanDatum& g, const Weight& x, const Weight& y) {
    // (omega_i, alpha_k) = delta_ik / d_k
    QVec c = to_root_coords(g, y);
    Q s = 0;
    for (int k = 0; k < g.rank; ++k) s += c[k] * x[k] / Q(g.d[k]);
    return s;
}

Coweight simple_coroot(const CartanDatum& g, int i) {
    Coweight c(g.rank);
    for (int j = 0; j < g.rank; ++j) c[j] = g.cartan[i][j];
    return c;
}

QMat psi_matrix_on_coroots(const CartanDatum& g) {
    QMat m(g.rank, g.rank);
    for (int i = 0; i < g.rank; ++i)
        for (int k = 0; k < g.rank; ++k) m(k, i) = Q(g.d[i]) * g.cartan[k][i];
    return m;
}

Weight comparison_psi(const CartanDatum& g, const Coweight& x) {
    // coroot coordinates b with x = A^T b
    QVec b = inverse_or_throw(transpose(g.cartan_matrix()), "A^T") * x;
    return psi_matrix_on_coroots(g) * b;
}

Q pair(const Weight& lambda, const QVec& coroot_coords) { return dot(lambda, coroot_coords); }

std::vector<PositiveRoot> positive_roots(const CartanDatum& g) {
    int r = g.rank;
    std::map<QVec, QVec> found;
    std::deque<QVec> queue;
    for (int i = 0; i < r; ++i) {
        QVec e(r);
        e[i] = 1;
        found[e] = e;
        queue.push_back(e);
    }
    while (!queue.empty()) {
        QVec beta = queue.front();
        queue.pop_front();
        QVec cob = found[beta];
        for (int i = 0; i < r; ++i) {
            Q p = 0, q = 0;
            for (int j = 0; j < r; ++j) {
                p += beta[j] * g.cartan[i][j];  // <beta, alpha_i^vee>
                q += cob[j] * g.cartan[j][i];   // <alpha_i, beta^vee>
            }
            QVec nb = beta, nc = cob;
            nb[i] -= p;
            nc[i] -= q;
            if (!is_positive_root_coords(nb) || found.count(nb)) continue;
            found[nb] = nc;
            queue.push_back(nb);
        }
    }
    std::vector<PositiveRoot> out;
    for (auto& [b, c] : found) out.push_back({b, c});
    std::sort(out.begin(), out.end(), [](const PositiveRoot& x, const PositiveRoot& y) {
        Q hx = std::accumulate(x.root.begin(), x.root.end(), Q(0));
        Q hy = std::accumulate(y.root.begin(), y.root.end(), Q(0));
        if (hx != hy) return hx < hy;
        return x.root < y.root;
    });
    return out;
}

bool is_dominant(const Weight& w) {
    for (const auto& x : w)
        if (sgn(x) < 0) return false;
    return true;
}

bool is_integral_weight(const Weight& w) {
    for (const auto& x : w)
        if (!is_integer(x)) return false;
    return true;
}

}  // namespace cc
