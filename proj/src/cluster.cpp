#include "crystalcone/cluster.hpp"

#include <sstream>

namespace cc {

namespace {

int sign(long v) { return (v > 0) - (v < 0); }

// Signed letter of the double reduced word: i_k = -word[k-1] for k >= 1, i_{-k} = k.
int signed_letter(const WeylWord& word, int k) { return k < 0 ? -k : -word.at(k - 1); }

Weight apply_prefix(const CartanDatum& g, const WeylWord& word, int k, const Weight& gamma) {
    WeylWord u(word.begin(), word.begin() + k);
    return weyl_act(g, u, gamma);
}

}  // namespace

int Seed::pos(int k) const {
    int r = datum.rank;
    if (k < 0 && -k <= r) return r + k;
    if (k > 0 && k <= static_cast<int>(word.size())) return r + k - 1;
    fail(ErrorKind::BadIndex, "seed index " + std::to_string(k) + " out of range");
}

int Seed::letter(int k) const { return std::abs(signed_letter(word, k)); }

bool Seed::is_last_occurrence(int k) const {
    return k > 0 && next_occurrence(word, k) == static_cast<int>(word.size()) + 1;
}

int next_occurrence(const WeylWord& word, int k) {
    int m = static_cast<int>(word.size());
    int a = std::abs(signed_letter(word, k));
    for (int j = std::max(k + 1, 1); j <= m; ++j)
        if (word[j - 1] == a) return j;
    return m + 1;
}

Seed seed_from_word(const CartanDatum& g, const WeylWord& word) {
    if (!is_reduced(g, word)) fail(ErrorKind::NotReduced, "word " + to_string(word) + " is not reduced");
    int r = g.rank, m = static_cast<int>(word.size());
    if (m != static_cast<int>(positive_roots(g).size()))
        fail(ErrorKind::NotReduced, "word " + to_string(word) + " is not a word for w0");
    Seed s;
    s.datum = g;
    s.word = word;
    for (int k = -r; k <= m; ++k)
        if (k != 0) s.index.push_back(k);
    int n = s.size();
    std::vector<int> plus(n);
    for (int p = 0; p < n; ++p) plus[p] = next_occurrence(word, s.index[p]);
    for (int p = 0; p < n; ++p) {
        int k = s.index[p];
        s.exchangeable.push_back(k >= 1 && plus[p] <= m);
        s.sym.push_back(g.d[s.letter(k) - 1]);
    }
    s.M.assign(n, std::vector<int>(n, 0));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int k = s.index[a], l = s.index[b];
            if (k == l) continue;
            int p = std::max(k, l), q = std::min(plus[a], plus[b]);
            int ep = sign(signed_letter(word, p));
            if (p == q) {
                s.M[a][b] = -sign(k - l) * ep;
            } else if (p < q && q <= m) {
                int eq = sign(signed_letter(word, q));
                long test = static_cast<long>(ep) * eq * (k - l) * (plus[a] - plus[b]);
                if (test > 0) s.M[a][b] = -sign(k - l) * ep * g.cartan[s.letter(k) - 1][s.letter(l) - 1];
            }
        }
    for (int p = 0; p < n; ++p) {
        s.labels.push_back(LaurentPoly::var(n, p));
        int k = s.index[p];
        int i = s.letter(k) - 1;
        Weight w = fundamental_weight(g, i);
        Weight u = k < 0 ? w : apply_prefix(g, word, k, w);
        s.degrees.push_back({u, w});
        std::string uname;
        if (k < 0) uname = "omega_" + std::to_string(i + 1);
        else {
            uname = "s";
            for (int j = 0; j < k; ++j) uname += std::to_string(word[j]);
            uname += " omega_" + std::to_string(i + 1);
        }
        s.names.push_back("Delta_{" + uname + ", omega_" + std::to_string(i + 1) + "}");
    }
    if (!is_skew_symmetrized(s.M, s.sym)) fail(ErrorKind::Internal, "M(i) is not skew-symmetrizable");
    return s;
}

ExchangeRelation exchange_relation(const Seed& s, int k) {
    int pk = s.pos(k);
    if (!s.exchangeable[pk]) fail(ErrorKind::NotMutable, "index " + std::to_string(k) + " is frozen");
    ExchangeRelation e;
    e.k = k;
    e.plus.assign(s.size(), 0);
    e.minus.assign(s.size(), 0);
    for (int j = 0; j < s.size(); ++j) {
        int v = s.M[j][pk];
        if (v > 0) e.plus[j] = v;
        else if (v < 0) e.minus[j] = -v;
    }
    return e;
}

Seed mutate(const Seed& s, int k) {
    ExchangeRelation e = exchange_relation(s, k);
    int pk = s.pos(k), n = s.size();
    Seed t = s;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == pk || j == pk) t.M[i][j] = -s.M[i][j];
            else {
                long a = s.M[i][pk], b = s.M[pk][j];
                t.M[i][j] = static_cast<int>(s.M[i][j] + (std::abs(a) * b + a * std::abs(b)) / 2);
            }
        }
    int nv = s.labels[0].nvars();
    LaurentPoly pp = LaurentPoly::constant(nv, 1), pm = LaurentPoly::constant(nv, 1);
    for (int j = 0; j < n; ++j) {
        if (e.plus[j]) pp = pp * s.labels[j].pow(e.plus[j]);
        if (e.minus[j]) pm = pm * s.labels[j].pow(e.minus[j]);
    }
    auto q = (pp + pm).divide_exact(s.labels[pk]);
    if (!q) fail(ErrorKind::NotDecomposable, "mutated variable at " + std::to_string(k) + " is not Laurent");
    t.labels[pk] = *q;
    if (!s.degrees.empty()) {
        Weight d1(s.datum.rank), d2(s.datum.rank), e1(s.datum.rank), e2(s.datum.rank);
        for (int j = 0; j < n; ++j) {
            d1 = add(d1, scale(e.plus[j], s.degrees[j].first));
            d2 = add(d2, scale(e.plus[j], s.degrees[j].second));
            e1 = add(e1, scale(e.minus[j], s.degrees[j].first));
            e2 = add(e2, scale(e.minus[j], s.degrees[j].second));
        }
        if (d1 != e1 || d2 != e2)
            fail(ErrorKind::Internal, "exchange monomials at " + std::to_string(k) + " differ in degree");
        t.degrees[pk] = {sub(d1, s.degrees[pk].first), sub(d2, s.degrees[pk].second)};
    }
    t.names[pk] = "mu_" + std::to_string(k) + "(" + s.names[pk] + ")";
    t.history.push_back(k);
    return t;
}

Seed mutate_sequence(const Seed& s, const std::vector<int>& ks) {
    Seed t = s;
    for (int k : ks) t = mutate(t, k);
    return t;
}

Seed dual_seed(const Seed& s) {
    Seed t = s;
    int n = s.size();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t.M[i][j] = -s.M[j][i];
    // the grading belongs to the group; the dual seed's variables are formal
    t.degrees.clear();
    return t;
}

bool is_skew_symmetrized(const std::vector<std::vector<int>>& M, const std::vector<int>& sym) {
    size_t n = M.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (static_cast<long>(M[i][j]) * sym[j] != -static_cast<long>(M[j][i]) * sym[i]) return false;
    return true;
}

HomogeneityResult check_homogeneous(const Seed& s) {
    HomogeneityResult res;
    if (s.degrees.empty()) return res;
    int n = s.size(), r = s.datum.rank;
    for (int j = 0; j < n; ++j) {
        if (!s.exchangeable[j]) continue;
        Weight a(r), b(r);
        for (int i = 0; i < n; ++i) {
            if (!s.M[i][j]) continue;
            a = add(a, scale(s.M[i][j], s.degrees[i].first));
            b = add(b, scale(s.M[i][j], s.degrees[i].second));
        }
        for (int c = 0; c < r; ++c)
            if (sgn(a[c]) != 0 || sgn(b[c]) != 0) {
                res.ok = false;
                res.violating_column = s.index[j];
                return res;
            }
    }
    return res;
}

std::vector<int> reduced_indices(const Seed& s) {
    std::vector<int> out;
    for (int p = 0; p < s.size(); ++p)
        if (s.index[p] < 0 || s.exchangeable[p]) out.push_back(s.index[p]);
    return out;
}

std::vector<std::vector<int>> reduced_matrix(const Seed& s) {
    auto L = reduced_indices(s);
    std::vector<std::vector<int>> out(L.size(), std::vector<int>(L.size()));
    for (size_t a = 0; a < L.size(); ++a)
        for (size_t b = 0; b < L.size(); ++b) out[a][b] = s.M[s.pos(L[a])][s.pos(L[b])];
    return out;
}

std::string seed_to_string(const Seed& s) {
    std::ostringstream os;
    os << "seed " << s.datum.name() << " word " << to_string(s.word) << "\n";
    std::vector<std::string> names;
    for (int k : s.index) names.push_back("z" + std::string(k < 0 ? "m" : "") + std::to_string(std::abs(k)));
    for (int p = 0; p < s.size(); ++p) {
        os << (s.exchangeable[p] ? "  * " : "    ") << s.index[p] << ": " << s.labels[p].to_string(names) << "  [";
        for (int q = 0; q < s.size(); ++q) os << (q ? " " : "") << s.M[p][q];
        os << "]\n";
    }
    return os.str();
}

}  // namespace cc
