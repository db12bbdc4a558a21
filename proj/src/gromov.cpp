#include "crystalcone/gromov.hpp"

#include "crystalcone/parallel.hpp"

#include <algorithm>
#include <set>

namespace cc {

Q lambda_bound(const CartanDatum& g, const Weight& lambda) {
    if (!is_dominant(lambda)) fail(ErrorKind::NotDominant, "lambda " + to_string(lambda) + " is not dominant");
    std::optional<Q> best;
    for (const auto& r : positive_roots(g)) {
        Q v = pair(lambda, r.coroot);
        if (!best || v < *best) best = v;
    }
    return *best;
}

std::vector<QVec> simplex_vertices(int m, const Q& ell) {
    std::vector<QVec> out(1, QVec(m));
    for (int i = 0; i < m; ++i) {
        QVec v(m);
        v[i] = ell;
        out.push_back(v);
    }
    return out;
}

HSystem width_polytope(const CartanDatum& g, const WeylWord& word, const Weight& lambda) {
    Chart ch = make_chart(langlands_dual(g), word, ChartKind::ReducedFactorization);
    return eliminate_unit_equations(hw_fiber(ch, lambda).sys);
}

std::optional<WidthCertificate> max_width(const HSystem& p, const QMat& A) {
    int m = p.dim;
    // variables (ell, b)
    HSystem lp;
    lp.dim = m + 1;
    auto row = [&](const Affine& h, int vertex) {
        Affine r;
        r.a.assign(m + 1, Q(0));
        r.a[0] = vertex < 0 ? Q(0) : dot(h.a, A.col(vertex));
        for (int j = 0; j < m; ++j) r.a[j + 1] = h.a[j];
        r.c = h.c;
        return r;
    };
    for (int v = -1; v < m; ++v) {
        for (const auto& h : p.ge) lp.ge.push_back(row(h, v));
        for (const auto& h : p.eq) lp.eq.push_back(row(h, v));
    }
    Affine pos;
    pos.a.assign(m + 1, Q(0));
    pos.a[0] = 1;
    lp.ge.push_back(pos);
    QVec obj(m + 1);
    obj[0] = 1;
    LPResult res = lp_optimize(lp, obj, true);
    if (res.status == LPStatus::Infeasible) return std::nullopt;
    if (res.status == LPStatus::Unbounded) fail(ErrorKind::Unbounded, "simplex size is unbounded: polytope is not bounded");
    WidthCertificate c;
    c.A = A;
    c.ell = res.x[0];
    c.b.assign(res.x.begin() + 1, res.x.end());
    return c;
}

namespace {

using IMat = std::vector<long>;  // row-major m x m

long det_int(IMat a, int m) {
    // fraction-free Gaussian elimination (Bareiss)
    long sign = 1, prev = 1;
    for (int k = 0; k < m - 1; ++k) {
        if (a[k * m + k] == 0) {
            int p = k + 1;
            while (p < m && a[p * m + k] == 0) ++p;
            if (p == m) return 0;
            for (int j = 0; j < m; ++j) std::swap(a[k * m + j], a[p * m + j]);
            sign = -sign;
        }
        for (int i = k + 1; i < m; ++i)
            for (int j = k + 1; j < m; ++j)
                a[i * m + j] = (a[i * m + j] * a[k * m + k] - a[i * m + k] * a[k * m + j]) / prev;
        prev = a[k * m + k];
    }
    return sign * a[m * m - 1];
}

IMat mul(const IMat& x, const IMat& y, int m) {
    IMat z(m * m, 0);
    for (int i = 0; i < m; ++i)
        for (int k = 0; k < m; ++k)
            for (int j = 0; j < m; ++j) z[i * m + j] += x[i * m + k] * y[k * m + j];
    return z;
}

IMat identity(int m) {
    IMat a(m * m, 0);
    for (int i = 0; i < m; ++i) a[i * m + i] = 1;
    return a;
}

QMat to_qmat(const IMat& a, int m) {
    QMat q(m, m);
    for (int i = 0; i < m * m; ++i) q.a[i] = a[i];
    return q;
}

std::vector<IMat> signed_permutations(int m) {
    std::vector<IMat> out;
    std::vector<int> perm(m);
    for (int i = 0; i < m; ++i) perm[i] = i;
    do {
        for (int signs = 0; signs < (1 << m); ++signs) {
            IMat a(m * m, 0);
            for (int i = 0; i < m; ++i) a[i * m + perm[i]] = (signs >> i & 1) ? -1 : 1;
            out.push_back(a);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

std::vector<IMat> shear_products(int m, int bound, const std::vector<IMat>& perms, int factors) {
    std::vector<IMat> shears;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int c = -bound; c <= bound; ++c)
                if (i != j && c != 0) {
                    IMat s = identity(m);
                    s[i * m + j] = c;
                    shears.push_back(s);
                }
    std::vector<IMat> base = shears;
    if (factors == 2) {
        base.clear();
        for (const auto& s : shears)
            for (const auto& t : shears) base.push_back(mul(s, t, m));
    }
    std::vector<IMat> out;
    for (const auto& p : perms)
        for (const auto& s : base) {
            IMat a = mul(p, s, m);
            bool fits = std::all_of(a.begin(), a.end(), [&](long v) { return std::abs(v) <= bound; });
            if (fits) out.push_back(a);
        }
    return out;
}

struct Scan {
    const HSystem& p;
    const Q& target;
    const SearchOptions& opt;
    std::set<IMat> seen;
    SearchResult result;

    // True when a certificate reaching the target was found (and stopping is requested).
    bool run(std::vector<IMat> batch) {
        int m = p.dim;
        std::sort(batch.begin(), batch.end());
        batch.erase(std::unique(batch.begin(), batch.end()), batch.end());
        std::vector<IMat> todo;
        for (auto& a : batch)
            if (seen.insert(a).second) todo.push_back(std::move(a));
        std::vector<std::optional<WidthCertificate>> found(todo.size());
        parallel_for(static_cast<int>(todo.size()), [&](int i) { found[i] = max_width(p, to_qmat(todo[i], m)); });
        result.candidates += static_cast<long>(todo.size());
        // lexicographic order decides ties
        for (auto& f : found) {
            if (!f) continue;
            if (!result.best || f->ell > result.best->ell) result.best = f;
            if (opt.stop_at_target && f->ell >= target) {
                result.best = f;
                result.status = SearchStatus::Found;
                return true;
            }
        }
        if (result.best && result.best->ell >= target) result.status = SearchStatus::Found;
        return false;
    }
};

}  // namespace

SearchResult search_embedding(const HSystem& p, const Q& target, const SearchOptions& opt) {
    int m = p.dim;
    if (m < 1 || m > 4) fail(ErrorKind::ChartUnsupported, "embedding search supports dimension 1..4");
    if (!p.eq.empty()) fail(ErrorKind::ChartUnsupported, "embedding search needs a full-dimensional polytope");
    Scan scan{p, target, opt, {}, {}};
    if (opt.entry_bound < 1) return scan.result;  // no unimodular matrix has all entries 0
    auto perms = signed_permutations(m);
    if (scan.run(perms)) return scan.result;
    if (scan.run(shear_products(m, opt.entry_bound, perms, 1))) return scan.result;
    if (!opt.stop_at_target) return scan.result;
    if (scan.run(shear_products(m, opt.entry_bound, perms, 2))) return scan.result;

    // brute phase: odometer over all entries, unimodular ones in chunks
    int k = opt.entry_bound, n = m * m;
    IMat a(n, -k);
    long tried = 0;
    std::vector<IMat> chunk;
    bool done = false;
    while (!done && tried < opt.brute_limit) {
        long dv = det_int(a, m);
        if ((dv == 1 || dv == -1) && !scan.seen.count(a)) {
            chunk.push_back(a);
            ++tried;
        }
        int pos = n - 1;
        while (pos >= 0 && a[pos] == k) a[pos--] = -k;
        if (pos < 0) done = true;
        else ++a[pos];
        if (chunk.size() >= 4096 || done || tried >= opt.brute_limit) {
            if (scan.run(std::move(chunk))) return scan.result;
            chunk.clear();
        }
    }
    return scan.result;
}

CertificateCheck verify_certificate(const WidthCertificate& cert, const HSystem& p, const Q& margin) {
    CertificateCheck out;
    int m = p.dim;
    if (cert.A.rows != m || cert.A.cols != m || static_cast<int>(cert.b.size()) != m || sgn(cert.ell) <= 0) return out;
    if (!is_integral(cert.A) || abs(det(cert.A)) != 1) return out;
    auto verts = simplex_vertices(m, cert.ell);
    for (size_t v = 0; v < verts.size(); ++v) {
        QVec y = add(cert.A * verts[v], cert.b);
        for (size_t f = 0; f < p.ge.size(); ++f)
            if (p.ge[f].eval(y) < margin) {
                out.vertex = static_cast<int>(v);
                out.facet = static_cast<int>(f);
                return out;
            }
        for (size_t f = 0; f < p.eq.size(); ++f)
            if (sgn(p.eq[f].eval(y)) != 0) {
                out.vertex = static_cast<int>(v);
                out.facet = static_cast<int>(p.ge.size() + f);
                return out;
            }
    }
    out.ok = true;
    return out;
}

}  // namespace cc
