#include "crystalcone/reps.hpp"

#include <deque>
#include <functional>
#include <set>

namespace cc {

long CharacterTable::multiplicity(const Weight& nu) const {
    auto it = mults.find(nu);
    return it == mults.end() ? 0 : it->second;
}

long CharacterTable::total() const {
    long s = 0;
    for (const auto& [w, m] : mults) s += m;
    return s;
}

namespace {

void require_dominant_integral(const Weight& lambda) {
    if (!is_integral_weight(lambda)) fail(ErrorKind::NotDominant, "weight is not integral: " + to_string(lambda));
    if (!is_dominant(lambda)) fail(ErrorKind::NotDominant, "weight is not dominant: " + to_string(lambda));
}

}  // namespace

Z weyl_dim(const CartanDatum& g, const Weight& lambda) {
    require_dominant_integral(lambda);
    Weight lr = add(lambda, rho(g));
    Weight r = rho(g);
    Q prod = 1;
    for (const auto& pr : positive_roots(g)) prod *= pair(lr, pr.coroot) / pair(r, pr.coroot);
    if (!is_integer(prod)) fail(ErrorKind::Internal, "Weyl dimension not integral");
    return prod.get_num();
}

Weight dominant_conjugate(const CartanDatum& g, const Weight& w) {
    Weight x = w;
    for (;;) {
        int neg = -1;
        for (int i = 0; i < g.rank; ++i)
            if (sgn(x[i]) < 0) {
                neg = i;
                break;
            }
        if (neg < 0) return x;
        x = reflect(g, neg, x);
    }
}

CharacterTable freudenthal(const CartanDatum& g, const Weight& lambda) {
    require_dominant_integral(lambda);
    int r = g.rank;
    auto roots = positive_roots(g);
    std::vector<Weight> root_w;
    for (const auto& pr : roots) root_w.push_back(from_root_coords(g, pr.root));
    QVec lam_root = to_root_coords(g, lambda);

    // dominant mu <= lambda: lambda - mu a nonnegative integer combination of simple roots
    std::map<Weight, long> dom;  // computed multiplicities of dominant weights
    std::vector<std::pair<Q, Weight>> order;
    {
        std::set<Weight> seen{lambda};
        std::deque<Weight> q{lambda};
        while (!q.empty()) {
            Weight mu = q.front();
            q.pop_front();
            for (int i = 0; i < r; ++i) {
                Weight nu = sub(mu, simple_root(g, i));
                // stay within lambda - Q_+ and keep those whose dominant conjugate is still below lambda;
                // dominant weights below lambda are reached through a chain of dominant-or-not weights,
                // so we explore the full (finite) set lambda - Q_+ intersected with the convex hull bound.
                QVec c = sub(lam_root, to_root_coords(g, nu));
                bool ok = true;
                for (const auto& x : c)
                    if (sgn(x) < 0) ok = false;
                if (!ok || seen.count(nu)) continue;
                // prune: nu must lie in the hull of W lambda, i.e. its dominant conjugate <= lambda
                Weight dn = dominant_conjugate(g, nu);
                QVec cd = sub(lam_root, to_root_coords(g, dn));
                bool below = true;
                for (const auto& x : cd)
                    if (sgn(x) < 0 || !is_integer(x)) below = false;
                if (!below) continue;
                seen.insert(nu);
                q.push_back(nu);
            }
        }
        for (const auto& mu : seen)
            if (is_dominant(mu)) {
                QVec c = sub(lam_root, to_root_coords(g, mu));
                Q height = 0;
                for (const auto& x : c) height += x;
                order.push_back({height, mu});
            }
        std::sort(order.begin(), order.end());
    }

    Weight lr = add(lambda, rho(g));
    Q norm_lr = bilinear_weights(g, lr, lr);
    auto mult_of = [&](const Weight& nu) -> long {
        Weight dn = dominant_conjugate(g, nu);
        auto it = dom.find(dn);
        return it == dom.end() ? 0 : it->second;
    };
    for (const auto& [h, mu] : order) {
        if (mu == lambda) {
            dom[mu] = 1;
            continue;
        }
        Q acc = 0;
        for (const auto& beta : root_w) {
            Weight cur = add(mu, beta);
            for (int k = 1;; ++k, cur = add(cur, beta)) {
                long m = mult_of(cur);
                if (m == 0) {
                    // weights along a string are contiguous; once above lambda's hull we stop
                    QVec c = sub(lam_root, to_root_coords(g, dominant_conjugate(g, cur)));
                    bool inside = true;
                    for (const auto& x : c)
                        if (sgn(x) < 0) inside = false;
                    if (!inside) break;
                    continue;
                }
                acc += Q(m) * bilinear_weights(g, cur, beta);
            }
        }
        Weight mr = add(mu, rho(g));
        Q denom = norm_lr - bilinear_weights(g, mr, mr);
        if (sgn(denom) <= 0) fail(ErrorKind::Internal, "Freudenthal denominator vanished");
        Q m = 2 * acc / denom;
        if (!is_integer(m) || sgn(m) < 0) fail(ErrorKind::Internal, "Freudenthal produced non-integer multiplicity");
        long mv = to_long(m.get_num());
        if (mv > 0) dom[mu] = mv;
    }

    CharacterTable table;
    table.lambda = lambda;
    for (const auto& [mu, m] : dom) {
        std::set<Weight> orbit{mu};
        std::deque<Weight> q{mu};
        while (!q.empty()) {
            Weight w = q.front();
            q.pop_front();
            for (int i = 0; i < r; ++i) {
                Weight s = reflect(g, i, w);
                if (orbit.insert(s).second) q.push_back(s);
            }
        }
        for (const auto& w : orbit) table.mults[w] = m;
    }
    return table;
}

}  // namespace cc
