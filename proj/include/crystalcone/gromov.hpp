#pragma once

#include "crystalcone/polytopes.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cc {

// x -> A x + b maps the simplex conv{0, ell e_1, ..., ell e_m} into the target.
// Widths are in units where the open unit simplex has size 1 (no 2 pi factor).
struct WidthCertificate {
    QMat A;
    QVec b;
    Q ell;
    std::string target;
};

// min over positive coroots of <lambda, alpha^vee>. Throws NotDominant.
Q lambda_bound(const CartanDatum& g, const Weight& lambda);

std::vector<QVec> simplex_vertices(int m, const Q& ell);

// The fiber polytope of lambda in lattice coordinates, full-dimensional.
HSystem width_polytope(const CartanDatum& g, const WeylWord& word, const Weight& lambda);

// Largest ell (and a translation) with the A-image of the ell-simplex inside p; nullopt when
// even a point does not fit. Throws Unbounded when ell is unbounded.
std::optional<WidthCertificate> max_width(const HSystem& p, const QMat& A);

enum class SearchStatus { Found, NotFound };

struct SearchResult {
    SearchStatus status = SearchStatus::NotFound;
    std::optional<WidthCertificate> best;  // certificate, or best seen when NotFound
    long candidates = 0;                   // matrices whose LP was solved
};

struct SearchOptions {
    int entry_bound = 3;
    bool stop_at_target = true;   // false: signed permutations and single shears only, best ell
    long brute_limit = 200000;    // unimodular matrices tried in the brute phase
};

// Signed permutations, then one and then two elementary shears (times signed
// permutations), then all matrices with entries in [-bound, bound] and det +-1.
// Sound but incomplete: NotFound is not a refutation.
SearchResult search_embedding(const HSystem& p, const Q& target, const SearchOptions& opt = {});

struct CertificateCheck {
    bool ok = false;
    int vertex = -1, facet = -1;  // first violation; facet indexes ge, then eq
};
// Exact closed containment; margin > 0 asks for slack >= margin on every inequality.
CertificateCheck verify_certificate(const WidthCertificate& cert, const HSystem& p, const Q& margin = 0);

}  // namespace cc
