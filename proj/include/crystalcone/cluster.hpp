#pragma once

#include "crystalcone/cartan.hpp"
#include "crystalcone/laurent.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cc {

// Seed of the cluster structure on G^{w0,e}. Indices run over I = [-r,-1] u [1,m];
// the position of index k in every per-index vector is pos(k).
struct Seed {
    CartanDatum datum;
    WeylWord word;                // reduced word of w0 (positive letters; the cell uses -word)
    std::vector<int> index;       // -r..-1, 1..m
    std::vector<bool> exchangeable;
    std::vector<std::vector<int>> M;  // |I| x |I|
    std::vector<int> sym;             // skew-symmetrizer D_jj = d_{|i_j|}
    std::vector<LaurentPoly> labels;  // cluster variables in the initial cluster
    std::vector<std::pair<Weight, Weight>> degrees;  // empty for dual seeds
    std::vector<std::string> names;   // minors labelling the initial cluster
    std::vector<int> history;         // indices mutated so far

    int size() const { return static_cast<int>(index.size()); }
    int pos(int k) const;
    int letter(int k) const;  // |i_k|, 1-based
    bool is_last_occurrence(int k) const;
};

// k^+ for the word of w0 (m+1 when k is the last occurrence of its letter).
int next_occurrence(const WeylWord& word, int k);

Seed seed_from_word(const CartanDatum& g, const WeylWord& word);
Seed mutate(const Seed& s, int k);
Seed mutate_sequence(const Seed& s, const std::vector<int>& ks);
Seed dual_seed(const Seed& s);

// Exchange binomial for direction k: the two monomials as exponent vectors over positions.
struct ExchangeRelation {
    int k = 0;
    std::vector<int> plus, minus;  // exponents indexed by position in I
};
ExchangeRelation exchange_relation(const Seed& s, int k);

bool is_skew_symmetrized(const std::vector<std::vector<int>>& M, const std::vector<int>& sym);

struct HomogeneityResult {
    bool ok = true;
    std::optional<int> violating_column;  // index k in J
};
HomogeneityResult check_homogeneous(const Seed& s);

// Submatrix of M on L = [-r,-1] u J.
std::vector<int> reduced_indices(const Seed& s);
std::vector<std::vector<int>> reduced_matrix(const Seed& s);

std::string seed_to_string(const Seed& s);

}  // namespace cc
