#pragma once

#include "crystalcone/linalg.hpp"

#include <string>
#include <vector>

namespace cc {

// Conventions: A[i][j] = <alpha_j, alpha_i^vee>, so alpha_j = sum_i A[i][j] omega_i.
// d is the minimal positive vector with A[i][j] d[j] symmetric.
struct CartanDatum {
    char family = 'A';
    int rank = 0;
    std::vector<std::vector<int>> cartan;
    std::vector<int> d;

    std::string name() const { return std::string(1, family) + std::to_string(rank); }
    QMat cartan_matrix() const;
    QMat cartan_inverse() const;
};

using Weight = QVec;    // coordinates in the fundamental weight basis
using Coweight = QVec;  // coordinates in the fundamental coweight basis
using WeylWord = std::vector<int>;  // 1-based letters

CartanDatum build_cartan(char family, int rank);
CartanDatum parse_type(const std::string& s);  // "A2", "C2", "G2", ...
CartanDatum langlands_dual(const CartanDatum& g);

void check_word_letters(const CartanDatum& g, const WeylWord& w);

Weight simple_root(const CartanDatum& g, int i);  // 0-based index, omega coordinates
Weight fundamental_weight(const CartanDatum& g, int i);
Weight rho(const CartanDatum& g);
Weight reflect(const CartanDatum& g, int i, const Weight& gamma);
// Left-to-right composition: w = s_{w[0]} s_{w[1]} ..., applied to gamma.
Weight weyl_act(const CartanDatum& g, const WeylWord& w, const Weight& gamma);
// Matrix of the Weyl element in omega coordinates (acting on column vectors).
QMat weyl_matrix(const CartanDatum& g, const WeylWord& w);

bool is_reduced(const CartanDatum& g, const WeylWord& w);
int weyl_length(const CartanDatum& g, const QMat& w);
WeylWord longest_word(const CartanDatum& g);
// Canonical (lex-least) reduced word of the element with the given omega-matrix.
WeylWord reduced_word(const CartanDatum& g, const QMat& w);
// Index i* with w0 omega_i = -omega_{i*} (0-based).
std::vector<int> star_involution(const CartanDatum& g);

// In simple-root coordinates.
QVec to_root_coords(const CartanDatum& g, const Weight& w);
Weight from_root_coords(const CartanDatum& g, const QVec& c);

Q bilinear_weights(const CartanDatum& g, const Weight& x, const Weight& y);

// Coroots alpha_i^vee have coweight coordinates A[i][*].
Coweight simple_coroot(const CartanDatum& g, int i);
// psi_h(alpha_i^vee) = d_i alpha_i; input in coweight coordinates, output in omega coordinates.
Weight comparison_psi(const CartanDatum& g, const Coweight& x);
// Same map on simple-coroot coordinates.
QMat psi_matrix_on_coroots(const CartanDatum& g);
Q pair(const Weight& lambda, const QVec& coroot_coords);  // <lambda, sum c_i alpha_i^vee>

struct PositiveRoot {
    QVec root;    // simple-root coordinates
    QVec coroot;  // simple-coroot coordinates
};
std::vector<PositiveRoot> positive_roots(const CartanDatum& g);

bool is_dominant(const Weight& w);
bool is_integral_weight(const Weight& w);

}  // namespace cc
