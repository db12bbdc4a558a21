#pragma once

#include "crystalcone/cluster.hpp"

#include <vector>

namespace cc {

// Imaginary parts of the log-canonical coefficients c_{z_i,z_j} and c_{z_i,zbar_j},
// indexed by seed positions. Only the initial seed of a word carries the degrees used here.
struct CCoefficients {
    QMat zz, zzbar;
};
CCoefficients c_coefficients(const Seed& s);

// {lambda_i, phi_j}: rows over I = [-r..-1, 1..m], columns over 1..m.
// The lambda-lambda and phi-phi blocks of the constant structure vanish identically.
struct PTBracketMatrix {
    std::vector<int> rows, cols;
    QMat m;
    bool lambda_lambda_zero = true;
    bool phi_phi_zero = true;

    // Full antisymmetric matrix in the order (lambda_I, phi_1..m).
    QMat full() const;
};

PTBracketMatrix pt_bracket_matrix(const Seed& s);
PTBracketMatrix special_chart_brackets(const CartanDatum& g, const WeylWord& word);

// B_{jk} = {lambda_{j^-}, phi_k} = (X^{-1} Y)_{jk}; C_phi = (Y^{-1})^T turns B into the identity
// once lambda_{j^-} is rescaled by d_{|i_j|}.
struct DarbouxChange {
    QMat B, X, Y, C_phi;
    std::vector<int> j_minus;  // j^- for j = 1..m
};
DarbouxChange triangular_normalization(const CartanDatum& g, const WeylWord& word);

// Linear coordinates (x_1..x_m, x_{-1}..x_{-r}; u_1..u_m) with {x_j, u_k} = delta_jk and
// x_{-i} = <X_i, hw^PT> Casimirs.
struct DarbouxCoordinates {
    DarbouxChange change;
    QMat lambda_to_x;  // (m + r) x |I|
    QMat hw;           // hw^PT in lambda coordinates, r x |I|
    QMat bracket;      // full bracket in the new coordinates
    bool canonical = false;
};
DarbouxCoordinates darboux_coordinates(const CartanDatum& g, const WeylWord& word);

// Rows of hw^PT pair to zero with every phi (exact).
bool hw_components_are_casimirs(const CartanDatum& g, const WeylWord& word);

}  // namespace cc
