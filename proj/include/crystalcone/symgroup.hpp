#pragma once

#include "crystalcone/cartan.hpp"
#include "crystalcone/laurent.hpp"

#include <complex>
#include <vector>

namespace cc {

// Faithful representation with Chevalley generators; basis ordered by decreasing
// weight so that e_i is strictly upper and f_i strictly lower triangular.
struct RepCarrier {
    CartanDatum datum;
    int dim = 0;
    std::vector<QMat> e, f, h;
    std::vector<Weight> weights;  // weight of each basis vector
    std::vector<int> wedge;       // omega_i is the top weight of the wedge^k with k = wedge[i]
    QVec contravariant;           // diagonal G with e_i^T G = G f_i
    std::vector<int> depth;       // height of (top weight - weight of v)
};

RepCarrier rep_carrier(const CartanDatum& g);
// Empty string when every commutation/Serre relation holds.
std::string verify_carrier(const RepCarrier& c);

// Square matrix with entries in a Laurent or rational-function ring.
template <class T>
struct SymMat {
    int n = 0;
    std::vector<T> a;
    SymMat() = default;
    SymMat(int n_, const T& fill) : n(n_), a(static_cast<size_t>(n_) * n_, fill) {}
    T& operator()(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
    const T& operator()(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
};
using LMat = SymMat<LaurentPoly>;
using RMat = SymMat<RatFunc>;

LMat lmat_constant(const QMat& m, int nvars);
LMat operator*(const LMat& x, const LMat& y);
LMat operator*(const QMat& x, const LMat& y);
LMat operator*(const LMat& x, const QMat& y);
bool operator==(const LMat& x, const LMat& y);
RMat to_rmat(const LMat& m);
LMat to_lmat(const RMat& m);  // throws NotDecomposable when an entry is not Laurent
RMat operator*(const RMat& x, const RMat& y);
bool equals(const RMat& x, const RMat& y);
LMat monomial_substitute(const LMat& m, const std::vector<Exp>& rows, int new_nvars);
LaurentPoly det(const LMat& m);
QMat evaluate(const LMat& m, const QVec& x);
std::vector<std::complex<double>> evaluate(const LMat& m, const std::vector<std::complex<double>>& x);

QMat exp_nilpotent(const QMat& x, const Q& t);
LMat elem_y(const RepCarrier& c, int i, int var_index, int nvars);  // exp(t f_i), i 0-based
LMat elem_x(const RepCarrier& c, int i, int var_index, int nvars);  // exp(t e_i)
// Torus element with h^{omega_j} = variable first_var + j.
LMat torus_element(const RepCarrier& c, int first_var, int nvars);
// Torus element given by its values on fundamental weights.
LMat torus_from_values(const RepCarrier& c, const std::vector<LaurentPoly>& values);

QMat sbar(const RepCarrier& c, int i);
QMat lift_sbar(const RepCarrier& c, const WeylWord& w);
// Lift of a Weyl element given by its omega-matrix (via its canonical reduced word).
QMat lift_element(const RepCarrier& c, const QMat& w);

struct GaussFactors {
    RMat lower, diag, upper;
};
GaussFactors gauss_decompose(const RMat& m);

// Delta_{u omega_i, v omega_i}(M) = top-left k x k minor of ubar^{-1} M vbar.
LaurentPoly generalized_minor(const RepCarrier& c, const QMat& u, const QMat& v, int i, const LMat& m);
LaurentPoly generalized_minor(const RepCarrier& c, const WeylWord& u, const WeylWord& v, int i, const LMat& m);

// h y_{i1}(t1) ... y_{im}(tm), variables (c_1..c_r, t_1..t_m) or (t_1..t_m).
LMat factorization_point(const RepCarrier& c, const WeylWord& word, bool include_h);

RMat theta(const RepCarrier& c, const RMat& m);
RMat twist(const RepCarrier& c, const RMat& m);
LMat twist(const RepCarrier& c, const LMat& m);

// Phi_BK(M); the frozen denominators must be monomials.
LaurentPoly bk_potential(const RepCarrier& c, const LMat& m);
// Phi_L(M) = sum_i Delta_{w0 omega_i, s_i omega_i}(M).
LaurentPoly string_potential(const RepCarrier& c, const LMat& m);
// sum_i Delta_{w0 s_i omega_i, omega_i} / Delta_{w0 omega_i, omega_i}
LaurentPoly bk_correction(const RepCarrier& c, const LMat& m);

void require_positive(const LaurentPoly& p, const std::string& what);

}  // namespace cc
