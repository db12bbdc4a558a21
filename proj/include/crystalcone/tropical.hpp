#pragma once

#include "crystalcone/charts.hpp"
#include "crystalcone/lp.hpp"

#include <vector>

namespace cc {

// f^t(x) = min_{gamma in num} <gamma,x> - min_{delta in den} <delta,x>.
struct TropicalForm {
    int nvars = 0;
    std::vector<QVec> num, den;  // den empty means 0
    Q eval(const QVec& x) const;
};

// Requires every coefficient of num and den to be positive.
TropicalForm tropicalize(const LaurentPoly& num);
TropicalForm tropicalize(const LaurentPoly& num, const LaurentPoly& den);

using ConeH = HSystem;

// {f^t >= 0} for a Laurent polynomial f (one halfspace per distinct exponent).
ConeH cone_from_potential(const LaurentPoly& f);
// Same cone moved to {f^t >= delta}.
ConeH delta_interior(const ConeH& cone, const Q& delta);

ConeH bk_cone(const Chart& chart);
ConeH bk_cone(const CartanDatum& g, const WeylWord& word, ChartKind kind);
ConeH string_cone(const CartanDatum& g, const WeylWord& word);

// Nonzero Smith invariants all equal to 1.
bool torsion_free_cokernel(const QMat& m);

// Primitive integer normal with the constant scaled alongside (a.x + c >= 0 unchanged).
Affine normalize(const Affine& h);
// Drop exact duplicates after normalisation, trivial rows, and (optionally) LP-redundant rows.
HSystem simplify(const HSystem& s, bool lp_redundancy);

// Fourier-Motzkin elimination of coordinate v (the result keeps the dimension; v's column is zero).
HSystem fm_eliminate(const HSystem& s, int v);

// Piecewise-linear map: on chamber i (closed), x -> A_i x + b_i.
struct PLPiece {
    HSystem domain;
    QMat A;
    QVec b;
};
struct PLMap {
    int dim = 0;
    std::vector<PLPiece> pieces;
    QVec apply(const QVec& x) const;
};

PLMap identity_pl_map(int dim);
// Tropical exchange x_v' = min(plus.x, minus.x) - x_v as a two-chamber PL map.
PLMap trop_chart_change(const ChartStep& step, int dim);
// Compose the tropical exchange steps of a mutated chart (initial coordinates -> current).
QVec apply_chart_steps(const std::vector<ChartStep>& steps, const QVec& x);
// Inverse direction (current -> initial); each step is an involution.
QVec unapply_chart_steps(const std::vector<ChartStep>& steps, const QVec& x);

}  // namespace cc
