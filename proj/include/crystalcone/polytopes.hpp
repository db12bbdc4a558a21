#pragma once

#include "crystalcone/tropical.hpp"

#include <map>
#include <optional>

namespace cc {

// Fiber of a cone over a highest weight, written in the chart's integral coordinates y;
// full chart coordinates are x = lift * y + shift.
struct Polytope {
    HSystem sys;
    std::vector<std::string> names;
    QMat lift;
    QVec shift;
    QVec full(const QVec& y) const { return add(lift * y, shift); }
};

// Coroot coordinates of lambda for a cone built on datum D: (A_D^T)^{-1} lambda.
QVec fiber_coordinates(const CartanDatum& cone_datum, const Weight& lambda);

Polytope hw_fiber(const Chart& chart, const ConeH& cone, const Weight& lambda);
Polytope hw_fiber(const Chart& chart, const Weight& lambda);

// Lattice points of a bounded polytope, lexicographic order. Throws Unbounded.
std::vector<QVec> enumerate_lattice_points(const Polytope& p);

struct CountResult {
    Weight lambda;
    long total = 0;
    std::map<Weight, long> by_weight;  // weights of the requested group
    std::optional<FarkasCertificate> empty_certificate;
};

// Counts through a chart whose datum is the cone datum D; weights are reported for D's dual.
CountResult count_chart(const Chart& chart, const Weight& lambda);

// The cone is built for the Langlands dual of g (or g itself when raw_cone).
CountResult count_dim(const CartanDatum& g, const WeylWord& word, const Weight& lambda,
                      ChartKind kind = ChartKind::ReducedFactorization, bool raw_cone = false);
long count_weight(const CartanDatum& g, const WeylWord& word, const Weight& lambda, const Weight& nu,
                  ChartKind kind = ChartKind::ReducedFactorization, bool raw_cone = false);

// Euclidean volume in the lattice coordinates (full-dimensional polytopes; lower-dimensional
// ones are reduced through unimodular equation elimination first).
Q polytope_volume(const Polytope& p);
// Drops equations with a unit coefficient by substitution; throws ChartUnsupported otherwise.
HSystem eliminate_unit_equations(const HSystem& s);
Q volume(const HSystem& s);

}  // namespace cc
