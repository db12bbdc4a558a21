#pragma once

#include "crystalcone/cluster.hpp"
#include "crystalcone/symgroup.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cc {

enum class ChartKind {
    Factorization,         // (c, t):  h(c) y_i(t)
    ReducedFactorization,  // (a, t):  h(a) x(t), x(t) in L^{w0,e}
    Cluster,               // z_I: chamber minors
    Reduced,               // (a, z_L): h(a) x(z), frozen Delta_{w0 omega_i, omega_i}(x) = 1
    Twisted,               // w_I: chamber minors of the twisted point
    String,                // tau on L^{w0,e}, potential Phi_L
};

const char* chart_kind_name(ChartKind k);
ChartKind parse_chart_kind(const std::string& s);

// One tropical exchange step: x_var' = min(plus.x, minus.x) - x_var (in the coordinates before the step).
struct ChartStep {
    int var = 0;
    std::vector<int> plus, minus;
};

// A toric chart of G^{w0,e} (or L^{w0,e} for the string chart) with everything the
// tropical pipeline needs.
struct Chart {
    ChartKind kind = ChartKind::Factorization;
    CartanDatum datum;
    WeylWord word;
    int nvars = 0;
    std::vector<std::string> names;
    LMat point;              // Laurent entries in the chart variables
    LaurentPoly potential;   // Phi_BK, or Phi_L for the string chart
    QMat hw, wt;             // rank x nvars; row j gives <varpi_j, hw^t(x)>
    std::vector<bool> integral;  // false for torus (H) coordinates of reduced charts
    std::optional<Seed> seed;    // cluster-type charts
    std::vector<int> seed_var;   // chart variable of each seed position, -1 when set to 1
    std::vector<ChartStep> steps;
    // For charts without H coordinates: the hw-fiber over eta sits on coset * eta + Z^n.
    QMat coset;

    std::vector<int> h_coords() const;
};

Chart make_chart(const CartanDatum& g, const WeylWord& word, ChartKind kind);
// Mutate a Cluster or Reduced chart in seed direction k.
Chart mutate_chart(const Chart& c, int k);

// Exponent vector of a minor that must be a Laurent monomial in the chart.
Exp monomial_exponent_of(const LaurentPoly& p, const std::string& what);

// Rows e with (c,t) = z^{E^{-1}}: exponent matrix of the chamber minors of zeta(q) (for tests).
std::vector<Exp> twisted_exponents(const CartanDatum& g, const WeylWord& word);

}  // namespace cc
