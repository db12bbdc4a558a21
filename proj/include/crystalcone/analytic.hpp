#pragma once

#include "crystalcone/charts.hpp"
#include "crystalcone/poisson.hpp"

#include <complex>
#include <gmpxx.h>
#include <random>
#include <vector>

namespace cc {

using cd = std::complex<double>;

// Complex number over GMP floats. The bracket formulas cancel terms of size e^{2|s| x}
// against each other, so doubles are not enough beyond tiny |s|.
struct MC {
    mpf_class re, im;
    MC();
    MC(double r, double i = 0);
    MC(mpf_class r, mpf_class i);
    cd to_cd() const { return {re.get_d(), im.get_d()}; }
};
MC operator+(const MC& a, const MC& b);
MC operator-(const MC& a, const MC& b);
MC operator*(const MC& a, const MC& b);
MC operator/(const MC& a, const MC& b);
MC conj(const MC& a);
constexpr int kBracketPrecision = 512;  // bits

// Dense complex matrix for numeric evaluation.
struct CMat {
    int n = 0;
    std::vector<MC> a;
    CMat() = default;
    explicit CMat(int n_) : n(n_), a(static_cast<size_t>(n_) * n_) {}
    MC& operator()(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
    const MC& operator()(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
};

// Everything needed to evaluate pi_{K*} in the initial cluster chart of a word.
// Only type A is supported: the defining representation with the trace form.
struct AnalyticContext {
    CartanDatum datum;
    WeylWord word;
    RepCarrier carrier;
    Chart chart;               // cluster chart of the initial seed
    PTBracketMatrix limit;     // pi_{-infinity}
    std::vector<CMat> u_inv;   // (ubar_k)^{-1} for the chamber minor of each seed position
    std::vector<int> minor_size;
    std::vector<CMat> cartan_basis, pos_roots, neg_roots;
    QMat cartan_gram_inv;
};

AnalyticContext analytic_context(const CartanDatum& g, const WeylWord& word);

// Point of PT(K*): x with certified margin Phi^t(x) = delta, angles phi (zero on frozen -i).
struct PTPoint {
    QVec x;
    std::vector<double> phi;
    Q delta;
};

Q potential_margin(const AnalyticContext& ctx, const QVec& x);
// Random interior direction rescaled to margin exactly delta (> 0).
PTPoint random_pt_point(const AnalyticContext& ctx, const Q& delta, std::mt19937& rng);

// Group element whose chart coordinates are exp(s x_i / 2 + sqrt(-1) phi_i). Throws ScaleError.
CMat detrop(const AnalyticContext& ctx, double s, const PTPoint& p);
std::vector<MC> chart_values(const AnalyticContext& ctx, const CMat& b);

// {z_i, z_j} and {z_i, zbar_j} for all seed positions at b.
struct NumericBrackets {
    std::vector<std::vector<MC>> hol, mixed;
};
NumericBrackets numeric_brackets(const AnalyticContext& ctx, const CMat& b);
std::pair<cd, cd> numeric_bracket(const AnalyticContext& ctx, double s, const PTPoint& p, int i, int j);

// s pi_{K*} in (lambda, phi) coordinates; rows/columns as in ctx.limit.
struct PiS {
    std::vector<std::vector<double>> lambda_phi, lambda_lambda, phi_phi;
};
PiS pi_s_in_coordinates(const AnalyticContext& ctx, double s, const PTPoint& p);

struct BracketSeries {
    std::string name;
    std::vector<double> deviation;  // one per grid value
    int used = 0;                   // samples above the noise floor
    double slope = 0;
};

struct ConvergenceReport {
    std::vector<double> s_grid;
    double delta = 0;
    std::vector<BracketSeries> brackets;  // only those with at least two usable samples
    std::vector<double> sup_deviation;
    double sup_slope = 0;
    bool inconclusive = false;
    bool pass = false;
};

constexpr double kNoiseFloor = 1e-13;

ConvergenceReport convergence_fit(const AnalyticContext& ctx, const PTPoint& p, const std::vector<double>& s_grid);

}  // namespace cc
