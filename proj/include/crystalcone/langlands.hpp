#pragma once

#include "crystalcone/polytopes.hpp"

#include <optional>
#include <vector>

namespace cc {

// Psi^t on reduced-chart coordinates (a; z_L): psi_h on the torus block and z_j -> d_{|i_j|} z_j.
struct ComparisonMap {
    CartanDatum datum;
    WeylWord word;
    QMat diag;     // on the z_L block
    QMat h_block;  // psi_h from coweight to weight coordinates
    QMat full;     // block diagonal (h_block, diag), acting on Reduced chart coordinates
};

ComparisonMap comparison_trop(const CartanDatum& g, const WeylWord& word);

// Facet of the target not implied by the transformed source, with a witness point
// of the source where it fails (absent when the LP is unbounded).
struct InclusionFailure {
    int facet = -1;
    std::optional<QVec> witness;
};

struct ConeIsoReport {
    bool forward = false, backward = false;
    std::vector<InclusionFailure> failures_forward, failures_backward;
    bool ok() const { return forward && backward; }
};

// Psi(src) subset dst and Psi^{-1}(dst) subset src, facet by facet through exact LPs.
ConeIsoReport verify_real_cone_isomorphism(const ConeH& src, const ConeH& dst, const QMat& psi);

struct SampleReport {
    int sampled = 0;
    bool injective = true, contained = true, integral = true;
};
// Integral points of the source cone, taken from its highest-weight fibers in order of |lambda|.
SampleReport sample_integral_images(const Chart& src, const Chart& dst, const QMat& psi, int count);

struct DiagramReport {
    bool hw = false, wt = false;
};
// hw_dual * Psi == psi_h * hw and the same for wt, as matrix identities.
DiagramReport check_diagrams(const Chart& g_chart, const Chart& dual_chart, const ComparisonMap& map);

// zeta^t on cluster coordinates: tropicalized chamber minors of the twisted point.
std::vector<TropicalForm> twist_tropical(const CartanDatum& g, const WeylWord& word);

// zeta_dual^t(Psi x) == Psi zeta^t(x) on random rational points, Psi = diag(d_{|i_k|}) over I.
bool verify_twist_compat(const CartanDatum& g, const WeylWord& word, int samples, unsigned seed);

}  // namespace cc
