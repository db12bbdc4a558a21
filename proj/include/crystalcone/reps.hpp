#pragma once

#include "crystalcone/cartan.hpp"

#include <map>

namespace cc {

struct CharacterTable {
    Weight lambda;
    std::map<Weight, long> mults;  // only nonzero multiplicities

    long multiplicity(const Weight& nu) const;
    long total() const;
};

Z weyl_dim(const CartanDatum& g, const Weight& lambda);
CharacterTable freudenthal(const CartanDatum& g, const Weight& lambda);

// Dominant representative of the W-orbit.
Weight dominant_conjugate(const CartanDatum& g, const Weight& w);

}  // namespace cc
