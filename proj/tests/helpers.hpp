#pragma once

#include "crystalcone/rational.hpp"

#include <initializer_list>
#include <random>

inline cc::QVec qv(std::initializer_list<long> v) {
    cc::QVec out;
    for (long x : v) out.push_back(cc::Q(x));
    return out;
}

inline cc::QVec random_weight(std::mt19937& rng, int r, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    cc::QVec out(r);
    for (auto& x : out) x = d(rng);
    return out;
}
