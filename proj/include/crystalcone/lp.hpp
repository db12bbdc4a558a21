#pragma once

#include "crystalcone/linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cc {

// a.x + c, read as ">= 0" or "== 0" depending on where it sits.
struct Affine {
    QVec a;
    Q c;
    Q eval(const QVec& x) const { return dot(a, x) + c; }
    bool operator==(const Affine& o) const { return a == o.a && c == o.c; }
    bool operator<(const Affine& o) const { return a != o.a ? a < o.a : c < o.c; }
};

// {x : ge_i(x) >= 0, eq_j(x) == 0}
struct HSystem {
    int dim = 0;
    std::vector<Affine> ge, eq;

    bool contains(const QVec& x) const;
    bool strictly_contains(const QVec& x) const;  // strict on every inequality
};

enum class LPStatus { Optimal, Infeasible, Unbounded };
const char* lp_status_name(LPStatus s);

struct LPResult {
    LPStatus status = LPStatus::Infeasible;
    QVec x;
    Q value;
};

// Exact two-phase simplex with Bland's rule.
LPResult lp_optimize(const HSystem& s, const QVec& objective, bool maximize);

// y >= 0 on ge rows and free z on eq rows with sum y_i a_i + sum z_j e_j = 0 and
// sum y_i c_i + sum z_j f_j < 0: no x can satisfy the system.
struct FarkasCertificate {
    QVec y, z;
    Q value;  // sum y_i c_i + sum z_j f_j (negative)
};
std::optional<FarkasCertificate> infeasibility_certificate(const HSystem& s);
bool verify_farkas(const HSystem& s, const FarkasCertificate& f);

// True iff h >= 0 on every point of s (vacuously when s is empty).
bool implies(const HSystem& s, const Affine& h);

// A point maximising the smallest inequality slack (capped at 1); slack > 0 means
// the relative interior (within the equations) is nonempty.
struct InteriorPoint {
    bool feasible = false;
    QVec x;
    Q slack;
};
InteriorPoint chebyshev_like_point(const HSystem& s);

std::string to_string(const Affine& h, const std::vector<std::string>& names = {});

}  // namespace cc
