#pragma once

#include "latmem/rounding.hpp"

namespace latmem {

enum class FlatnessKind {
    ContainsInteger,
    NoInteger,  // lp-bodies (and the membership-internal polytope path) only
    Direction,
};

struct FlatnessOutcome {
    FlatnessKind kind;
    IntVector direction;  // Direction: nonzero integer vector
    Int k_min, k_max;     // Direction: may be empty (k_min > k_max)
};

// Exact flatness for an ellipsoid: width test 2*sqrt(val) >= m done on
// squares, endpoints floor(<d,c> +- sqrt(val)).
FlatnessOutcome flatness_ellipsoid(const Ellipsoid& e);

// Flatness via an approximate Loewner-John sandwich; the Direction interval
// is widened to the rho-scaled ellipsoid, so its length is at most rho*m.
FlatnessOutcome flatness_polytope(const Polytope& p, const RoundingConfig& cfg = {});
FlatnessOutcome flatness_lp(const LpBody& body, const RoundingConfig& cfg = {});

// Shared post-processing of a rounding result (used by the membership driver
// with its own rounding calls).
FlatnessOutcome flatness_from_rounding(const RoundingResult& r, std::size_t m);

}  // namespace latmem
