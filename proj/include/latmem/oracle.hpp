#pragma once

#include "latmem/cvp.hpp"

namespace latmem {

struct EnumerationBudget {
    std::uint64_t max_nodes = 4'000'000;
};

struct OracleCvpResult {
    IntVector coeffs;
    IntVector closest;
    Rat distance_pow;
};

// Exhaustive reference CVP: complete Fincke-Pohst enumeration of all lattice
// vectors within a certified Euclidean radius of the target, exact norm
// comparison, deterministic tie-break (lexicographically smallest ambient
// vector). Rational targets allowed. Throws BudgetExceeded.
OracleCvpResult oracle_cvp(const IntMatrix& basis, const RatVector& target, const NormSpec& norm,
                           const EnumerationBudget& budget = {});

// Exhaustive reference LMP: enumerate all lattice points inside a certified
// circumscribed ball of the body and test exact membership.
bool oracle_lmp(const ConvexBody& body, const LatticeBasis& lattice,
                const EnumerationBudget& budget = {});

}  // namespace latmem
