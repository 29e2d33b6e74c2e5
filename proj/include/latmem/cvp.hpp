#pragma once

#include "latmem/membership.hpp"

namespace latmem {

// lp norms (integer p >= 1, or infinity) and polyhedral norms given in the
// symmetric half-presentation {x : |<h_i, x>| <= beta_i}.
struct NormSpec {
    enum class Kind { Lp, LInfinity, Polyhedral };
    Kind kind;
    unsigned long p = 2;
    IntMatrix h;
    IntVector beta;

    static NormSpec lp(unsigned long p_) {
        check(p_ >= 1, "NormSpec: p >= 1 required");
        return NormSpec{Kind::Lp, p_, {}, {}};
    }
    static NormSpec linf() { return NormSpec{Kind::LInfinity, 1, {}, {}}; }
    static NormSpec polyhedral(IntMatrix h_, IntVector beta_);
};

// ||x||^k with the enumerable exponent k (= p for lp, 1 otherwise), exact.
Rat norm_pow(const NormSpec& norm, const RatVector& x);
unsigned long norm_power(const NormSpec& norm);

// (k, K) with K * ||x||^k integral on integer vectors.
struct EnumerableNorm {
    unsigned long k;
    Int cap;
};
EnumerableNorm enumerability(const NormSpec& norm);

// Common denominator of the k-th-power value grid on integer vectors
// (lcm of the betas; tighter than the product bound above).
Int norm_grid_denominator(const NormSpec& norm);

// Rational lower bound on c(n) with c(n)||x||_2 <= ||x|| for all x.
Rat norm_euclid_lower_bound(const NormSpec& norm, std::size_t n);

// dist(t, L)^k <= r_pow? Exact; decided through the lattice membership
// machinery on the norm ball.
bool cvp_decision(const IntMatrix& basis, const IntVector& target, const NormSpec& norm,
                  const Rat& r_pow, const MembershipConfig& cfg = {},
                  MembershipStats* stats = nullptr);

// Exact k-th power of the distance, via binary search on the value grid.
Rat cvp_optimize(const IntMatrix& basis, const IntVector& target, const NormSpec& norm,
                 const MembershipConfig& cfg = {}, MembershipStats* stats = nullptr);

struct CvpResult {
    IntVector coeffs;   // lattice coordinates of the closest vector
    IntVector closest;  // ambient closest vector
    Rat distance_pow;   // ||target - closest||^k, exact
};

// Search version by the lattice-doubling parity construction.
CvpResult cvp_search(const IntMatrix& basis, const IntVector& target, const NormSpec& norm,
                     const MembershipConfig& cfg = {}, MembershipStats* stats = nullptr);

}  // namespace latmem
