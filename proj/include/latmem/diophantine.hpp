#pragma once

#include "latmem/lattice.hpp"

namespace latmem {

// q <= Q_bound(dim, N) = 2^{ceil(dim(dim+1)/4)+1} N^dim for the LLL-based
// simultaneous approximation below.
Int sim_dioph_q_bound(std::size_t dim, const Int& n_param);

struct SimDiophApprox {
    Int q;        // 1 <= q <= sim_dioph_q_bound(alpha.size(), N)
    IntVector p;  // |q*alpha_i - p_i| < 1/N, exactly
};
SimDiophApprox simultaneous_approx(const RatVector& alpha, const Int& n_param);

// Frank-Tardos decomposition: w = sum chi_i * wbar_i with chi_i > 0, at most
// dim(w) rounds, integer wbar_i with ||wbar_i||_inf <= ft_coeff_bound, and
// <z, w> = 0  <=>  <z, wbar_i> = 0 for all i, for every integer z with
// ||z||_1 <= N - 1.
struct FtTerm {
    IntVector wbar;
    Rat chi;
};
std::vector<FtTerm> frank_tardos_decompose(const RatVector& w, const Int& n_param);

// Coefficient bound for decompositions of dim-dimensional vectors: only the
// non-integer coordinates of the normalized residual are ever approximated,
// and the max-norm coordinate is exact, so at most dim-1 coordinates enter
// the approximation lattice.
Int ft_coeff_bound(std::size_t dim, const Int& n_param);

struct ReplacementSet {
    std::vector<Hyperplane> planes;  // nonempty; normals independent jointly with H
};

// Rewrites H_{k,d} relative to the subspace H as small hyperplanes that agree
// with it on all integer z with ||z||_1 <= N-1. nullopt certifies that no such
// z in H satisfies <d, z> = k (the decomposed system is infeasible).
std::optional<ReplacementSet> replace_hyperplane(const AffineSubspace& h, const IntVector& d,
                                                 const Int& k, const Int& n_param);

}  // namespace latmem
