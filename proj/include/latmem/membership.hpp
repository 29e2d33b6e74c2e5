#pragma once

#include "latmem/diophantine.hpp"
#include "latmem/flatness.hpp"

namespace latmem {

// Coordinate change x -> vbar (x - v) mapping the affine subspace H onto the
// span of the leading unit vectors, bijectively on integer points.
struct TauTransform {
    std::size_t n, m;
    IntVector v;
    RatMatrix vbar;
    RatMatrix vbar_inv;

    RatVector apply(const RatVector& x) const;
    RatVector apply_inverse(const RatVector& y) const;
};

// nullopt when H contains no integer point at all (the driver answers "no").
std::optional<TauTransform> build_tau(const AffineSubspace& h, std::size_t n);

struct MembershipConfig {
    bool no_replacement = false;    // skip Frank-Tardos preprocessing
    std::size_t max_dimension = 8;  // refuse larger instances
    long rounding_bits = 0;         // forwarded to the ellipsoid method
};

struct MembershipStats {
    std::uint64_t recursive_calls = 0;
    std::uint64_t flatness_calls = 0;
    std::size_t max_coeff_bits = 0;  // over replacement-generated hyperplanes
    Int n_param = 0;                 // ball parameter N of the instance
};

// Decides whether the body intersected with the affine subspace contains an
// integer point. The body is full-dimensional in R^na, na its active
// dimension; H lives in the same space.
bool membership(const ConvexBody& body, const AffineSubspace& h, const MembershipConfig& cfg = {},
                MembershipStats* stats = nullptr);

// Lattice membership: pulls the body back along the lattice basis (columns)
// and decides membership of Z^rank.
bool lmp_solve(const ConvexBody& body, const LatticeBasis& lattice,
               const MembershipConfig& cfg = {}, MembershipStats* stats = nullptr);

}  // namespace latmem
