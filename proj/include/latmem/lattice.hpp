#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "latmem/exact.hpp"

namespace latmem {

struct Hyperplane {
    IntVector normal;  // nonzero
    Int offset;        // {x : <normal, x> = offset}
};

// Intersection of hyperplanes with linearly independent normals; empty list
// means the whole space.
struct AffineSubspace {
    std::vector<Hyperplane> planes;
    std::size_t codim() const { return planes.size(); }
};

struct LatticeBasis {
    RatMatrix b;  // columns generate the lattice
    explicit LatticeBasis(RatMatrix m);
    explicit LatticeBasis(const IntMatrix& m) : LatticeBasis(to_rat(m)) {}
    std::size_t dim() const { return b.rows(); }
    std::size_t rank() const { return b.cols(); }
};

// Enumerates all z in Z^m with (z - center)^T g (z - center) <= bound, g
// symmetric positive definite. `visit` receives z and the exact form value
// and may tighten `bound` (only downward). Returns false when the node
// budget was exhausted before the enumeration completed.
bool enumerate_quadratic(const RatMatrix& g, const RatVector& center, Rat& bound,
                         std::uint64_t max_nodes,
                         const std::function<void(const IntVector&, const Rat&)>& visit);

// Shortest nonzero integer vector of the positive definite form d^T g d,
// with deterministic tie-breaking: lexicographically smallest witness whose
// first nonzero entry is positive.
struct ShortestFormVector {
    IntVector d;
    Rat value;
};
ShortestFormVector shortest_form_vector(const RatMatrix& g);

// (B^T)^{-1} for square nonsingular B.
RatMatrix dual_basis(const RatMatrix& b);

// Basis of the lattice L(B^T) ∩ {w : w_i = 0 for i > m}, for nonsingular
// B in Z^{n x n} and 0 <= m < n. Columns are HNF-normalized.
IntMatrix intersection_basis(const IntMatrix& b, std::size_t m);

// Some integer solution of <d_i, v> = k_i (independent integer normals), or
// nullopt when none exists.
std::optional<IntVector> integer_point_in_subspace(const AffineSubspace& h, std::size_t n);

// Basis of span(B) ∩ Z^n (the saturation of the column lattice of B).
IntMatrix saturation(const IntMatrix& b);

}  // namespace latmem
