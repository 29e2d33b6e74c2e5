#pragma once

#include "latmem/matrix.hpp"

namespace latmem {

// Column-style Hermite normal form: H = M * U with U unimodular. Pivot
// columns come first, each pivot positive, entries to its left in the pivot
// row reduced into [0, pivot); columns beyond the rank are zero.
struct HnfResult {
    IntMatrix h;
    IntMatrix u;
    std::size_t rank = 0;
};
HnfResult hnf(const IntMatrix& m);

// Basis (as columns) of {z in Z^cols : M z = 0}; 0-column matrix if trivial.
IntMatrix integer_kernel(const IntMatrix& m);

// LLL reduction of a quadratic form: returns unimodular U such that U^T G U
// is delta-LLL-reduced (size-reduced Gram-Schmidt, Lovasz condition), all in
// exact rational arithmetic. G must be the Gram matrix of independent vectors.
IntMatrix lll_gram(const RatMatrix& g, const Rat& delta);

struct LllResult {
    RatMatrix basis;  // B * U
    IntMatrix u;
};
LllResult lll_reduce(const RatMatrix& b, const Rat& delta);

RatMatrix gram(const RatMatrix& b);

}  // namespace latmem
