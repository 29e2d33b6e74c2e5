#pragma once

#include "latmem/geometry.hpp"

namespace latmem {

// Implemented sandwich factor: ceil(4 m sqrt(m)). The conjugate-axis probe
// certificate costs a sqrt(m) factor over the best-known constants, but it
// is verifiable entirely in rational arithmetic.
Rat rho_impl(std::size_t m);

struct RoundingConfig {
    // Denominator bits for per-step entry rounding; 0 means 64*m. Raised
    // adaptively whenever the certified-containment budget needs more.
    long rounding_bits = 0;
    // Integer-decision shortcut: once the outer ellipsoid is small, enumerate
    // its integer points and decide directly. Used by the membership driver;
    // off by default so the public operations keep their two-outcome shape.
    bool decide_integer = false;
};

enum class RoundingKind {
    Sandwich,
    NoIntegerPoint,
    FoundIntegerPoint,  // decide_integer shortcut (and 1-dimensional bodies)
};

struct RoundingResult {
    RoundingKind kind;
    std::optional<Ellipsoid> inner;  // Sandwich: inner ⊆ body ⊆ rho * inner
    Rat rho;
    IntVector witness;  // FoundIntegerPoint

    static RoundingResult sandwich(Ellipsoid e, Rat rho_) {
        return RoundingResult{RoundingKind::Sandwich, std::move(e), std::move(rho_), {}};
    }
    static RoundingResult no_integer_point() {
        return RoundingResult{RoundingKind::NoIntegerPoint, std::nullopt, Rat(0), {}};
    }
    static RoundingResult found(IntVector z) {
        return RoundingResult{RoundingKind::FoundIntegerPoint, std::nullopt, Rat(0),
                              std::move(z)};
    }
};

// Shallow-cut rounding of a full-dimensional polytope. Sandwich on success;
// throws Degenerate when the Cramer-bound volume floor is undercut.
RoundingResult round_polytope(const Polytope& p, const RoundingConfig& cfg = {});

// Variant for the membership recursion: slice polytopes arrive +1/2-inflated
// (integer points unchanged), so a volume-floor undercut certifies emptiness
// and yields NoIntegerPoint instead of Degenerate. det_floor is the caller's
// lower bound on det(D) for any nonempty instance.
RoundingResult round_polytope_with_floor(const Polytope& p, const Rat& det_floor,
                                         const RoundingConfig& cfg);

// Oracle-driven rounding of an lp-body. NoIntegerPoint is certified either by
// the volume floor, by an exhausted integer enumeration of a small outer
// ellipsoid, or by an empty-body subgradient certificate.
RoundingResult round_lp_body(const LpBody& body, const RoundingConfig& cfg = {});

}  // namespace latmem
