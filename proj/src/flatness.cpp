#include "latmem/flatness.hpp"

namespace latmem {

namespace {

FlatnessOutcome direction_outcome(IntVector d, Int k_min, Int k_max) {
    return FlatnessOutcome{FlatnessKind::Direction, std::move(d), std::move(k_min),
                           std::move(k_max)};
}

FlatnessOutcome contains_integer() {
    return FlatnessOutcome{FlatnessKind::ContainsInteger, {}, Int(0), Int(0)};
}

FlatnessOutcome no_integer() { return FlatnessOutcome{FlatnessKind::NoInteger, {}, Int(0), Int(0)}; }

// Width test plus rho-scaled slice interval for a sandwiched body.
FlatnessOutcome flatness_of_inner(const Ellipsoid& inner, const Rat& rho, std::size_t m) {
    ShortestFormVector sv = shortest_form_vector(inner.d);
#ifndef NDEBUG
    Int sz = size_of(inner.d);
    check(norm2_sq(sv.d) <= Rat(pow_int(Int(m), m + 2) * pow_int(sz, m + 1)),
          "flatness: direction length bound violated");
#endif
    if (4 * sv.value >= Rat(Int(m) * Int(m))) return contains_integer();
    Rat center = dot(to_rat(sv.d), inner.c);
    Rat radicand = rho * rho * sv.value;
    Int k_min = ceil_add_sqrt(center, radicand, -1);
    Int k_max = floor_add_sqrt(center, radicand, +1);
    return direction_outcome(std::move(sv.d), std::move(k_min), std::move(k_max));
}

}  // namespace

FlatnessOutcome flatness_from_rounding(const RoundingResult& r, std::size_t m) {
    switch (r.kind) {
        case RoundingKind::FoundIntegerPoint:
            return contains_integer();
        case RoundingKind::NoIntegerPoint:
            return no_integer();
        case RoundingKind::Sandwich:
            return flatness_of_inner(*r.inner, r.rho, m);
    }
    throw InternalError("flatness_from_rounding: bad kind");
}

FlatnessOutcome flatness_ellipsoid(const Ellipsoid& e) {
    return flatness_of_inner(e, Rat(1), e.dim());
}

FlatnessOutcome flatness_polytope(const Polytope& p, const RoundingConfig& cfg) {
    std::size_t n = p.dim();
    if (n == 1) {
        // Exact endpoints; an empty Direction interval encodes "no integer".
        bool has_lo = false, has_hi = false;
        Rat lo(0), hi(0);
        for (std::size_t i = 0; i < p.constraints(); ++i) {
            Int a = p.a(i, 0);
            if (a == 0) {
                if (p.b[i] < 0) return direction_outcome({Int(1)}, Int(1), Int(0));
                continue;
            }
            Rat bound = make_rat(p.b[i], a);
            if (a > 0) {
                if (!has_hi || bound < hi) hi = bound;
                has_hi = true;
            } else {
                if (!has_lo || bound > lo) lo = bound;
                has_lo = true;
            }
        }
        check(has_lo && has_hi, "flatness_polytope: unbounded 1-dimensional polytope");
        if (lo <= hi && ceil_rat(lo) <= floor_rat(hi)) return contains_integer();
        return direction_outcome({Int(1)}, Int(1), Int(0));
    }
    return flatness_from_rounding(round_polytope(p, cfg), n);
}

FlatnessOutcome flatness_lp(const LpBody& body, const RoundingConfig& cfg) {
    // ContainsInteger is a legal outcome here, so the integer-decision
    // shortcut is always worth running; it also settles fat centered bodies
    // that the sqrt(m)-lossy inner sandwich would push into recursion.
    RoundingConfig with_decide = cfg;
    with_decide.decide_integer = true;
    return flatness_from_rounding(round_lp_body(body, with_decide), body.m);
}

}  // namespace latmem
