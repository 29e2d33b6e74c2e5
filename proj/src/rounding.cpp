#include "latmem/rounding.hpp"

namespace latmem {

Rat rho_impl(std::size_t m) { return Rat(isqrt_ceil(16 * pow_int(Int(m), 3))); }

namespace {

constexpr std::uint64_t kEnumBudget = 20000;

// Lower bracket s of sqrt(x) with s^2 >= x * (255/256)^2.
Rat sqrt_lower_rel(const Rat& x) {
    check(x > 0, "sqrt_lower_rel: positive argument required");
    Rat rel_sq = make_rat(255 * 255, 256 * 256);
    for (unsigned long bits = 8;; bits *= 2) {
        Rat lo = sqrt_bracket(x, bits).lo;
        if (lo * lo >= x * rel_sq) return lo;
        check(bits < 1u << 20, "sqrt_lower_rel: no convergence");
    }
}

Rat round_to_grid(const Rat& x, const Int& den) { return make_rat(round_rat(x * Rat(den)), den); }

// One shallow-cut ellipsoid iteration state: maintains E(d, c) ⊇ body with
// certified rational rounding. Cuts use the minimal ellipsoid around the cap
// E ∩ {<a, x> <= level}, with the cap depth bracketed rationally; every cut
// shrinks det(d) by a factor bounded away from 1.
class ShallowCut {
  public:
    ShallowCut(std::size_t m, RatMatrix d0, RatVector c0, long bits_cfg)
        : m_(m), d_(std::move(d0)), c_(std::move(c0)) {
        check(m_ >= 2, "ShallowCut: dimension >= 2 required");
        det_ = rat_det(d_);
        check(det_ > 0, "ShallowCut: initial matrix not positive definite");
        Int m1 = Int(m_) + 1;
        beta_ = make_rat(1, m1);
        delta_ = make_rat(1, 16 * m1 * m1 * m1 * m1);
        infl_pow_ = pow_rat(1 + delta_, 2 * m_);
        // worst-case multiplier (cap depth = beta); deeper cuts only improve
        check(infl_pow_ * step_multiplier(beta_) < 1,
              "ShallowCut: inflation exceeds the shallow-cut volume gain");
        bits_base_ = bits_cfg > 0 ? bits_cfg : 64 * long(m_);
    }

    const RatMatrix& d() const { return d_; }
    const RatVector& c() const { return c_; }
    const Rat& det() const { return det_; }
    const Rat& beta() const { return beta_; }

    // det(D') / det(D) for a cut at relative depth h (level = <a,c> + h*sqrt(t2)).
    Rat step_multiplier(const Rat& h) const {
        Rat zeta = Rat(Int(m_) * Int(m_)) * (1 - h * h) / Rat(Int(m_) * Int(m_) - 1);
        Rat tau = (1 - Rat(Int(m_)) * h) / Rat(Int(m_) + 1);
        Rat sigma = 2 * tau / (1 - h);
        return pow_rat(zeta, m_) * (1 - sigma);
    }

    // Applies the cut E ∩ {<a, x> <= level}; the halfspace must contain the
    // body. Returns false when it misses the ellipsoid entirely (certified
    // empty body).
    bool cut(const RatVector& a, const Rat& level) {
        Rat t2 = dot(a, d_ * a);
        check(t2 > 0, "ShallowCut: degenerate cut direction");
        Rat u = level - dot(a, c_);
        if (u < 0 && u * u > t2) return false;  // halfspace strictly misses E

        // Rational upper bracket h >= u / sqrt(t2), clamped into [-1/2, beta].
        SqrtBracket root = sqrt_bracket(t2, 16);
        Rat h = u >= 0 ? u / root.lo : u / root.hi;
        if (h > beta_) h = beta_;
        if (h < make_rat(-1, 2)) h = make_rat(-1, 2);

        RatVector z = d_ * a;
        Rat tau = (1 - Rat(Int(m_)) * h) / Rat(Int(m_) + 1);
        Rat sigma = 2 * tau / (1 - h);
        Rat zeta = Rat(Int(m_) * Int(m_)) * (1 - h * h) / Rat(Int(m_) * Int(m_) - 1);
        Rat mult = pow_rat(zeta, m_) * (1 - sigma);

        RatMatrix dstar(m_, m_);
        Rat f = sigma / t2;
        for (std::size_t i = 0; i < m_; ++i)
            for (std::size_t j = 0; j < m_; ++j) dstar(i, j) = zeta * (d_(i, j) - f * z[i] * z[j]);
        Rat det_star = mult * det_;
#ifndef NDEBUG
        check(rat_det(dstar) == det_star, "ShallowCut: determinant identity violated");
#endif

        // Replace 1/sqrt(t2) in the center update by a rational approximation
        // tight enough for a third of the inflation budget, measured in the
        // dstar^{-1} norm where z^T dstar^{-1} z = t2 / (zeta (1 - sigma)).
        Rat budget = delta_ * delta_ / 36;
        Rat denom_bound = budget * zeta * (1 - sigma);
        Rat sinv, kappa;
        for (unsigned long bits = 16;; bits *= 2) {
            SqrtBracket br = sqrt_bracket(t2, bits);
            sinv = 1 / br.hi;
            kappa = 1 / br.lo - sinv;
            if (tau * tau * kappa * kappa * t2 <= denom_bound) break;
            check(bits < 1u << 24, "ShallowCut: sqrt refinement diverged");
        }
        RatVector c_raw = c_;
        for (std::size_t i = 0; i < m_; ++i) c_raw[i] -= tau * sinv * z[i];

        // Entry rounding to denominator 2^bits with the bump m*eps*I keeping
        // dstar dominated; lambda_min(dstar) >= det/trace^{m-1} guards both
        // the rounded-center error and the determinant blowup.
        Rat trace(0);
        for (std::size_t i = 0; i < m_; ++i) trace += dstar(i, i);
        Rat lmin_lb = det_star / pow_rat(trace, m_ - 1);
        long bits = bits_base_;
        for (;; bits *= 2) {
            Rat eps = make_rat(1, pow_int(2, (unsigned long)bits));
            bool center_ok = Rat(Int(m_)) * eps * eps / lmin_lb <= budget;
            bool matrix_ok = 2 * Rat(Int(m_)) * eps / lmin_lb <= delta_;
            if (center_ok && matrix_ok) break;
            check(bits < (1l << 24), "ShallowCut: rounding precision diverged");
        }
        Int den = pow_int(2, (unsigned long)bits);
        Rat eps = make_rat(1, den);
        RatMatrix dhat(m_, m_);
        for (std::size_t i = 0; i < m_; ++i) {
            for (std::size_t j = i; j < m_; ++j) {
                dhat(i, j) = round_to_grid(dstar(i, j), den);
                dhat(j, i) = dhat(i, j);
            }
            dhat(i, i) += Rat(Int(m_)) * eps;
        }
        for (std::size_t i = 0; i < m_; ++i) c_raw[i] = round_to_grid(c_raw[i], den);

        Rat infl = 1 + delta_;
        for (std::size_t i = 0; i < m_; ++i)
            for (std::size_t j = 0; j < m_; ++j) dhat(i, j) *= infl;

        Rat det_new = rat_det(dhat);
        check(det_new > 0 && det_new <= infl_pow_ * mult * det_,
              "ShallowCut: certified volume shrink violated");
        d_ = std::move(dhat);
        c_ = std::move(c_raw);
        det_ = det_new;
        return true;
    }

  private:
    std::size_t m_;
    RatMatrix d_;
    RatVector c_;
    Rat det_, beta_, delta_, infl_pow_;
    long bits_base_;
};

// Integer-decision shortcut: enumerate Z^m ∩ E(d, c) and test membership.
// nullopt when the node budget ran out.
template <class Contains>
std::optional<RoundingResult> decide_by_enumeration(const RatMatrix& d, const RatVector& c,
                                                    const Contains& contains) {
    RatMatrix q = rat_inverse(d);
    Rat bound(1);
    std::optional<IntVector> hit;
    bool complete = enumerate_quadratic(q, c, bound, kEnumBudget,
                                        [&](const IntVector& z, const Rat&) {
                                            if (!hit && contains(z)) hit = z;
                                        });
    if (hit) return RoundingResult::found(*hit);
    if (!complete) return std::nullopt;
    return RoundingResult::no_integer_point();
}

IntVector rounded_center(const RatVector& c) {
    IntVector z(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) z[i] = round_rat(c[i]);
    return z;
}

RoundingResult finish_sandwich(const RatMatrix& d, const RatVector& c, const Rat& omega,
                               std::size_t m) {
    RatMatrix din = d;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) din(i, j) *= omega;
    Rat rho = rho_impl(m);
    check(rho * rho * omega >= 1, "rounding: outer containment factor violated");
    return RoundingResult::sandwich(Ellipsoid(din, c), rho);
}

struct PolytopeInterval {
    bool empty;
    Rat lo, hi;
};

PolytopeInterval interval_of_1d(const Polytope& p) {
    PolytopeInterval r{false, Rat(0), Rat(0)};
    bool has_lo = false, has_hi = false;
    for (std::size_t i = 0; i < p.constraints(); ++i) {
        Int a = p.a(i, 0);
        if (a == 0) {
            if (p.b[i] < 0) r.empty = true;
            continue;
        }
        Rat bound = make_rat(p.b[i], a);
        if (a > 0) {
            if (!has_hi || bound < r.hi) r.hi = bound;
            has_hi = true;
        } else {
            if (!has_lo || bound > r.lo) r.lo = bound;
            has_lo = true;
        }
    }
    check(has_lo && has_hi, "round_polytope: 1-dimensional polytope is unbounded");
    if (r.lo > r.hi) r.empty = true;
    return r;
}

RoundingResult round_polytope_impl(const Polytope& p, const Rat& det_floor, bool floor_is_empty,
                                   const RoundingConfig& cfg) {
    std::size_t n = p.dim();
    check(n >= 1, "round_polytope: empty dimension");
    auto empty_result = [&]() -> RoundingResult {
        if (cfg.decide_integer || floor_is_empty) return RoundingResult::no_integer_point();
        throw Degenerate();
    };
    if (n == 1) {
        PolytopeInterval iv = interval_of_1d(p);
        if (iv.empty || iv.lo == iv.hi) {
            if (cfg.decide_integer && !iv.empty && is_integer(iv.lo)) {
                IntVector z{Int(iv.lo.get_num())};
                if (p.contains(z)) return RoundingResult::found(z);
            }
            return empty_result();
        }
        Rat half = (iv.hi - iv.lo) / 2;
        RatMatrix d(1, 1);
        d(0, 0) = half * half;
        return RoundingResult::sandwich(Ellipsoid(d, {(iv.lo + iv.hi) / 2}), Rat(1));
    }

    // Rows with zero normal are vacuous when satisfiable and certify
    // emptiness otherwise (transformed slices can produce them).
    for (std::size_t i = 0; i < p.constraints(); ++i) {
        bool zero = true;
        for (std::size_t j = 0; j < n && zero; ++j) zero = p.a(i, j) == 0;
        if (zero && p.b[i] < 0) return empty_result();
    }

    // Canonicalize translation: recenter at the rounded least-squares point
    // of the constraint system. Integer translates then run identically, and
    // the returned sandwich translates back exactly.
    IntVector anchor(n, Int(0));
    {
        RatMatrix at = to_rat(p.a);
        RatMatrix gram_a = at.transposed() * at;
        if (rat_det(gram_a) != 0) {
            RatVector atb(n, Rat(0));
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t i = 0; i < p.constraints(); ++i)
                    atb[j] += Rat(p.a(i, j)) * Rat(p.b[i]);
            auto ls = rat_solve(gram_a, atb);
            if (ls)
                for (std::size_t i = 0; i < n; ++i) anchor[i] = round_rat((*ls)[i]);
        }
    }
    bool anchored = !is_zero(anchor);
    Polytope work = p;
    if (anchored) {
        IntVector shift = p.a * anchor;
        IntVector b2 = p.b;
        for (std::size_t i = 0; i < p.constraints(); ++i) b2[i] -= shift[i];
        work = Polytope(p.a, std::move(b2));
    }
    auto untranslate = [&](RoundingResult res) {
        if (!anchored) return res;
        if (res.kind == RoundingKind::Sandwich)
            for (std::size_t i = 0; i < n; ++i) res.inner->c[i] += Rat(anchor[i]);
        if (res.kind == RoundingKind::FoundIntegerPoint)
            for (std::size_t i = 0; i < n; ++i) res.witness[i] += anchor[i];
        return res;
    };

    const Polytope& q = work;
    Int r = size_of(q);
    RatMatrix d0 = RatMatrix::identity(n);
    Rat radius_sq = Rat(pow_int(Int(n), n + 1) * pow_int(r, 2 * n));
    for (std::size_t i = 0; i < n; ++i) d0(i, i) = radius_sq;
    ShallowCut state(n, d0, RatVector(n, Rat(0)), cfg.rounding_bits);

    if (cfg.decide_integer) {
        IntVector z = rounded_center(state.c());
        if (q.contains(z)) return untranslate(RoundingResult::found(z));
    }

    Rat beta_sq = state.beta() * state.beta();
    Rat last_enum_det(-1);
    for (;;) {
        if (state.det() < det_floor) return empty_result();
        if (cfg.decide_integer && state.det() <= 1 &&
            (last_enum_det < 0 || 16 * state.det() <= last_enum_det)) {
            last_enum_det = state.det();
            auto res = decide_by_enumeration(state.d(), state.c(),
                                             [&](const IntVector& z) { return q.contains(z); });
            if (res) return untranslate(*res);
        }
        bool cut_done = false;
        for (std::size_t i = 0; i < q.constraints() && !cut_done; ++i) {
            RatVector a(n);
            bool zero = true;
            for (std::size_t j = 0; j < n; ++j) {
                a[j] = Rat(q.a(i, j));
                if (a[j] != 0) zero = false;
            }
            if (zero) continue;
            Rat slack = Rat(q.b[i]) - dot(a, state.c());
            Rat t2 = dot(a, state.d() * a);
            bool violated = slack < 0 || beta_sq * t2 > slack * slack;
            if (violated) {
                if (!state.cut(a, Rat(q.b[i]))) return empty_result();
                cut_done = true;
            }
        }
        if (!cut_done) return untranslate(finish_sandwich(state.d(), state.c(), beta_sq, n));
    }
}

// Largest/smallest integer k with F(k) < 0 via convex ternary search over a
// certified range; the 1-dimensional lp-body decision.
RoundingResult decide_lp_1d(const LpBody& body) {
    Rat r2 = lp_circumscribed_radius_sq(body);
    Rat c0 = lp_circumscribed_center(body)[0];
    Int lo = ceil_add_sqrt(c0, r2, -1);
    Int hi = floor_add_sqrt(c0, r2, +1);
    if (lo > hi) return RoundingResult::no_integer_point();
    auto value = [&](const Int& k) { return lp_f_value(body, {Rat(k)}); };
    while (hi - lo >= 2) {
        Int mid1 = lo + (hi - lo) / 3;
        Int mid2 = hi - (hi - lo) / 3;
        if (mid1 == mid2) mid2 += 1;
        if (value(mid1) <= value(mid2))
            hi = mid2 - 1 < mid1 ? mid1 : mid2 - 1;
        else
            lo = mid1 + 1;
    }
    Int best = lo;
    if (hi != lo && value(hi) < value(lo)) best = hi;
    if (value(best) < 0) return RoundingResult::found({best});
    return RoundingResult::no_integer_point();
}

}  // namespace

RoundingResult round_polytope(const Polytope& p, const RoundingConfig& cfg) {
    std::size_t n = p.dim();
    Int r = size_of(p);
    // Nonempty interior ⟹ the barycenter of n+1 affinely independent
    // vertices has slack >= 1/((n+1)Δ) on every constraint, Δ the Hadamard
    // bound; below this determinant the input cannot be full-dimensional.
    Rat r_floor = make_rat(1, (Int(n) + 1) * isqrt_ceil(pow_int(Int(n), n + 1)) *
                                  pow_int(r, n + 1));
    return round_polytope_impl(p, pow_rat(r_floor, 2 * n), false, cfg);
}

RoundingResult round_polytope_with_floor(const Polytope& p, const Rat& det_floor,
                                         const RoundingConfig& cfg) {
    return round_polytope_impl(p, det_floor, true, cfg);
}

RoundingResult round_lp_body(const LpBody& body, const RoundingConfig& cfg) {
    std::size_t m = body.m;
    if (m == 1) return decide_lp_1d(body);

    Rat r2 = lp_circumscribed_radius_sq(body);
    RatVector c0 = lp_circumscribed_center(body);
    Int s = size_of(body);
    Rat r_out = sqrt_bracket(r2, 8).hi + Rat(Int(m)) * Rat(s);
    Rat r_in = lp_volume_floor(body, s, r_out);
    Rat det_floor = pow_rat(r_in, 2 * m);

    RatMatrix d0 = RatMatrix::identity(m);
    for (std::size_t i = 0; i < m; ++i) d0(i, i) = r2;
    ShallowCut state(m, d0, c0, cfg.rounding_bits);

    if (cfg.decide_integer) {
        IntVector z = rounded_center(state.c());
        if (body.contains(z)) return RoundingResult::found(z);
    }

    Rat probe_scale_sq = pow_rat(make_rat(255, 256), 2);
    Rat omega = state.beta() * state.beta() * probe_scale_sq / Rat(Int(m));
    Rat last_enum_det(-1);
    for (;;) {
        if (state.det() < det_floor) return RoundingResult::no_integer_point();
        if (cfg.decide_integer && state.det() <= 1 &&
            (last_enum_det < 0 || 16 * state.det() <= last_enum_det)) {
            last_enum_det = state.det();
            auto res = decide_by_enumeration(
                state.d(), state.c(), [&](const IntVector& z) { return body.contains(z); });
            if (res) return *res;
        }

        // Conjugate-axis probes q = c ± beta * s_i * L e_i, strictly inside
        // beta * E; if all lie in the body, the cross-polytope they span
        // contains E(beta^2 (255/256)^2 / m * D, c).
        Ldlt f = ldlt(state.d());
        bool cut_done = false;
        for (std::size_t i = 0; i < m && !cut_done; ++i) {
            Rat si = sqrt_lower_rel(f.d[i]);
            for (int sign : {+1, -1}) {
                RatVector q = state.c();
                Rat scale = state.beta() * si * sign;
                for (std::size_t j = 0; j < m; ++j) q[j] += scale * f.l(j, i);
                if (lp_f_value(body, q) < 0) continue;
                Separation sep = lp_separate_ex(body, q);
                check(sep.kind != SeparationKind::Inside, "round_lp_body: probe inconsistency");
                if (sep.kind == SeparationKind::EmptyBody)
                    return RoundingResult::no_integer_point();
                // The probe lies in beta*E, so the halfspace through it is at
                // most beta-shallow; verify, then cut at the probe's level.
                RatVector diff(m);
                for (std::size_t j = 0; j < m; ++j) diff[j] = q[j] - state.c()[j];
                Rat depth = dot(sep.g, diff);
                Rat g_t2 = dot(sep.g, state.d() * sep.g);
                check(leq_sqrt(depth, state.beta() * state.beta() * g_t2),
                      "round_lp_body: probe left the shallow band");
                if (!state.cut(sep.g, dot(sep.g, q)))
                    return RoundingResult::no_integer_point();
                cut_done = true;
                break;
            }
        }
        if (!cut_done) return finish_sandwich(state.d(), state.c(), omega, m);
    }
}

}  // namespace latmem
