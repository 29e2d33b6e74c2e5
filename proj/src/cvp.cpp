#include "latmem/cvp.hpp"

namespace latmem {

NormSpec NormSpec::polyhedral(IntMatrix h_, IntVector beta_) {
    check(h_.rows() == beta_.size() && h_.rows() >= 1, "NormSpec: shape mismatch");
    for (const auto& b : beta_) check(b >= 1, "NormSpec: offsets must be positive integers");
    check(rat_rank(to_rat(h_)) == h_.cols(), "NormSpec: polytope norm must be bounded");
    return NormSpec{Kind::Polyhedral, 1, std::move(h_), std::move(beta_)};
}

unsigned long norm_power(const NormSpec& norm) {
    return norm.kind == NormSpec::Kind::Lp ? norm.p : 1;
}

Rat norm_pow(const NormSpec& norm, const RatVector& x) {
    switch (norm.kind) {
        case NormSpec::Kind::Lp: {
            Rat s(0);
            for (const auto& xi : x) s += pow_rat(abs(xi), norm.p);
            return s;
        }
        case NormSpec::Kind::LInfinity: {
            Rat s(0);
            for (const auto& xi : x) {
                Rat a = abs(xi);
                if (a > s) s = a;
            }
            return s;
        }
        case NormSpec::Kind::Polyhedral: {
            Rat s(0);
            for (std::size_t i = 0; i < norm.h.rows(); ++i) {
                Rat v = abs(dot(norm.h.row(i), x) / Rat(norm.beta[i]));
                if (v > s) s = v;
            }
            return s;
        }
    }
    throw InternalError("norm_pow: bad norm kind");
}

EnumerableNorm enumerability(const NormSpec& norm) {
    switch (norm.kind) {
        case NormSpec::Kind::Lp:
            return EnumerableNorm{norm.p, Int(1)};
        case NormSpec::Kind::LInfinity:
            return EnumerableNorm{1, Int(1)};
        case NormSpec::Kind::Polyhedral: {
            Int prod(1);
            for (const auto& b : norm.beta) prod *= b;
            return EnumerableNorm{1, prod};
        }
    }
    throw InternalError("enumerability: bad norm kind");
}

Int norm_grid_denominator(const NormSpec& norm) {
    if (norm.kind != NormSpec::Kind::Polyhedral) return Int(1);
    Int l(1);
    for (const auto& b : norm.beta) {
        Int r;
        mpz_lcm(r.get_mpz_t(), l.get_mpz_t(), b.get_mpz_t());
        l = r;
    }
    return l;
}

namespace {

// Targets may lie outside span(L): the reduction through the pulled-back
// norm ball decides distances in the ambient norm either way (the appendix
// projection fixtures live exactly there).
void validate_instance(const IntMatrix& basis, const IntVector& target) {
    check(basis.rows() == target.size(), "cvp: basis/target shape mismatch");
    if (rat_rank(to_rat(basis)) != basis.cols()) throw RankDeficient();
}

// Integer coefficients z with basis * z = x, if any.
std::optional<IntVector> lattice_coords(const IntMatrix& basis, const IntVector& x) {
    auto sol = rat_solve(to_rat(basis), to_rat(x));
    if (!sol) return std::nullopt;
    IntVector z(sol->size());
    for (std::size_t i = 0; i < sol->size(); ++i) {
        if (!is_integer((*sol)[i])) return std::nullopt;
        z[i] = (*sol)[i].get_num();
    }
    return z;
}

// Closed ball {x : ||x - t|| <= radius} as a polytope, radius = num/den >= 0.
Polytope polyhedral_ball(const NormSpec& norm, const IntVector& t, const Int& num,
                         const Int& den) {
    std::size_t n = t.size();
    if (norm.kind == NormSpec::Kind::Lp) {
        check(norm.p == 1, "polyhedral_ball: only l1 among lp norms");
        std::size_t rows = std::size_t(1) << n;  // all sign patterns
        IntMatrix a(rows, n);
        IntVector b(rows);
        for (std::size_t mask = 0; mask < rows; ++mask) {
            Int rhs = num;
            for (std::size_t j = 0; j < n; ++j) {
                Int coef = ((mask >> j) & 1) ? Int(1) : Int(-1);
                a(mask, j) = den * coef;
                rhs += den * coef * t[j];
            }
            b[mask] = rhs;
        }
        return Polytope(std::move(a), std::move(b));
    }
    if (norm.kind == NormSpec::Kind::LInfinity) {
        IntMatrix a(2 * n, n);
        IntVector b(2 * n);
        for (std::size_t i = 0; i < n; ++i) {
            a(2 * i, i) = den;
            b[2 * i] = num + den * t[i];
            a(2 * i + 1, i) = -den;
            b[2 * i + 1] = num - den * t[i];
        }
        return Polytope(std::move(a), std::move(b));
    }
    std::size_t rows = norm.h.rows();
    IntMatrix a(2 * rows, n);
    IntVector b(2 * rows);
    for (std::size_t i = 0; i < rows; ++i) {
        Int ht = dot_ii(norm.h.row(i), t);
        for (std::size_t j = 0; j < n; ++j) {
            a(2 * i, j) = den * norm.h(i, j);
            a(2 * i + 1, j) = -den * norm.h(i, j);
        }
        b[2 * i] = num * norm.beta[i] + den * ht;
        b[2 * i + 1] = num * norm.beta[i] - den * ht;
    }
    return Polytope(std::move(a), std::move(b));
}

}  // namespace

bool cvp_decision(const IntMatrix& basis, const IntVector& target, const NormSpec& norm,
                  const Rat& r_pow, const MembershipConfig& cfg, MembershipStats* stats) {
    validate_instance(basis, target);
    if (r_pow < 0) return false;

    // Snap onto the value grid: distances^k on integer vectors live in
    // Z / grid_den, so "<= r_pow" equals "<= floor(r_pow * den) / den".
    Int den = norm_grid_denominator(norm);
    Int j = floor_rat(r_pow * Rat(den));
    if (j < 0) return false;
    if (lattice_coords(basis, target)) return true;
    if (j == 0) return false;

    std::size_t n = target.size();
    LatticeBasis lattice(basis);
    if (norm.kind == NormSpec::Kind::Lp && norm.p >= 2) {
        // Open ball with k-th-power radius (j+1)/den decides the closed grid
        // threshold j/den: no value lies strictly between them.
        LpBody ball(norm.p, RatMatrix::identity(n), to_rat(target), j + 1, den, n);
        return lmp_solve(ball, lattice, cfg, stats);
    }
    return lmp_solve(polyhedral_ball(norm, target, j, den), lattice, cfg, stats);
}

Rat cvp_optimize(const IntMatrix& basis, const IntVector& target, const NormSpec& norm,
                 const MembershipConfig& cfg, MembershipStats* stats) {
    validate_instance(basis, target);
    if (lattice_coords(basis, target)) return Rat(0);
    Int den = norm_grid_denominator(norm);

    // Constructive upper bound: round the least-squares coordinates.
    RatMatrix b_rat = to_rat(basis);
    RatVector btt(basis.cols(), Rat(0));
    for (std::size_t j = 0; j < basis.cols(); ++j)
        for (std::size_t i = 0; i < basis.rows(); ++i)
            btt[j] += Rat(basis(i, j)) * Rat(target[i]);
    auto gamma = rat_solve(gram(b_rat), btt);
    check(gamma.has_value(), "cvp_optimize: least squares failed");
    IntVector z0(basis.cols());
    for (std::size_t i = 0; i < z0.size(); ++i) z0[i] = round_rat((*gamma)[i]);
    IntVector v0 = basis * z0;
    RatVector diff(target.size());
    for (std::size_t i = 0; i < target.size(); ++i) diff[i] = Rat(target[i] - v0[i]);
    Rat ub = norm_pow(norm, diff) * Rat(den);
    check(is_integer(ub), "cvp_optimize: off-grid norm value");
    Int hi = ub.get_num();
    check(hi >= 1, "cvp_optimize: rounding candidate collapsed");

    // Binary search for the least grid index with a positive decision.
    Int lo(1);
    while (lo < hi) {
        Int mid = (lo + hi) / 2;
        if (cvp_decision(basis, target, norm, make_rat(mid, den), cfg, stats))
            hi = mid;
        else
            lo = mid + 1;
    }
    return make_rat(lo, den);
}

// Rational lower bound on c(n) with c(n) ||x||_2 <= ||x||; polyhedral norms
// use the exact circumscribed radius of the unit-ball vertices.
Rat norm_euclid_lower_bound(const NormSpec& norm, std::size_t n) {
    switch (norm.kind) {
        case NormSpec::Kind::Lp:
            if (norm.p <= 2) return Rat(1);
            return make_rat(1, isqrt_ceil(Int(n)));
        case NormSpec::Kind::LInfinity:
            return make_rat(1, isqrt_ceil(Int(n)));
        case NormSpec::Kind::Polyhedral: {
            Polytope ball = polyhedral_ball(norm, IntVector(n, Int(0)), Int(1), Int(1));
            Rat max_sq(0);
            try {
                for (const auto& v : polytope_vertices(ball)) {
                    Rat d2 = norm2_sq(v);
                    if (d2 > max_sq) max_sq = d2;
                }
            } catch (const BudgetExceeded&) {
                max_sq = Rat(0);
            }
            if (max_sq == 0) {
                Int t_box = polytope_bounds(ball).t_box;  // fallback: box bound
                return make_rat(1, isqrt_ceil(Int(n)) * t_box);
            }
            return 1 / sqrt_bracket(max_sq, 8).hi;
        }
    }
    throw InternalError("norm_euclid_lower_bound: bad norm kind");
}

CvpResult cvp_search(const IntMatrix& basis, const IntVector& target, const NormSpec& norm,
                     const MembershipConfig& cfg, MembershipStats* stats) {
    validate_instance(basis, target);
    std::size_t n = target.size(), m = basis.cols();
    unsigned long k = norm_power(norm);

    Rat mu_pow = cvp_optimize(basis, target, norm, cfg, stats);
    if (mu_pow == 0) {
        auto z = lattice_coords(basis, target);
        check(z.has_value(), "cvp_search: zero distance without coordinates");
        return CvpResult{*z, target, Rat(0)};
    }

    // Doubling rounds: i_max is the least i with (2^{i-1} c)^k > mu^k, after
    // which coordinatewise rounding in 2^{i_max} Z^n isolates the closest
    // vector (thin-lattice base case).
    Rat c_lb = norm_euclid_lower_bound(norm, n);
    auto rounds_suffice = [&](std::size_t i) {
        Rat two_pow = pow_rat(Rat(2), i) / 2;  // 2^{i-1}
        return pow_rat(two_pow * c_lb, k) > mu_pow;
    };
    std::size_t i_max = 0;
    while (!rounds_suffice(i_max)) {
        ++i_max;
        check(i_max < 4096, "cvp_search: doubling bound diverged");
    }

    IntMatrix cur = basis;
    IntVector t_cur = target;
    for (std::size_t round = 1; round <= i_max; ++round) {
        for (std::size_t jcol = 0; jcol < m; ++jcol) {
            IntMatrix probe = cur;
            for (std::size_t j = 0; j <= jcol; ++j)
                for (std::size_t i = 0; i < n; ++i) probe(i, j) = 2 * cur(i, j);
            // Sublattice distance is >= mu, so "<= mu" means "= mu": if the
            // doubled-parity lattice misses mu, flip the parity of b_j.
            if (!cvp_decision(probe, t_cur, norm, mu_pow, cfg, stats)) {
                for (std::size_t i = 0; i < n; ++i) t_cur[i] -= cur(i, jcol);
                check(cvp_decision(probe, t_cur, norm, mu_pow, cfg, stats),
                      "cvp_search: parity fix did not restore the distance");
            }
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < m; ++j) cur(i, j) *= 2;
#ifndef NDEBUG
        check(cvp_decision(cur, t_cur, norm, mu_pow, cfg, stats),
              "cvp_search: doubling invariant lost");
#endif
    }

    // Round each coordinate to the nearest multiple of 2^{i_max}.
    Int scale = pow_int(2, i_max);
    IntVector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = scale * round_rat(make_rat(t_cur[i], scale));
    RatVector diff(n);
    for (std::size_t i = 0; i < n; ++i) diff[i] = Rat(t_cur[i] - v[i]);
    check(norm_pow(norm, diff) == mu_pow, "cvp_search: rounded vector misses the distance");

    IntVector closest(n);
    for (std::size_t i = 0; i < n; ++i) closest[i] = v[i] - t_cur[i] + target[i];
    auto coeffs = lattice_coords(basis, closest);
    check(coeffs.has_value(), "cvp_search: closest vector left the lattice");
    RatVector fdiff(n);
    for (std::size_t i = 0; i < n; ++i) fdiff[i] = Rat(target[i] - closest[i]);
    check(norm_pow(norm, fdiff) == mu_pow, "cvp_search: final distance mismatch");
    return CvpResult{*coeffs, std::move(closest), mu_pow};
}

}  // namespace latmem
