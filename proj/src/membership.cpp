#include "latmem/membership.hpp"

namespace latmem {

RatVector TauTransform::apply(const RatVector& x) const {
    RatVector shifted = x;
    for (std::size_t i = 0; i < n; ++i) shifted[i] -= Rat(v[i]);
    return vbar * shifted;
}

RatVector TauTransform::apply_inverse(const RatVector& y) const {
    RatVector x = vbar_inv * y;
    for (std::size_t i = 0; i < n; ++i) x[i] += Rat(v[i]);
    return x;
}

std::optional<TauTransform> build_tau(const AffineSubspace& h, std::size_t n) {
    std::size_t codim = h.planes.size();
    std::size_t m = n - codim;
    if (codim == 0)
        return TauTransform{n, n, IntVector(n, Int(0)), RatMatrix::identity(n),
                            RatMatrix::identity(n)};

    auto v = integer_point_in_subspace(h, n);
    if (!v) return std::nullopt;

    // Complete the normals to a basis [b_1..b_m, d_{m+1}..d_n] of R^n with
    // unit vectors, normals in the trailing columns.
    IntMatrix b(n, n);
    for (std::size_t i = 0; i < codim; ++i)
        for (std::size_t r = 0; r < n; ++r) b(r, m + i) = h.planes[i].normal[r];
    RatMatrix span(codim, n);
    for (std::size_t i = 0; i < codim; ++i)
        for (std::size_t j = 0; j < n; ++j) span(i, j) = Rat(h.planes[i].normal[j]);
    std::size_t chosen = 0;
    for (std::size_t j = 0; j < n && chosen < m; ++j) {
        RatMatrix trial(span.rows() + 1, n);
        for (std::size_t i = 0; i < span.rows(); ++i)
            for (std::size_t c = 0; c < n; ++c) trial(i, c) = span(i, c);
        trial(span.rows(), j) = 1;
        if (rat_rank(trial) != span.rows() + 1) continue;
        span = std::move(trial);
        b(j, chosen) = 1;
        ++chosen;
    }
    check(chosen == m, "build_tau: basis completion failed");

    IntMatrix dbar = intersection_basis(b, m);
    IntMatrix dhat(n, n);
    for (std::size_t j = 0; j < m; ++j) dhat.set_col(j, dbar.col(j));
    for (std::size_t j = m; j < n; ++j) dhat(j, j) = 1;

    RatMatrix vbar = rat_inverse(to_rat(dhat)) * to_rat(b).transposed();
    return TauTransform{n, m, std::move(*v), vbar, rat_inverse(vbar)};
}

namespace {

// N with body ⊆ closed l1-ball of radius N-1 around the origin.
Int compute_n_param(const ConvexBody& body) {
    if (const auto* p = std::get_if<Polytope>(&body)) {
        std::size_t n = p->dim();
        Int r = size_of(*p);
        return isqrt_ceil(pow_int(Int(n), n + 3)) * pow_int(r, n) + 1;
    }
    const LpBody& lp = std::get<LpBody>(body);
    Rat r2 = lp_circumscribed_radius_sq(lp);
    RatVector c = lp_circumscribed_center(lp);
    Rat l1(0);
    for (const auto& ci : c) l1 += abs(ci);
    // ||x||_1 <= ||c||_1 + sqrt(m) * sqrt(r2)
    Int bound = floor_add_sqrt(l1, Rat(Int(lp.m)) * r2, +1) + 2;
    return bound < 2 ? Int(2) : bound;
}

struct Driver {
    const ConvexBody& body;
    const MembershipConfig& cfg;
    MembershipStats& stats;
    std::size_t na;  // ambient (active) dimension
    Int n_param;
    Int coeff_cap;  // 2^{(n+2)^2} N^n, the replacement size contract

    bool recurse(const AffineSubspace& h, std::size_t depth) {
        ++stats.recursive_calls;
        check(depth <= na, "membership: recursion depth exceeded");
        std::size_t m = na - h.planes.size();
        if (m == 0) return decide_point(h);

        auto tau = build_tau(h, na);
        if (!tau) return false;

        FlatnessOutcome fl = transformed_flatness(*tau);
        ++stats.flatness_calls;
        switch (fl.kind) {
            case FlatnessKind::ContainsInteger:
                return true;
            case FlatnessKind::NoInteger:
                return false;
            case FlatnessKind::Direction:
                break;
        }

        // Pull the slice family back: tau^{-1}(H_{k, (dtilde, 0)}) has normal
        // vbar^T (dtilde, 0), scaled integral and primitive. Slices whose
        // scaled offset is not divisible carry no integer points.
        RatVector lifted(na, Rat(0));
        for (std::size_t i = 0; i < tau->m; ++i) lifted[i] = Rat(fl.direction[i]);
        RatVector d_raw = tau->vbar.transposed() * lifted;
        Int lambda = lcm_of_denominators(d_raw);
        IntVector d_int(na);
        for (std::size_t i = 0; i < na; ++i) d_int[i] = Int(d_raw[i] * Rat(lambda));
        Int g = gcd_of(d_int);
        check(g > 0, "membership: zero slice normal");
        Int v_term = dot_ii(tau->v, d_int);

        for (Int k = fl.k_min; k <= fl.k_max; k += 1) {
            Int kappa = lambda * k + v_term;
            IntVector d_use = d_int;
            Int off = kappa;
            if (g > 1) {
                if (off % g != 0) continue;
                off /= g;
                for (auto& x : d_use) x /= g;
            }
            if (cfg.no_replacement) {
                AffineSubspace next = h;
                next.planes.push_back(Hyperplane{d_use, off});
                if (recurse(next, depth + 1)) return true;
            } else {
                auto rep = replace_hyperplane(h, d_use, off, n_param);
                if (!rep) continue;
                AffineSubspace next = h;
                for (auto& pl : rep->planes) {
                    Int big = std::max(size_of(pl.normal), size_of(pl.offset));
                    stats.max_coeff_bits = std::max(stats.max_coeff_bits, bit_length(big));
                    check(big <= coeff_cap, "membership: replacement size contract violated");
                    next.planes.push_back(std::move(pl));
                }
                if (recurse(next, depth + 1)) return true;
            }
        }
        return false;
    }

    // m = 0: H is a single point; decide integrality and membership.
    bool decide_point(const AffineSubspace& h) {
        RatMatrix a(na, na);
        RatVector rhs(na);
        for (std::size_t i = 0; i < na; ++i) {
            for (std::size_t j = 0; j < na; ++j) a(i, j) = Rat(h.planes[i].normal[j]);
            rhs[i] = Rat(h.planes[i].offset);
        }
        auto x = rat_solve(a, rhs);
        check(x.has_value(), "membership: inconsistent full-codimension subspace");
        IntVector z(na);
        for (std::size_t i = 0; i < na; ++i) {
            if (!is_integer((*x)[i])) return false;
            z[i] = (*x)[i].get_num();
        }
        return body_contains(body, z);
    }

    FlatnessOutcome transformed_flatness(const TauTransform& tau) {
        RoundingConfig rcfg{cfg.rounding_bits, true};
        if (const auto* p = std::get_if<Polytope>(&body)) {
            Polytope sliced = transform_polytope(*p, tau);
            Rat row_sq(1);
            for (std::size_t i = 0; i < sliced.constraints(); ++i) {
                Rat s(0);
                for (std::size_t j = 0; j < sliced.dim(); ++j)
                    s += Rat(sliced.a(i, j) * sliced.a(i, j));
                if (s > row_sq) row_sq = s;
            }
            // The +1/2 inflation grants any nonempty slice a ball of radius
            // 1/max ||row||_2, hence this determinant floor.
            Rat det_floor = pow_rat(1 / row_sq, tau.m);
            return flatness_from_rounding(
                round_polytope_with_floor(sliced, det_floor, rcfg), tau.m);
        }
        const LpBody& lp = std::get<LpBody>(body);
        return flatness_from_rounding(round_lp_body(transform_lp(lp, tau), rcfg), tau.m);
    }

    // tau(P ∩ H) identified with {x in R^m : Atilde x <= btilde}, rows scaled
    // integral and then +1/2-inflated (2A x <= 2b + 1), which preserves the
    // integer points and keeps nonempty slices full-dimensional.
    Polytope transform_polytope(const Polytope& p, const TauTransform& tau) {
        RatMatrix a_rat = to_rat(p.a) * tau.vbar_inv;
        IntVector shift = p.a * tau.v;
        IntMatrix a_out(p.constraints(), tau.m);
        IntVector b_out(p.constraints());
        for (std::size_t i = 0; i < p.constraints(); ++i) {
            RatVector row(tau.m);
            for (std::size_t j = 0; j < tau.m; ++j) row[j] = a_rat(i, j);
            Int lam = lcm_of_denominators(row);
            for (std::size_t j = 0; j < tau.m; ++j) a_out(i, j) = 2 * Int(row[j] * Rat(lam));
            b_out[i] = 2 * lam * (p.b[i] - shift[i]) + 1;
        }
        return Polytope(std::move(a_out), std::move(b_out));
    }

    // tau(B ∩ H): V^{-1} composes with blockdiag(vbar_inv, I) and t moves to
    // blockdiag(vbar, I) (t - (v, 0)).
    LpBody transform_lp(const LpBody& lp, const TauTransform& tau) {
        std::size_t n0 = lp.ambient_dim();
        RatMatrix block_inv = RatMatrix::identity(n0);
        RatMatrix block = RatMatrix::identity(n0);
        for (std::size_t i = 0; i < na; ++i)
            for (std::size_t j = 0; j < na; ++j) {
                block_inv(i, j) = tau.vbar_inv(i, j);
                block(i, j) = tau.vbar(i, j);
            }
        RatVector t_shift = lp.t;
        for (std::size_t i = 0; i < na; ++i) t_shift[i] -= Rat(tau.v[i]);
        return LpBody(lp.p, lp.v_inv * block_inv, block * t_shift, lp.alpha_pow_num,
                      lp.alpha_pow_den, tau.m);
    }
};

}  // namespace

bool membership(const ConvexBody& body, const AffineSubspace& h, const MembershipConfig& cfg,
                MembershipStats* stats) {
    std::size_t na = body_active_dim(body);
    if (na > cfg.max_dimension) throw DimensionLimit(na, cfg.max_dimension);
    for (const auto& pl : h.planes)
        check(pl.normal.size() == na, "membership: subspace dimension mismatch");
    if (h.planes.size() > na) throw DependentNormals();

    MembershipStats local;
    MembershipStats& st = stats ? *stats : local;
    st.n_param = compute_n_param(body);
    Driver driver{body, cfg, st, na, st.n_param,
                  pow_int(2, (na + 2) * (na + 2)) * pow_int(st.n_param, na)};
    return driver.recurse(h, 0);
}

namespace {

// Greedy completion of full-column-rank M (n x k) with unit columns.
RatMatrix complete_columns(const RatMatrix& m) {
    std::size_t n = m.rows(), k = m.cols();
    RatMatrix out(n, n);
    for (std::size_t j = 0; j < k; ++j) out.set_col(j, m.col(j));
    std::size_t have = k;
    for (std::size_t j = 0; j < n && have < n; ++j) {
        RatMatrix trial(n, have + 1);
        for (std::size_t c = 0; c < have; ++c) trial.set_col(c, out.col(c));
        RatVector unit(n, Rat(0));
        unit[j] = 1;
        trial.set_col(have, unit);
        if (rat_rank(trial) != have + 1) continue;
        out.set_col(have, unit);
        ++have;
    }
    check(have == n, "complete_columns: completion failed");
    return out;
}

}  // namespace

bool lmp_solve(const ConvexBody& body, const LatticeBasis& lattice, const MembershipConfig& cfg,
               MembershipStats* stats) {
    std::size_t dim = lattice.dim(), k = lattice.rank();
    check(body_active_dim(body) == dim, "lmp_solve: body/lattice dimension mismatch");
    const RatMatrix& b = lattice.b;

    ConvexBody pulled = [&]() -> ConvexBody {
        if (const auto* p = std::get_if<Polytope>(&body)) {
            RatMatrix a_rat = to_rat(p->a) * b;
            IntMatrix a_out(p->constraints(), k);
            IntVector b_out(p->constraints());
            for (std::size_t i = 0; i < p->constraints(); ++i) {
                RatVector row = a_rat.row(i);
                Int lam = lcm_of_denominators(row);
                for (std::size_t j = 0; j < k; ++j) a_out(i, j) = Int(row[j] * Rat(lam));
                b_out[i] = lam * p->b[i];
            }
            return Polytope(std::move(a_out), std::move(b_out));
        }
        const LpBody& lp = std::get<LpBody>(body);
        std::size_t n0 = lp.ambient_dim();
        // (B y, 0^{n0-dim}) = Bpad y; pull V^{-1} back through Bpad and keep
        // the radius data.
        RatMatrix bpad(n0, k);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < k; ++j) bpad(i, j) = b(i, j);
        RatMatrix m = lp.v_inv * bpad;
        check(rat_rank(m) == k, "lmp_solve: degenerate pullback");
        RatMatrix v_inv_new = complete_columns(m);
        RatVector u = lp.v_inv * lp.t;
        auto t_new = rat_solve(v_inv_new, u);
        check(t_new.has_value(), "lmp_solve: pullback target failed");
        return LpBody(lp.p, std::move(v_inv_new), std::move(*t_new), lp.alpha_pow_num,
                      lp.alpha_pow_den, k);
    }();

    return membership(pulled, AffineSubspace{}, cfg, stats);
}

}  // namespace latmem
