#include "latmem/diophantine.hpp"

namespace latmem {

Int sim_dioph_q_bound(std::size_t dim, const Int& n_param) {
    unsigned long e = (unsigned long)((dim * (dim + 1) + 3) / 4) + 1;
    return pow_int(2, e) * pow_int(n_param, dim);
}

SimDiophApprox simultaneous_approx(const RatVector& alpha, const Int& n_param) {
    check(n_param >= 2, "simultaneous_approx: N >= 2 required");
    std::size_t d = alpha.size();
    if (d == 0) return SimDiophApprox{Int(1), {}};

    // Lattice columns e_1..e_d and (-alpha, delta); an element is
    // (p - q*alpha, q*delta). delta is sized so that the LLL bound
    // 2^{d/4} det^{1/(d+1)} stays strictly below 1/N.
    unsigned long e = (unsigned long)((d * (d + 1) + 3) / 4);
    Rat delta = make_rat(1, 2 * pow_int(2, e) * pow_int(n_param, d + 1));
    RatMatrix b(d + 1, d + 1);
    for (std::size_t i = 0; i < d; ++i) b(i, i) = 1;
    for (std::size_t i = 0; i < d; ++i) b(i, d) = -alpha[i];
    b(d, d) = delta;

    LllResult red = lll_reduce(b, make_rat(3, 4));
    Rat qd = red.basis(d, 0);
    Int q = Int(qd / delta);
    check(Rat(q) * delta == qd, "simultaneous_approx: non-integral multiplier");
    check(q != 0, "simultaneous_approx: reduced vector has q = 0");
    if (q < 0) q = -q;

    // Nearest-integer numerators only improve on the reduced vector.
    IntVector p(d);
    for (std::size_t i = 0; i < d; ++i) p[i] = round_rat(Rat(q) * alpha[i]);
    Int g = q;
    for (const auto& pi : p) {
        Int r;
        mpz_gcd(r.get_mpz_t(), g.get_mpz_t(), pi.get_mpz_t());
        g = r;
    }
    if (g > 1) {
        q /= g;
        for (auto& pi : p) pi /= g;
    }

    Rat inv_n = make_rat(1, n_param);
    for (std::size_t i = 0; i < d; ++i)
        check(abs(Rat(q) * alpha[i] - Rat(p[i])) < inv_n,
              "simultaneous_approx: approximation error bound violated");
    check(q <= sim_dioph_q_bound(d, n_param), "simultaneous_approx: q bound violated");
    return SimDiophApprox{q, std::move(p)};
}

Int ft_coeff_bound(std::size_t dim, const Int& n_param) {
    return dim <= 1 ? Int(1) : sim_dioph_q_bound(dim - 1, n_param);
}

std::vector<FtTerm> frank_tardos_decompose(const RatVector& w, const Int& n_param) {
    check(!is_zero(w), "frank_tardos_decompose: zero vector");
    check(n_param >= 2, "frank_tardos_decompose: N >= 2 required");
    std::size_t dim = w.size();
    Int bound = ft_coeff_bound(dim, n_param);

    std::vector<FtTerm> terms;
    RatVector r = w;
    Rat chi_running(1);
    while (!is_zero(r)) {
        check(terms.size() < dim, "frank_tardos_decompose: too many rounds");
        Rat s(0);
        for (const auto& ri : r) {
            Rat a = abs(ri);
            if (a > s) s = a;
        }
        RatVector v(dim);
        for (std::size_t i = 0; i < dim; ++i) v[i] = r[i] / s;

        // Coordinates already integral (0 or +-1 after normalization) are
        // reproduced exactly; only the rest get approximated. The max-norm
        // coordinate is always exact, which caps the round count at dim(w).
        std::vector<std::size_t> approx_idx;
        RatVector approx_val;
        for (std::size_t i = 0; i < dim; ++i) {
            if (!is_integer(v[i])) {
                approx_idx.push_back(i);
                approx_val.push_back(v[i]);
            }
        }
        check(approx_idx.size() < dim, "frank_tardos_decompose: max coordinate must be exact");

        Int q(1);
        IntVector p(dim);
        if (!approx_idx.empty()) {
            SimDiophApprox a = simultaneous_approx(approx_val, n_param);
            q = a.q;
            for (std::size_t j = 0; j < approx_idx.size(); ++j) p[approx_idx[j]] = a.p[j];
        }
        for (std::size_t i = 0; i < dim; ++i)
            if (is_integer(v[i])) p[i] = Int(Rat(q) * v[i]);

        RatVector next(dim);
        std::size_t support = 0, next_support = 0;
        for (std::size_t i = 0; i < dim; ++i) {
            next[i] = Rat(q) * v[i] - Rat(p[i]);
            if (r[i] != 0) ++support;
            if (next[i] != 0) ++next_support;
        }
        check(next_support < support, "frank_tardos_decompose: residual support must shrink");
        check(size_of(p) <= bound, "frank_tardos_decompose: coefficient bound violated");

        terms.push_back(FtTerm{std::move(p), chi_running * s / Rat(q)});
        chi_running *= s / Rat(q);
        r = std::move(next);
    }

    // exact reconstruction w = sum chi_i wbar_i
    RatVector acc(dim, Rat(0));
    for (const auto& t : terms)
        for (std::size_t i = 0; i < dim; ++i) acc[i] += t.chi * Rat(t.wbar[i]);
    check(acc == w, "frank_tardos_decompose: reconstruction failed");
    return terms;
}

std::optional<ReplacementSet> replace_hyperplane(const AffineSubspace& h, const IntVector& d,
                                                 const Int& k, const Int& n_param) {
    std::size_t n = d.size();
    std::size_t s = h.planes.size();
    RatMatrix normals(s + 1, n);
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < n; ++j) normals(i, j) = Rat(h.planes[i].normal[j]);
    for (std::size_t j = 0; j < n; ++j) normals(s, j) = Rat(d[j]);
    if (rat_rank(normals) != s + 1) throw DependentInput();

    RatVector w(n + 1);
    for (std::size_t j = 0; j < n; ++j) w[j] = Rat(d[j]);
    w[n] = Rat(k);
    std::vector<FtTerm> dec = frank_tardos_decompose(w, n_param);

    // Consistency of the full lifted system {H planes} ∪ {all decomposition
    // planes}: if that affine system has no solution at all, then by the
    // forward direction of the FT equivalence no integer z of the N-ball in H
    // satisfies <d, z> = k either, and the slice is dead.
    std::size_t rows = s + dec.size();
    RatMatrix coeff(rows, n), lifted(rows, n + 1);
    for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            coeff(i, j) = Rat(h.planes[i].normal[j]);
            lifted(i, j) = coeff(i, j);
        }
        lifted(i, n) = Rat(h.planes[i].offset);
    }
    for (std::size_t i = 0; i < dec.size(); ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            coeff(s + i, j) = Rat(dec[i].wbar[j]);
            lifted(s + i, j) = coeff(s + i, j);
        }
        lifted(s + i, n) = Rat(dec[i].wbar[n]);
    }
    if (rat_rank(coeff) != rat_rank(lifted)) return std::nullopt;

    // Greedy maximal index set keeping {H normals} ∪ {dbar_i} independent.
    // Consistency above makes the dropped planes redundant on the output
    // subspace, so the equivalence of the full set carries over.
    ReplacementSet out;
    RatMatrix span(s, n);
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < n; ++j) span(i, j) = Rat(h.planes[i].normal[j]);
    std::size_t rank = s;
    for (const auto& term : dec) {
        RatMatrix trial(rank + 1, n);
        for (std::size_t i = 0; i < rank; ++i)
            for (std::size_t j = 0; j < n; ++j) trial(i, j) = span(i, j);
        for (std::size_t j = 0; j < n; ++j) trial(rank, j) = Rat(term.wbar[j]);
        if (rat_rank(trial) != rank + 1) continue;
        span = std::move(trial);
        ++rank;
        Hyperplane plane;
        plane.normal = IntVector(term.wbar.begin(), term.wbar.begin() + n);
        plane.offset = term.wbar[n];
        out.planes.push_back(std::move(plane));
    }
    check(!out.planes.empty(), "replace_hyperplane: empty index set");
    return out;
}

}  // namespace latmem
