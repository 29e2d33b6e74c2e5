#include "latmem/oracle.hpp"

namespace latmem {

namespace {

// Rational upper bound on ||x||_2 from the exact k-th power of the norm:
// ||x||_2 <= ||x|| / c(n) <= (norm_pow)^{1/k} / c_lb.
Rat euclid_radius_from_norm_pow(const NormSpec& norm, std::size_t n, const Rat& value_pow) {
    unsigned long k = norm_power(norm);
    Int num = value_pow.get_num(), den = value_pow.get_den();
    Int rn = iroot_floor(num, k);
    if (pow_int(rn, k) < num) rn += 1;
    Int rd = iroot_floor(den, k);
    Rat root_ub = make_rat(rn, rd < 1 ? Int(1) : rd);
    return root_ub / norm_euclid_lower_bound(norm, n);
}

}  // namespace

OracleCvpResult oracle_cvp(const IntMatrix& basis, const RatVector& target, const NormSpec& norm,
                           const EnumerationBudget& budget) {
    std::size_t n = basis.rows(), m = basis.cols();
    check(target.size() == n, "oracle_cvp: shape mismatch");
    if (rat_rank(to_rat(basis)) != m) throw RankDeficient();

    RatMatrix b_rat = to_rat(basis);
    RatMatrix g = gram(b_rat);
    RatVector btt(m, Rat(0));
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t i = 0; i < n; ++i) btt[j] += Rat(basis(i, j)) * target[i];
    auto gamma = rat_solve(g, btt);
    check(gamma.has_value(), "oracle_cvp: least squares failed");

    auto value_at = [&](const IntVector& z) {
        RatVector diff = target;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < m; ++j) diff[i] -= Rat(basis(i, j)) * Rat(z[j]);
        return norm_pow(norm, diff);
    };

    IntVector z0(m);
    for (std::size_t j = 0; j < m; ++j) z0[j] = round_rat((*gamma)[j]);
    Rat best_pow = value_at(z0);

    // Complete enumeration of {z : ||B z - t||_2 <= radius}. In coefficient
    // space ||B z - t||_2^2 = (z - gamma)^T G (z - gamma) + res^2 with the
    // least-squares gamma; the radius covers everything at least as close as
    // the rounded candidate.
    Rat radius = euclid_radius_from_norm_pow(norm, n, best_pow);
    RatVector residual = target;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) residual[i] -= Rat(basis(i, j)) * (*gamma)[j];
    Rat bound = radius * radius - norm2_sq(residual);

    IntVector best_z = z0;
    IntVector best_ambient = basis * z0;
    bool found_any = false;
    auto visit = [&](const IntVector& z, const Rat&) {
        Rat v = value_at(z);
        if (v > best_pow) return;
        IntVector ambient = basis * z;
        if (!found_any || v < best_pow ||
            std::lexicographical_compare(ambient.begin(), ambient.end(), best_ambient.begin(),
                                         best_ambient.end())) {
            best_pow = v;
            best_z = z;
            best_ambient = std::move(ambient);
            found_any = true;
        }
    };
    bool complete = enumerate_quadratic(g, *gamma, bound, budget.max_nodes, visit);
    if (!complete) throw BudgetExceeded();
    return OracleCvpResult{best_z, best_ambient, best_pow};
}

bool oracle_lmp(const ConvexBody& body, const LatticeBasis& lattice,
                const EnumerationBudget& budget) {
    std::size_t dim = lattice.dim(), k = lattice.rank();
    check(body_active_dim(body) == dim, "oracle_lmp: dimension mismatch");

    // Circumscribed Euclidean ball of the body; polytopes get the tight
    // vertex-based ball (and an immediate "no" when empty).
    RatVector center(dim, Rat(0));
    Rat radius_sq(0);
    if (const auto* p = std::get_if<Polytope>(&body)) {
        std::vector<RatVector> verts = polytope_vertices(*p);
        if (verts.empty()) return false;
        for (const auto& v : verts)
            for (std::size_t i = 0; i < dim; ++i) center[i] += v[i] / Rat(Int(verts.size()));
        for (const auto& v : verts) {
            RatVector diff(dim);
            for (std::size_t i = 0; i < dim; ++i) diff[i] = v[i] - center[i];
            Rat d2 = norm2_sq(diff);
            if (d2 > radius_sq) radius_sq = d2;
        }
    } else {
        const LpBody& lp = std::get<LpBody>(body);
        center = lp_circumscribed_center(lp);
        radius_sq = lp_circumscribed_radius_sq(lp);
    }

    // ||B z - c||^2 = (z - gamma)^T G (z - gamma) + res^2 with gamma the
    // least-squares coefficients; enumerate the coefficient ellipsoid.
    RatMatrix g = gram(lattice.b);
    RatVector bt_c(k, Rat(0));
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < dim; ++i) bt_c[j] += lattice.b(i, j) * center[i];
    auto gamma = rat_solve(g, bt_c);
    check(gamma.has_value(), "oracle_lmp: least squares failed");
    RatVector residual = center;
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < k; ++j) residual[i] -= lattice.b(i, j) * (*gamma)[j];
    Rat bound = radius_sq - norm2_sq(residual);
    if (bound < 0) return false;

    bool hit = false;
    auto visit = [&](const IntVector& z, const Rat&) {
        if (hit) return;
        IntVector ambient(dim, Int(0));
        bool integral = true;
        for (std::size_t i = 0; i < dim && integral; ++i) {
            Rat v(0);
            for (std::size_t j = 0; j < k; ++j) v += lattice.b(i, j) * Rat(z[j]);
            if (!is_integer(v))
                integral = false;
            else
                ambient[i] = v.get_num();
        }
        if (integral && body_contains(body, ambient)) hit = true;
    };
    bool complete = enumerate_quadratic(g, *gamma, bound, budget.max_nodes, visit);
    if (!complete && !hit) throw BudgetExceeded();
    return hit;
}

}  // namespace latmem
