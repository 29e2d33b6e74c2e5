#include "latmem/geometry.hpp"

namespace latmem {

Ellipsoid::Ellipsoid(RatMatrix d_, RatVector c_) : d(std::move(d_)), c(std::move(c_)) {
    check(d.rows() == d.cols() && d.rows() == c.size(), "Ellipsoid: shape mismatch");
    ldlt(d);  // throws unless symmetric positive definite
}

Polytope::Polytope(IntMatrix a_, IntVector b_) : a(std::move(a_)), b(std::move(b_)) {
    check(a.rows() == b.size(), "Polytope: shape mismatch");
}

bool Polytope::contains(const IntVector& x) const {
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Int v = 0;
        for (std::size_t j = 0; j < a.cols(); ++j) v += a(i, j) * x[j];
        if (v > b[i]) return false;
    }
    return true;
}

bool Polytope::contains(const RatVector& x) const {
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Rat v(0);
        for (std::size_t j = 0; j < a.cols(); ++j) v += Rat(a(i, j)) * x[j];
        if (v > Rat(b[i])) return false;
    }
    return true;
}

LpBody::LpBody(unsigned long p_, RatMatrix v_inv_, RatVector t_, Int num, Int den, std::size_t m_)
    : p(p_),
      v_inv(std::move(v_inv_)),
      t(std::move(t_)),
      alpha_pow_num(std::move(num)),
      alpha_pow_den(std::move(den)),
      m(m_) {
    check(p >= 2, "LpBody: p must be an integer >= 2");
    std::size_t n = t.size();
    check(v_inv.rows() == n && v_inv.cols() == n && m >= 1 && m <= n, "LpBody: shape mismatch");
    check(alpha_pow_num > 0 && alpha_pow_den > 0, "LpBody: radius must be positive");
    if (rat_det(v_inv) == 0) throw Singular();
}

LpBody LpBody::from_radius(unsigned long p, RatMatrix v_inv, RatVector t, const Rat& alpha,
                           std::size_t m) {
    return LpBody(p, std::move(v_inv), std::move(t), pow_int(alpha.get_num(), p),
                  pow_int(alpha.get_den(), p), m);
}

bool LpBody::contains(const RatVector& x) const { return lp_f_value(*this, x) < 0; }
bool LpBody::contains(const IntVector& x) const { return contains(to_rat(x)); }

std::size_t body_active_dim(const ConvexBody& body) {
    if (const auto* p = std::get_if<Polytope>(&body)) return p->dim();
    return std::get<LpBody>(body).m;
}

bool body_contains(const ConvexBody& body, const IntVector& x) {
    if (const auto* p = std::get_if<Polytope>(&body)) return p->contains(x);
    return std::get<LpBody>(body).contains(x);
}

SupportData ellipsoid_support(const Ellipsoid& e, const IntVector& d) {
    check(!is_zero(d), "ellipsoid_support: direction must be nonzero");
    RatVector dr = to_rat(d);
    return SupportData{dot(dr, e.c), dot(dr, e.d * dr)};
}

namespace {

// V^{-1} ((y, 0^{n-m}) - t)
RatVector lp_inner_vector(const LpBody& body, const RatVector& y) {
    check(y.size() == body.m, "LpBody: point dimension mismatch");
    std::size_t n = body.ambient_dim();
    RatVector padded(n, Rat(0));
    for (std::size_t i = 0; i < body.m; ++i) padded[i] = y[i];
    for (std::size_t i = 0; i < n; ++i) padded[i] -= body.t[i];
    return body.v_inv * padded;
}

Rat abs_pow(const Rat& x, unsigned long e) { return pow_rat(abs(x), e); }

}  // namespace

Rat lp_f_value(const LpBody& body, const RatVector& y) {
    RatVector w = lp_inner_vector(body, y);
    Rat s(0);
    for (const auto& wi : w) s += abs_pow(wi, body.p);
    return Rat(body.alpha_pow_den) * s - Rat(body.alpha_pow_num);
}

RatVector lp_subgradient(const LpBody& body, const RatVector& y) {
    RatVector w = lp_inner_vector(body, y);
    std::size_t n = body.ambient_dim();
    // Coordinate subgradient of sum |w_i|^p uses exponent p-1.
    RatVector gbar(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rat a = abs_pow(w[i], body.p - 1);
        gbar[i] = w[i] >= 0 ? a : -a;
    }
    RatVector gfull = body.v_inv.transposed() * gbar;
    RatVector g(body.m);
    Rat scale = Rat(body.alpha_pow_den) * Rat(body.p);
    for (std::size_t i = 0; i < body.m; ++i) g[i] = scale * gfull[i];
    return g;
}

Separation lp_separate_ex(const LpBody& body, const RatVector& y) {
    if (lp_f_value(body, y) < 0) return Separation{SeparationKind::Inside, {}};
    RatVector g = lp_subgradient(body, y);
    if (is_zero(g)) return Separation{SeparationKind::EmptyBody, {}};
    return Separation{SeparationKind::Separating, std::move(g)};
}

std::optional<RatVector> lp_separate(const LpBody& body, const RatVector& y) {
    Separation s = lp_separate_ex(body, y);
    if (s.kind == SeparationKind::Inside) return std::nullopt;
    if (s.kind == SeparationKind::EmptyBody) throw ZeroSubgradientOutside();
    return s.g;
}

namespace {

// Rational upper bound on alpha = (alpha_pow_num / alpha_pow_den)^{1/p}.
Rat lp_alpha_upper(const LpBody& body) {
    Int rn = iroot_floor(body.alpha_pow_num, body.p);
    if (pow_int(rn, body.p) < body.alpha_pow_num) rn += 1;
    Int rd = iroot_floor(body.alpha_pow_den, body.p);
    check(rd >= 1, "lp_alpha_upper: bad denominator");
    return make_rat(rn, rd);
}

}  // namespace

Rat lp_circumscribed_radius_sq(const LpBody& body) {
    RatMatrix v = rat_inverse(body.v_inv);
    Rat frob_sq(0);
    for (std::size_t i = 0; i < v.rows(); ++i)
        for (std::size_t j = 0; j < v.cols(); ++j) frob_sq += v(i, j) * v(i, j);
    Rat a = lp_alpha_upper(body);
    return a * a * Rat(Int(body.ambient_dim())) * frob_sq;
}

RatVector lp_circumscribed_center(const LpBody& body) {
    return RatVector(body.t.begin(), body.t.begin() + body.m);
}

Rat lp_volume_floor(const LpBody& body, const Int& s_bound, const Rat& r_out) {
    std::size_t n = body.ambient_dim();
    Rat r_tilde = std::max(r_out, Rat(1));
    Int s = std::max(s_bound, Int(1));
    // Denominator bound on F at integer points: S^{2 n^2 p}.
    Rat k_bound = Rat(pow_int(s, 2 * n * n * body.p));
    // Subgradient length bound on the circumscribed ball: m (4 p c_d n S^2 R)^{p+1}.
    Rat base = Rat(4 * Int(body.p) * body.alpha_pow_den * Int(n)) * Rat(s * s) * r_tilde;
    Rat m_bound = Rat(Int(body.m)) * pow_rat(base, body.p + 1);
    return 1 / (k_bound * m_bound);
}

PolytopeBounds polytope_bounds(const Polytope& p) {
    std::size_t n = p.dim();
    Int r = size_of(p);
    PolytopeBounds out;
    out.t_box = isqrt_ceil(pow_int(Int(n), n)) * pow_int(r, n);
    bool first = true;
    for (std::size_t i = 0; i < p.constraints(); ++i) {
        if (p.b[i] < 1)
            throw ContractError("polytope_bounds: normalized form needs positive offsets");
        Int nrm = 0;
        for (std::size_t j = 0; j < n; ++j) nrm += p.a(i, j) * p.a(i, j);
        check(nrm > 0, "polytope_bounds: zero constraint row");
        Rat h = make_rat(p.b[i] * p.b[i], nrm);
        if (first || h < out.h_inner_sq) out.h_inner_sq = h;
        first = false;
    }
    check(!first, "polytope_bounds: polytope has no constraints");
    return out;
}

std::vector<RatVector> polytope_vertices(const Polytope& p, std::uint64_t max_subsets) {
    std::size_t n = p.dim(), s = p.constraints();
    std::vector<RatVector> verts;
    if (s < n) return verts;
    std::vector<std::size_t> subset;
    std::uint64_t budget = max_subsets;
    auto try_subset = [&]() {
        RatMatrix a(n, n);
        RatVector b(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) a(i, j) = Rat(p.a(subset[i], j));
            b[i] = Rat(p.b[subset[i]]);
        }
        if (rat_rank(a) != n) return;
        auto x = rat_solve(a, b);
        if (!x || !p.contains(*x)) return;
        for (const auto& v : verts)
            if (v == *x) return;
        verts.push_back(*x);
    };
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (budget == 0) throw BudgetExceeded();
        --budget;
        if (subset.size() == n) {
            try_subset();
            return;
        }
        for (std::size_t i = start; i < s; ++i) {
            subset.push_back(i);
            self(self, i + 1);
            subset.pop_back();
        }
    };
    rec(rec, 0);
    return verts;
}

Int size_of(const Polytope& p) {
    Int s = std::max(Int(p.dim()), Int(p.constraints()));
    s = std::max(s, size_of(p.a));
    s = std::max(s, size_of(p.b));
    return s;
}

Int size_of(const LpBody& body) {
    Int s = std::max(Int(body.ambient_dim()), Int(body.m));
    s = std::max(s, size_of(body.v_inv));
    s = std::max(s, size_of(body.t));
    s = std::max(s, body.alpha_pow_num);
    s = std::max(s, body.alpha_pow_den);
    return s;
}

}  // namespace latmem
