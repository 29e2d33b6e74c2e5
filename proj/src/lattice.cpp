#include "latmem/lattice.hpp"

namespace latmem {

LatticeBasis::LatticeBasis(RatMatrix m) : b(std::move(m)) {
    if (b.cols() == 0 || rat_rank(b) != b.cols()) throw RankDeficient();
}

namespace {

struct QuadEnumer {
    const RatMatrix& l;
    const RatVector& lam;
    const RatVector& center;
    Rat& bound;
    std::uint64_t nodes_left;
    const std::function<void(const IntVector&, const Rat&)>& visit;
    std::size_t m;
    IntVector z;
    RatVector inner;  // inner[i] = sum_{j>i} l(j,i) * (z_j - center_j)

    bool descend(std::size_t level, const Rat& partial) {
        std::size_t i = level - 1;
        Rat rem = bound - partial;
        if (rem < 0) return true;
        // lam_i * (z_i - center_i + inner_i)^2 <= rem
        Rat mid = center[i] - inner[i];
        Rat rad = rem / lam[i];
        Int lo = ceil_add_sqrt(mid, rad, -1);
        Int hi = floor_add_sqrt(mid, rad, +1);
        for (Int v = lo; v <= hi; v += 1) {
            if (nodes_left == 0) return false;
            --nodes_left;
            z[i] = v;
            Rat off = Rat(v) - center[i] + inner[i];
            Rat s = partial + lam[i] * off * off;
            if (s > bound) continue;
            if (i == 0) {
                visit(z, s);
            } else {
                for (std::size_t t = 0; t < i; ++t)
                    inner[t] += l(i, t) * (Rat(v) - center[i]);
                if (!descend(i, s)) return false;
                for (std::size_t t = 0; t < i; ++t)
                    inner[t] -= l(i, t) * (Rat(v) - center[i]);
            }
        }
        return true;
    }
};

}  // namespace

bool enumerate_quadratic(const RatMatrix& g, const RatVector& center, Rat& bound,
                         std::uint64_t max_nodes,
                         const std::function<void(const IntVector&, const Rat&)>& visit) {
    std::size_t m = g.cols();
    check(center.size() == m, "enumerate_quadratic: center dimension mismatch");
    if (m == 0) return true;
    Ldlt f = ldlt(g);
    QuadEnumer e{f.l, f.d, center, bound, max_nodes, visit, m, IntVector(m), RatVector(m)};
    if (bound < 0) return true;
    return e.descend(m, Rat(0));
}

namespace {

void canonicalize_sign(IntVector& v) {
    for (const auto& x : v) {
        if (x > 0) return;
        if (x < 0) {
            for (auto& y : v) y = -y;
            return;
        }
    }
}

bool lex_less(const IntVector& a, const IntVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

}  // namespace

ShortestFormVector shortest_form_vector(const RatMatrix& g) {
    ldlt(g);  // validates symmetry and positive definiteness
    std::size_t m = g.cols();
    IntMatrix u = lll_gram(g, make_rat(3, 4));
    RatMatrix ur = to_rat(u);
    RatMatrix gr = ur.transposed() * g * ur;

    Rat bound = gr(0, 0);
    for (std::size_t i = 1; i < m; ++i) bound = std::min(bound, gr(i, i));
    ShortestFormVector best;
    best.value = bound + 1;  // sentinel above every enumerated value
    RatVector origin(m, Rat(0));
    auto visit = [&](const IntVector& z, const Rat& val) {
        if (is_zero(z)) return;
        IntVector d = u * z;
        canonicalize_sign(d);
        if (val < best.value) {
            best.value = val;
            best.d = d;
            bound = val;  // tighten
        } else if (val == best.value && lex_less(best.d, d)) {
            // Ties: sign-canonical witness that is lexicographically greatest,
            // which makes the coordinate-axis witness e_1 win for I_n.
            best.d = d;
        }
    };
    bool complete = enumerate_quadratic(gr, origin, bound, UINT64_MAX, visit);
    check(complete && !best.d.empty(), "shortest_form_vector: enumeration failed");
    return best;
}

RatMatrix dual_basis(const RatMatrix& b) {
    check(b.rows() == b.cols(), "dual_basis: square basis required");
    return rat_inverse(b.transposed());
}

IntMatrix intersection_basis(const IntMatrix& b, std::size_t m) {
    std::size_t n = b.rows();
    check(b.cols() == n, "intersection_basis: square matrix required");
    if (m >= n) throw ContractError("intersection_basis: m must satisfy 0 <= m < n");
    if (rat_det(to_rat(b)) == 0) throw Singular();
    IntMatrix bt = b.transposed();
    IntMatrix tail(n - m, n);
    for (std::size_t i = 0; i < n - m; ++i)
        for (std::size_t j = 0; j < n; ++j) tail(i, j) = bt(m + i, j);
    IntMatrix k = integer_kernel(tail);
    check(k.cols() == m, "intersection_basis: unexpected kernel rank");
    IntMatrix d = bt * k;
    if (m == 0) return d;
    HnfResult norm = hnf(d);
    check(norm.rank == m, "intersection_basis: output rank mismatch");
    IntMatrix out(n, m);
    for (std::size_t j = 0; j < m; ++j) out.set_col(j, norm.h.col(j));
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t i = m; i < n; ++i)
            check(out(i, j) == 0, "intersection_basis: trailing coordinates must vanish");
    return out;
}

std::optional<IntVector> integer_point_in_subspace(const AffineSubspace& h, std::size_t n) {
    std::size_t s = h.planes.size();
    if (s == 0) return IntVector(n, Int(0));
    IntMatrix d(s, n);
    IntVector k(s);
    for (std::size_t i = 0; i < s; ++i) {
        check(h.planes[i].normal.size() == n, "integer_point_in_subspace: dimension mismatch");
        for (std::size_t j = 0; j < n; ++j) d(i, j) = h.planes[i].normal[j];
        k[i] = h.planes[i].offset;
    }
    if (rat_rank(to_rat(d)) != s) throw DependentNormals();
    HnfResult r = hnf(d);
    check(r.rank == s, "integer_point_in_subspace: HNF rank mismatch");
    // H = [T | 0] with T lower triangular; solve T y = k over Z.
    IntVector y(n, Int(0));
    for (std::size_t i = 0; i < s; ++i) {
        Int rhs = k[i];
        for (std::size_t j = 0; j < i; ++j) rhs -= r.h(i, j) * y[j];
        if (rhs % r.h(i, i) != 0) return std::nullopt;
        y[i] = rhs / r.h(i, i);
    }
    IntVector v = r.u * y;
    for (std::size_t i = 0; i < s; ++i)
        check(dot_ii(h.planes[i].normal, v) == k[i], "integer_point_in_subspace: bad solution");
    return v;
}

IntMatrix saturation(const IntMatrix& b) {
    IntMatrix orth = integer_kernel(b.transposed());
    return integer_kernel(orth.transposed());
}

}  // namespace latmem
