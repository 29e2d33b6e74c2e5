#include "latmem/matrix.hpp"

namespace latmem {

RatMatrix to_rat(const IntMatrix& m) {
    RatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
    return r;
}

RatVector to_rat(const IntVector& v) {
    RatVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
    return r;
}

RatVector mul(const RatMatrix& a, const IntVector& x) { return a * to_rat(x); }

Rat dot(const IntVector& a, const RatVector& b) { return dot(to_rat(a), b); }

Int dot_ii(const IntVector& a, const IntVector& b) {
    check(a.size() == b.size(), "dot: length mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool is_zero(const IntVector& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

bool is_zero(const RatVector& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

Rat norm2_sq(const RatVector& v) { return dot(v, v); }
Rat norm2_sq(const IntVector& v) { return Rat(dot_ii(v, v)); }

namespace {

// Gauss-Jordan on [M | rhs]; returns rank. Pivots on the first nonzero entry.
std::size_t eliminate(RatMatrix& m, std::vector<std::size_t>& pivot_cols) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t piv = rank;
        while (piv < m.rows() && m(piv, col) == 0) ++piv;
        if (piv == m.rows()) continue;
        if (piv != rank)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(rank, j));
        Rat inv = 1 / m(rank, col);
        for (std::size_t j = 0; j < m.cols(); ++j) m(rank, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == rank || m(i, col) == 0) continue;
            Rat f = m(i, col);
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(rank, j);
        }
        pivot_cols.push_back(col);
        ++rank;
    }
    return rank;
}

}  // namespace

RatMatrix rat_inverse(const RatMatrix& m) {
    check(m.rows() == m.cols(), "rat_inverse: square matrix required");
    std::size_t n = m.rows();
    RatMatrix work(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) work(i, j) = m(i, j);
        work(i, n + i) = 1;
    }
    std::vector<std::size_t> piv;
    if (eliminate(work, piv) < n || piv.back() >= n) throw Singular();
    RatMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = work(i, n + j);
    return inv;
}

Rat rat_det(const RatMatrix& m) {
    check(m.rows() == m.cols(), "rat_det: square matrix required");
    RatMatrix w = m;
    std::size_t n = w.rows();
    Rat det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && w(piv, col) == 0) ++piv;
        if (piv == n) return Rat(0);
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(w(piv, j), w(col, j));
            det = -det;
        }
        det *= w(col, col);
        Rat inv = 1 / w(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (w(i, col) == 0) continue;
            Rat f = w(i, col) * inv;
            for (std::size_t j = col; j < n; ++j) w(i, j) -= f * w(col, j);
        }
    }
    return det;
}

std::size_t rat_rank(RatMatrix m) {
    std::vector<std::size_t> piv;
    return eliminate(m, piv);
}

std::optional<RatVector> rat_solve(const RatMatrix& a, const RatVector& b) {
    check(a.rows() == b.size(), "rat_solve: shape mismatch");
    RatMatrix work(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) work(i, j) = a(i, j);
        work(i, a.cols()) = b[i];
    }
    std::vector<std::size_t> piv;
    std::size_t rank = eliminate(work, piv);
    for (std::size_t i = 0; i < rank; ++i)
        if (piv[i] == a.cols()) return std::nullopt;  // row 0 = 1
    RatVector x(a.cols());
    for (std::size_t i = 0; i < rank; ++i) x[piv[i]] = work(i, a.cols());
    return x;
}

Ldlt ldlt(const RatMatrix& a) {
    check(a.rows() == a.cols(), "ldlt: square matrix required");
    std::size_t n = a.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (a(i, j) != a(j, i)) throw ContractError("ldlt: matrix not symmetric");
    Ldlt f{RatMatrix::identity(n), RatVector(n)};
    for (std::size_t j = 0; j < n; ++j) {
        Rat dj = a(j, j);
        for (std::size_t k = 0; k < j; ++k) dj -= f.l(j, k) * f.l(j, k) * f.d[k];
        if (dj <= 0) throw NotPositiveDefinite();
        f.d[j] = dj;
        for (std::size_t i = j + 1; i < n; ++i) {
            Rat v = a(i, j);
            for (std::size_t k = 0; k < j; ++k) v -= f.l(i, k) * f.l(j, k) * f.d[k];
            f.l(i, j) = v / dj;
        }
    }
    return f;
}

Int lcm_of_denominators(const RatVector& v) {
    Int l(1);
    for (const auto& q : v) {
        Int r;
        mpz_lcm(r.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
        l = r;
    }
    return l;
}

Int gcd_of(const IntVector& v) {
    Int g(0);
    for (const auto& z : v) {
        Int r;
        mpz_gcd(r.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
        g = r;
    }
    return g;
}

Int size_of(const RatMatrix& m) {
    Int s(1);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) s = std::max(s, size_of(m(i, j)));
    return s;
}

Int size_of(const IntMatrix& m) {
    Int s(1);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) s = std::max(s, size_of(m(i, j)));
    return s;
}

Int size_of(const RatVector& v) {
    Int s(1);
    for (const auto& q : v) s = std::max(s, size_of(q));
    return s;
}

Int size_of(const IntVector& v) {
    Int s(1);
    for (const auto& z : v) s = std::max(s, size_of(z));
    return s;
}

}  // namespace latmem
