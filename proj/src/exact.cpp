#include "latmem/exact.hpp"

namespace latmem {

namespace {

void negate_col(IntMatrix& m, std::size_t j) {
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) = -m(i, j);
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// col_a := p*col_a + q*col_b, col_b := r*col_a_old + s*col_b_old, ps - qr = +-1.
void combine_cols(IntMatrix& m, std::size_t a, std::size_t b, const Int& p, const Int& q,
                  const Int& r, const Int& s) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Int va = m(i, a), vb = m(i, b);
        m(i, a) = p * va + q * vb;
        m(i, b) = r * va + s * vb;
    }
}

void shear_col(IntMatrix& m, std::size_t dst, std::size_t src, const Int& f) {
    if (f == 0) return;
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) -= f * m(i, src);
}

}  // namespace

HnfResult hnf(const IntMatrix& m) {
    HnfResult res{m, IntMatrix::identity(m.cols()), 0};
    IntMatrix& h = res.h;
    IntMatrix& u = res.u;
    std::size_t pivot = 0;
    for (std::size_t i = 0; i < m.rows() && pivot < m.cols(); ++i) {
        std::size_t j = pivot;
        while (j < m.cols() && h(i, j) == 0) ++j;
        if (j == m.cols()) continue;
        if (j != pivot) {
            swap_cols(h, pivot, j);
            swap_cols(u, pivot, j);
        }
        for (j = pivot + 1; j < m.cols(); ++j) {
            if (h(i, j) == 0) continue;
            Int g, p, q;
            mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(), h(i, pivot).get_mpz_t(),
                       h(i, j).get_mpz_t());
            Int r = -h(i, j) / g, s = h(i, pivot) / g;
            combine_cols(h, pivot, j, p, q, r, s);
            combine_cols(u, pivot, j, p, q, r, s);
        }
        if (h(i, pivot) < 0) {
            negate_col(h, pivot);
            negate_col(u, pivot);
        }
        for (j = 0; j < pivot; ++j) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), h(i, j).get_mpz_t(), h(i, pivot).get_mpz_t());
            shear_col(h, j, pivot, q);
            shear_col(u, j, pivot, q);
        }
        ++pivot;
    }
    res.rank = pivot;
    return res;
}

IntMatrix integer_kernel(const IntMatrix& m) {
    HnfResult r = hnf(m);
    std::size_t dim = m.cols() - r.rank;
    IntMatrix k(m.cols(), dim);
    for (std::size_t j = 0; j < dim; ++j)
        k.set_col(j, r.u.col(r.rank + j));
    if (dim == 0) return k;
    // HNF-normalize the kernel basis so the output is deterministic.
    HnfResult kn = hnf(k);
    check(kn.rank == dim, "integer_kernel: normalization lost rank");
    IntMatrix out(m.cols(), dim);
    for (std::size_t j = 0; j < dim; ++j) out.set_col(j, kn.h.col(j));
    return out;
}

namespace {

struct GsData {
    RatMatrix mu;  // strictly lower part used
    RatVector b;   // squared Gram-Schmidt norms
};

GsData gram_schmidt(const RatMatrix& g) {
    std::size_t n = g.cols();
    GsData gs{RatMatrix(n, n), RatVector(n)};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            Rat v = g(i, j);
            for (std::size_t k = 0; k < j; ++k) v -= gs.mu(j, k) * gs.mu(i, k) * gs.b[k];
            if (gs.b[j] == 0) throw RankDeficient();
            gs.mu(i, j) = v / gs.b[j];
        }
        Rat bi = g(i, i);
        for (std::size_t k = 0; k < i; ++k) bi -= gs.mu(i, k) * gs.mu(i, k) * gs.b[k];
        if (bi <= 0) throw RankDeficient();
        gs.b[i] = bi;
    }
    return gs;
}

// Gram update for basis op b_k -= r * b_j.
void gram_shear(RatMatrix& g, std::size_t k, std::size_t j, const Int& r) {
    std::size_t n = g.cols();
    Rat rr(r);
    Rat gkk = g(k, k) - 2 * rr * g(k, j) + rr * rr * g(j, j);
    for (std::size_t i = 0; i < n; ++i) {
        if (i == k) continue;
        g(i, k) -= rr * g(i, j);
        g(k, i) = g(i, k);
    }
    g(k, k) = gkk;
}

void gram_swap(RatMatrix& g, std::size_t a, std::size_t b) {
    std::size_t n = g.cols();
    for (std::size_t i = 0; i < n; ++i) std::swap(g(a, i), g(b, i));
    for (std::size_t i = 0; i < n; ++i) std::swap(g(i, a), g(i, b));
}

}  // namespace

IntMatrix lll_gram(const RatMatrix& g0, const Rat& delta) {
    check(g0.rows() == g0.cols(), "lll_gram: square Gram matrix required");
    if (!(delta > make_rat(1, 4) && delta < 1))
        throw ContractError("lll_gram: delta must lie in (1/4, 1)");
    std::size_t n = g0.cols();
    IntMatrix u = IntMatrix::identity(n);
    if (n <= 1) {
        if (n == 1 && g0(0, 0) <= 0) throw RankDeficient();
        return u;
    }
    RatMatrix g = g0;
    GsData gs = gram_schmidt(g);
    Rat half = make_rat(1, 2);
    std::size_t k = 1;
    while (k < n) {
        for (std::size_t jj = k; jj-- > 0;) {
            if (abs(gs.mu(k, jj)) > half) {
                Int r = round_rat(gs.mu(k, jj));
                gram_shear(g, k, jj, r);
                shear_col(u, k, jj, r);
                gs = gram_schmidt(g);
            }
        }
        if (gs.b[k] >= (delta - gs.mu(k, k - 1) * gs.mu(k, k - 1)) * gs.b[k - 1]) {
            ++k;
        } else {
            gram_swap(g, k - 1, k);
            swap_cols(u, k - 1, k);
            gs = gram_schmidt(g);
            k = k > 1 ? k - 1 : 1;
        }
    }
    return u;
}

RatMatrix gram(const RatMatrix& b) { return b.transposed() * b; }

LllResult lll_reduce(const RatMatrix& b, const Rat& delta) {
    IntMatrix u = lll_gram(gram(b), delta);
    return LllResult{b * to_rat(u), u};
}

}  // namespace latmem
