#include "doctest.h"
#include "latmem/cvp.hpp"
#include "latmem/oracle.hpp"
#include "testutil.hpp"

using namespace latmem;
using namespace latmem::testing;

namespace {

NormSpec fixed_poly_norm_a(std::size_t n) {
    // box combined with the all-ones slab
    IntMatrix h(n + 1, n);
    IntVector beta(n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        h(i, i) = 1;
        beta[i] = 1;
    }
    for (std::size_t j = 0; j < n; ++j) h(n, j) = 1;
    beta[n] = 2;
    return NormSpec::polyhedral(std::move(h), std::move(beta));
}

NormSpec fixed_poly_norm_b(std::size_t n) {
    // skewed pairs 2e_i and e_i - e_{i+1}
    std::size_t rows = n + (n >= 2 ? n - 1 : 0);
    IntMatrix h(rows, n);
    IntVector beta(rows);
    for (std::size_t i = 0; i < n; ++i) {
        h(i, i) = 2;
        beta[i] = 3;
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        h(n + i, i) = 1;
        h(n + i, i + 1) = -1;
        beta[n + i] = 2;
    }
    return NormSpec::polyhedral(std::move(h), std::move(beta));
}

}  // namespace

TEST_CASE("enumerability worked examples") {
    CHECK(enumerability(NormSpec::lp(3)).k == 3);
    CHECK(enumerability(NormSpec::lp(3)).cap == 1);
    CHECK(enumerability(NormSpec::linf()).k == 1);
    CHECK(enumerability(NormSpec::linf()).cap == 1);
    IntMatrix h(2, 2, {1, 0, 0, 1});
    NormSpec poly = NormSpec::polyhedral(h, {Int(2), Int(3)});
    CHECK(enumerability(poly).k == 1);
    CHECK(enumerability(poly).cap == 6);
    // 200 random integer vectors: K ||x||^k is integral, exactly
    Rng rng(109);
    for (int it = 0; it < 200; ++it) {
        IntVector x = rng.int_vector(2, -9, 9);
        for (const NormSpec& norm :
             {NormSpec::lp(2), NormSpec::lp(3), NormSpec::linf(), poly}) {
            EnumerableNorm e = enumerability(norm);
            CHECK(is_integer(Rat(e.cap) * norm_pow(norm, to_rat(x))));
        }
    }
}

TEST_CASE("appendix l1 counterexample fixture") {
    IntMatrix basis(2, 1, {4, 7});
    IntVector t{Int(0), Int(5)};
    NormSpec l1 = NormSpec::lp(1);

    SUBCASE("decision thresholds") {
        CHECK(cvp_decision(basis, t, l1, Rat(5)));
        CHECK(!cvp_decision(basis, t, l1, Rat(4)));
        CHECK(cvp_decision(basis, IntVector{Int(4), Int(7)}, l1, Rat(0)));
    }
    SUBCASE("optimization") {
        CHECK(cvp_optimize(basis, t, l1) == 5);
    }
    SUBCASE("search returns the origin") {
        CvpResult r = cvp_search(basis, t, l1);
        CHECK(r.distance_pow == 5);
        CHECK(r.closest == IntVector{Int(0), Int(0)});
        CHECK(r.coeffs == IntVector{Int(0)});
    }
    SUBCASE("projection foils: closest to the orthogonal projection is b1") {
        RatVector t_perp{make_rat(28, 13), make_rat(49, 13)};
        OracleCvpResult r = oracle_cvp(basis, t_perp, l1);
        CHECK(r.closest == IntVector{Int(4), Int(7)});
    }
    SUBCASE("projection foils: closest to the l1 projection is b1") {
        RatVector t_min{make_rat(20, 7), Rat(5)};
        OracleCvpResult r = oracle_cvp(basis, t_min, l1);
        CHECK(r.closest == IntVector{Int(4), Int(7)});
    }
}

TEST_CASE("cvp_optimize worked examples") {
    SUBCASE("t in the lattice") {
        IntMatrix basis(2, 2, {1, 0, 0, 1});
        CHECK(cvp_optimize(basis, {Int(3), Int(-2)}, NormSpec::lp(2)) == 0);
    }
    SUBCASE("parity lattice under l-infinity") {
        IntMatrix basis(2, 2, {2, 0, 0, 2});
        CHECK(cvp_optimize(basis, {Int(1), Int(1)}, NormSpec::linf()) == 1);
    }
}

TEST_CASE("cvp errors and out-of-span targets") {
    IntMatrix dep(2, 2, {1, 2, 2, 4});
    CHECK_THROWS_AS(cvp_optimize(dep, {Int(1), Int(2)}, NormSpec::lp(2)), RankDeficient);
    // targets outside the span are legal: ambient-norm distance
    IntMatrix basis(2, 1, {1, 0});
    CHECK(cvp_optimize(basis, {Int(0), Int(3)}, NormSpec::lp(2)) == 9);
    CvpResult r = cvp_search(basis, {Int(2), Int(3)}, NormSpec::lp(2));
    CHECK(r.distance_pow == 9);
    CHECK(r.closest == IntVector{Int(2), Int(0)});
}

TEST_CASE("monotone consistency of decision around the optimum") {
    Rng rng(113);
    std::vector<NormSpec> norms{NormSpec::lp(1), NormSpec::lp(2), NormSpec::lp(3),
                                NormSpec::linf(), fixed_poly_norm_a(2)};
    for (int it = 0; it < 10; ++it) {
        IntMatrix basis = rng.full_rank_int_matrix(2, 2, -4, 4);
        IntVector t = rng.int_vector(2, -5, 5);
        const NormSpec& norm = norms[std::size_t(it) % norms.size()];
        Rat mu = cvp_optimize(basis, t, norm);
        if (mu == 0) continue;
        Int cap = enumerability(norm).cap;
        Rat eps = make_rat(1, 3 * cap * cap);
        CHECK(cvp_decision(basis, t, norm, mu));
        CHECK(cvp_decision(basis, t, norm, mu + eps));
        CHECK(!cvp_decision(basis, t, norm, mu - eps));
    }
}

TEST_CASE("cvp_search differential against the oracle") {
    Rng rng(127);
    std::vector<NormSpec> base_norms{NormSpec::lp(1), NormSpec::lp(2), NormSpec::lp(3),
                                     NormSpec::lp(4), NormSpec::linf()};
    int done = 0;
    while (done < 25) {
        std::size_t n = std::size_t(rng.uniform(1, 3));
        std::size_t m = std::size_t(rng.uniform(1, long(n)));
        IntMatrix basis = rng.full_rank_int_matrix(n, m, -5, 5);
        // target inside the span: saturate and combine
        IntMatrix sat = saturation(basis);
        IntVector coeffs = rng.int_vector(sat.cols(), -6, 6);
        IntVector t = sat * coeffs;
        std::vector<NormSpec> norms = base_norms;
        norms.push_back(fixed_poly_norm_a(n));
        norms.push_back(fixed_poly_norm_b(n));
        const NormSpec& norm = norms[std::size_t(done) % norms.size()];
        OracleCvpResult expect = oracle_cvp(basis, to_rat(t), norm);
        CvpResult got = cvp_search(basis, t, norm);
        CHECK(got.distance_pow == expect.distance_pow);
        RatVector diff(n);
        for (std::size_t i = 0; i < n; ++i) diff[i] = Rat(t[i] - got.closest[i]);
        CHECK(norm_pow(norm, diff) == got.distance_pow);
        CHECK(basis * got.coeffs == got.closest);
        ++done;
    }
}

TEST_CASE("oracle invariances") {
    Rng rng(131);
    IntMatrix basis(2, 2, {3, 1, 1, 2});
    IntVector t{Int(2), Int(-3)};
    NormSpec norm = NormSpec::lp(3);
    OracleCvpResult base = oracle_cvp(basis, to_rat(t), norm);
    SUBCASE("unimodular rebase") {
        IntMatrix u(2, 2, {1, 1, 0, 1});
        OracleCvpResult re = oracle_cvp(basis * u, to_rat(t), norm);
        CHECK(re.distance_pow == base.distance_pow);
        CHECK(re.closest == base.closest);
    }
    SUBCASE("integer translation by a lattice vector") {
        IntVector shift = basis * IntVector{Int(1), Int(-1)};
        IntVector t2(2);
        for (std::size_t i = 0; i < 2; ++i) t2[i] = t[i] + shift[i];
        OracleCvpResult tr = oracle_cvp(basis, to_rat(t2), norm);
        CHECK(tr.distance_pow == base.distance_pow);
    }
}
