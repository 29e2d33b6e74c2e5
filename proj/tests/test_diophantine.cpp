#include "doctest.h"
#include "latmem/diophantine.hpp"
#include "testutil.hpp"

using namespace latmem;
using namespace latmem::testing;

namespace {

void check_sda_invariants(const RatVector& alpha, const Int& n_param, const SimDiophApprox& a) {
    REQUIRE(a.q >= 1);
    CHECK(a.q <= sim_dioph_q_bound(alpha.size(), n_param));
    Rat inv_n = make_rat(1, n_param);
    for (std::size_t i = 0; i < alpha.size(); ++i)
        CHECK(abs(Rat(a.q) * alpha[i] - Rat(a.p[i])) < inv_n);
}

// All integer z with ||z||_1 <= radius.
template <class F>
void for_each_l1_ball(std::size_t n, long radius, F&& f) {
    for_each_box_vector(n, radius, [&](const IntVector& z) {
        Int l1(0);
        for (const auto& x : z) l1 += abs(x);
        if (l1 <= radius) f(z);
    });
    f(IntVector(n, Int(0)));
}

}  // namespace

TEST_CASE("simultaneous_approx worked examples") {
    SUBCASE("integer input") {
        RatVector alpha{Rat(3), Rat(-2)};
        SimDiophApprox a = simultaneous_approx(alpha, Int(5));
        CHECK(a.q == 1);
        CHECK(a.p == IntVector{Int(3), Int(-2)});
    }
    SUBCASE("common denominator 7") {
        RatVector alpha{make_rat(5, 7), make_rat(3, 7)};
        SimDiophApprox a = simultaneous_approx(alpha, Int(3));
        check_sda_invariants(alpha, Int(3), a);
    }
    SUBCASE("one half") {
        RatVector alpha{make_rat(1, 2)};
        SimDiophApprox a = simultaneous_approx(alpha, Int(3));
        CHECK(a.q == 2);
        CHECK(a.p == IntVector{Int(1)});
    }
}

TEST_CASE("simultaneous_approx randomized invariants") {
    Rng rng(67);
    for (int it = 0; it < 500; ++it) {
        std::size_t n = std::size_t(rng.uniform(1, 3));
        RatVector alpha = rng.rat_vector(n, 1000, 1000);
        Int n_param = rng.uniform_int(2, 8);
        check_sda_invariants(alpha, n_param, simultaneous_approx(alpha, n_param));
    }
}

TEST_CASE("frank_tardos_decompose worked examples") {
    SUBCASE("already small") {
        RatVector w{Rat(1), Rat(-1), Rat(0)};
        auto terms = frank_tardos_decompose(w, Int(4));
        REQUIRE(terms.size() == 1);
        CHECK(terms[0].chi == 1);
        CHECK(terms[0].wbar == IntVector{Int(1), Int(-1), Int(0)});
    }
    SUBCASE("uniform direction") {
        RatVector w{make_rat(1, 3), make_rat(1, 3)};
        auto terms = frank_tardos_decompose(w, Int(4));
        REQUIRE(terms.size() == 1);
        CHECK(terms[0].wbar == IntVector{Int(1), Int(1)});
        CHECK(terms[0].chi == make_rat(1, 3));
    }
    SUBCASE("large mixed magnitudes") {
        Int big = pow_int(10, 9) + 1;
        RatVector w{Rat(1), Rat(big)};
        auto terms = frank_tardos_decompose(w, Int(4));
        CHECK(terms.size() >= 2);
        RatVector acc(2, Rat(0));
        for (const auto& t : terms) {
            CHECK(t.chi > 0);
            for (std::size_t i = 0; i < 2; ++i) acc[i] += t.chi * Rat(t.wbar[i]);
        }
        CHECK(acc == w);
        for_each_l1_ball(2, 3, [&](const IntVector& z) {
            bool lhs = dot(z, w) == 0;
            bool rhs = true;
            for (const auto& t : terms) rhs = rhs && dot_ii(z, t.wbar) == 0;
            CHECK(lhs == rhs);
        });
    }
}

TEST_CASE("frank_tardos_decompose randomized invariants") {
    Rng rng(71);
    for (int it = 0; it < 250; ++it) {
        std::size_t n = std::size_t(rng.uniform(1, 3));
        RatVector w = rng.rat_vector(n, 40, 12);
        if (is_zero(w)) continue;
        Int n_param = rng.uniform_int(2, 5);
        auto terms = frank_tardos_decompose(w, n_param);
        CHECK(terms.size() <= n);
        Int bound = ft_coeff_bound(n, n_param);
        RatVector acc(n, Rat(0));
        for (const auto& t : terms) {
            CHECK(t.chi > 0);
            CHECK(size_of(t.wbar) <= bound);
            for (std::size_t i = 0; i < n; ++i) acc[i] += t.chi * Rat(t.wbar[i]);
        }
        CHECK(acc == w);
        long radius = n_param.get_si() - 1;
        for_each_l1_ball(n, radius, [&](const IntVector& z) {
            bool lhs = dot(z, w) == 0;
            bool rhs = true;
            for (const auto& t : terms) rhs = rhs && dot_ii(z, t.wbar) == 0;
            CHECK(lhs == rhs);
        });
    }
}

TEST_CASE("replace_hyperplane worked examples") {
    SUBCASE("already minimal") {
        AffineSubspace h;
        auto rep = replace_hyperplane(h, {Int(1), Int(0)}, Int(0), Int(4));
        REQUIRE(rep.has_value());
        REQUIRE(rep->planes.size() == 1);
        CHECK(rep->planes[0].normal == IntVector{Int(1), Int(0)});
        CHECK(rep->planes[0].offset == 0);
    }
    SUBCASE("huge coefficients shrink") {
        AffineSubspace h;
        IntVector d{pow_int(10, 12), Int(1)};
        Int k(5), n_param(4);
        auto rep = replace_hyperplane(h, d, k, n_param);
        Int bound = pow_int(2, 16) * 16;  // 2^{(n+2)^2} N^n
        if (rep) {
            for (const auto& pl : rep->planes) {
                CHECK(size_of(pl.normal) <= bound);
                CHECK(size_of(pl.offset) <= bound);
            }
        }
        for_each_l1_ball(2, 3, [&](const IntVector& z) {
            bool lhs = dot_ii(d, z) == k;
            bool rhs = rep.has_value();
            if (rep)
                for (const auto& pl : rep->planes) rhs = rhs && dot_ii(pl.normal, z) == pl.offset;
            CHECK(lhs == rhs);
        });
    }
    SUBCASE("dependent input") {
        AffineSubspace h{{Hyperplane{{Int(1), Int(1)}, Int(0)}}};
        CHECK_THROWS_AS(replace_hyperplane(h, {Int(2), Int(2)}, Int(0), Int(4)), DependentInput);
    }
}

TEST_CASE("replace_hyperplane randomized equivalence") {
    Rng rng(73);
    int done = 0;
    while (done < 220) {
        std::size_t n = std::size_t(rng.uniform(1, 3));
        std::size_t codim = n >= 2 ? std::size_t(rng.uniform(0, long(n) - 1)) : 0;
        AffineSubspace h;
        for (std::size_t i = 0; i < codim; ++i)
            h.planes.push_back(Hyperplane{rng.int_vector(n, -5, 5), rng.uniform_int(-4, 4)});
        IntVector d = rng.int_vector(n, -50, 50);
        Int k = rng.uniform_int(-30, 30);
        Int n_param = rng.uniform_int(2, 6);
        std::optional<ReplacementSet> rep;
        try {
            rep = replace_hyperplane(h, d, k, n_param);
        } catch (const ContractError&) {
            continue;  // dependent random normals; resample
        }
        ++done;
        if (rep) {
            CHECK(!rep->planes.empty());
            // joint independence
            std::size_t rows = h.planes.size() + rep->planes.size();
            RatMatrix all(rows, n);
            std::size_t r = 0;
            for (const auto& pl : h.planes) {
                for (std::size_t j = 0; j < n; ++j) all(r, j) = Rat(pl.normal[j]);
                ++r;
            }
            for (const auto& pl : rep->planes) {
                for (std::size_t j = 0; j < n; ++j) all(r, j) = Rat(pl.normal[j]);
                ++r;
            }
            CHECK(rat_rank(all) == rows);
            Int bound = pow_int(2, (n + 2) * (n + 2)) * pow_int(n_param, n);
            for (const auto& pl : rep->planes) {
                CHECK(size_of(pl.normal) <= bound);
                CHECK(size_of(pl.offset) <= bound);
            }
        }
        long radius = n_param.get_si() - 1;
        for_each_l1_ball(n, radius, [&](const IntVector& z) {
            for (const auto& pl : h.planes)
                if (dot_ii(pl.normal, z) != pl.offset) return;  // z outside H
            bool lhs = dot_ii(d, z) == k;
            bool rhs = rep.has_value();
            if (rep)
                for (const auto& pl : rep->planes) rhs = rhs && dot_ii(pl.normal, z) == pl.offset;
            CHECK(lhs == rhs);
        });
    }
}
