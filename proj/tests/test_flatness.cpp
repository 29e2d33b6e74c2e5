#include "doctest.h"
#include "latmem/flatness.hpp"
#include "testutil.hpp"

using namespace latmem;
using namespace latmem::testing;

TEST_CASE("flatness_ellipsoid worked examples") {
    SUBCASE("wide ball contains an integer point") {
        RatMatrix d(2, 2, {Rat(4), Rat(0), Rat(0), Rat(4)});
        Ellipsoid e(d, RatVector(2, Rat(0)));
        CHECK(flatness_ellipsoid(e).kind == FlatnessKind::ContainsInteger);
    }
    SUBCASE("thin off-grid ball yields an empty interval") {
        RatMatrix d(2, 2, {make_rat(1, 16), Rat(0), Rat(0), make_rat(1, 16)});
        Ellipsoid e(d, RatVector(2, make_rat(1, 2)));
        FlatnessOutcome f = flatness_ellipsoid(e);
        REQUIRE(f.kind == FlatnessKind::Direction);
        CHECK(f.k_min == 1);
        CHECK(f.k_max == 0);  // empty: the ball misses the integer grid
    }
}

TEST_CASE("flatness_ellipsoid interval length and completeness") {
    Rng rng(89);
    for (int it = 0; it < 60; ++it) {
        std::size_t m = std::size_t(rng.uniform(2, 3));
        RatMatrix d = rng.spd_matrix(m, 2);
        // shrink to keep widths small sometimes
        if (rng.uniform(0, 1)) {
            Rat f = make_rat(1, rng.uniform_int(2, 9));
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < m; ++j) d(i, j) *= f;
        }
        Ellipsoid e(d, rng.rat_vector(m, 4, 3));
        FlatnessOutcome f = flatness_ellipsoid(e);
        RatMatrix dinv = rat_inverse(e.d);
        if (f.kind == FlatnessKind::ContainsInteger) {
            // soundness witnessed by brute force
            bool found = false;
            long box = 12;
            for_each_box_vector(m, box, [&](const IntVector& z) {
                if (found) return;
                RatVector diff(m);
                for (std::size_t i = 0; i < m; ++i) diff[i] = Rat(z[i]) - e.c[i];
                if (dot(diff, dinv * diff) <= 1) found = true;
            });
            RatVector czero(m, Rat(0));
            for (std::size_t i = 0; i < m; ++i) czero[i] = -e.c[i];
            if (dot(czero, dinv * czero) <= 1) found = true;
            CHECK(found);
        } else {
            REQUIRE(f.kind == FlatnessKind::Direction);
            CHECK(Rat(f.k_max - f.k_min) <= Rat(Int(m)));
            // completeness: every integer point of E lies on a kept slice
            for_each_box_vector(m, 12, [&](const IntVector& z) {
                RatVector diff(m);
                for (std::size_t i = 0; i < m; ++i) diff[i] = Rat(z[i]) - e.c[i];
                if (dot(diff, dinv * diff) > 1) return;
                Int k = dot_ii(f.direction, z);
                CHECK(f.k_min <= k);
                CHECK(k <= f.k_max);
            });
        }
    }
}

TEST_CASE("flatness_polytope worked examples") {
    SUBCASE("fat box") {
        IntMatrix a(4, 2, {1, 0, -1, 0, 0, 1, 0, -1});
        Polytope p(a, {Int(10), Int(0), Int(10), Int(0)});  // [0,10]^2
        CHECK(flatness_polytope(p).kind == FlatnessKind::ContainsInteger);
    }
    SUBCASE("thin slab direction") {
        // 1/4 <= x1 <= 3/4, 0 <= x2 <= 5
        IntMatrix a(4, 2, {4, 0, -4, 0, 0, 1, 0, -1});
        Polytope p(a, {Int(3), Int(-1), Int(5), Int(0)});
        FlatnessOutcome f = flatness_polytope(p);
        REQUIRE(f.kind == FlatnessKind::Direction);
        CHECK(abs(f.direction[0]) == 1);
        CHECK(f.direction[1] == 0);
        // completeness over the box: P has no integer points at all
        for_each_box_vector(2, 6, [&](const IntVector& z) { CHECK(!p.contains(z)); });
    }
    SUBCASE("translation equivariance") {
        IntMatrix a(4, 2, {4, 0, -4, 0, 0, 1, 0, -1});
        Polytope p(a, {Int(3), Int(-1), Int(5), Int(0)});
        Polytope q(a, {Int(3) + 4, Int(-1) - 4, Int(5) + 1, Int(0) - 1});  // +(1,1)
        FlatnessOutcome fp = flatness_polytope(p);
        FlatnessOutcome fq = flatness_polytope(q);
        REQUIRE(fp.kind == FlatnessKind::Direction);
        REQUIRE(fq.kind == FlatnessKind::Direction);
        CHECK(fq.direction == fp.direction);
        Int shift = fp.direction[0] + fp.direction[1];  // <d, (1,1)>
        CHECK(fq.k_min == fp.k_min + shift);
        CHECK(fq.k_max == fp.k_max + shift);
    }
    SUBCASE("one-dimensional short circuit") {
        IntMatrix a(2, 1, {2, -2});
        CHECK(flatness_polytope(Polytope(a, {Int(5), Int(-1)})).kind ==
              FlatnessKind::ContainsInteger);  // [1/2, 5/2]
        FlatnessOutcome f = flatness_polytope(Polytope(a, {Int(1), Int(0)}));  // [0, 1/2]
        CHECK(f.kind == FlatnessKind::ContainsInteger);                        // contains 0
        FlatnessOutcome g = flatness_polytope(Polytope(a, {Int(3), Int(-1)}));  // [1/2, 3/2]
        CHECK(g.kind == FlatnessKind::ContainsInteger);                         // contains 1
        FlatnessOutcome h = flatness_polytope(Polytope(a, {Int(1), Int(1)}));  // [-1/2, 1/2]
        CHECK(h.kind == FlatnessKind::ContainsInteger);                        // contains 0
        FlatnessOutcome e = flatness_polytope(Polytope(a, {Int(3), Int(-2)}));  // [1, 3/2]
        CHECK(e.kind == FlatnessKind::ContainsInteger);
        FlatnessOutcome none =
            flatness_polytope(Polytope(IntMatrix(2, 1, {4, -4}), {Int(3), Int(-1)}));  // [1/4,3/4]
        REQUIRE(none.kind == FlatnessKind::Direction);
        CHECK(none.k_min > none.k_max);
    }
}

TEST_CASE("flatness_lp worked examples") {
    SUBCASE("fat l2 ball") {
        LpBody ball = LpBody::from_radius(2, RatMatrix::identity(2), RatVector(2, Rat(0)),
                                          Rat(2), 2);
        CHECK(flatness_lp(ball).kind == FlatnessKind::ContainsInteger);
    }
    SUBCASE("tiny l4 ball has no integer point") {
        LpBody tiny = LpBody::from_radius(4, RatMatrix::identity(2),
                                          {make_rat(1, 2), make_rat(1, 2)}, make_rat(1, 100), 2);
        RoundingConfig cfg;
        cfg.decide_integer = true;
        CHECK(flatness_lp(tiny, cfg).kind == FlatnessKind::NoInteger);
    }
    SUBCASE("l3 ball radius 3/4 around the half-integer center") {
        // the l3 distance from (1/2,1/2) to the four neighbors is (1/4)^{1/3}
        // < 3/4, so the ball does contain integer points
        LpBody ball = LpBody::from_radius(3, RatMatrix::identity(2),
                                          {make_rat(1, 2), make_rat(1, 2)}, make_rat(3, 4), 2);
        CHECK(ball.contains(IntVector{Int(0), Int(0)}));
        FlatnessOutcome f = flatness_lp(ball);
        CHECK(f.kind != FlatnessKind::NoInteger);
        if (f.kind == FlatnessKind::Direction) {
            CHECK(Rat(f.k_max - f.k_min) <= rho_impl(2) * 2);
            for_each_box_vector(2, 2, [&](const IntVector& z) {
                if (!ball.contains(z)) return;
                Int k = dot_ii(f.direction, z);
                CHECK(f.k_min <= k);
                CHECK(k <= f.k_max);
            });
        }
    }
    SUBCASE("l3 ball radius 1/3 around the half-integer center") {
        LpBody ball = LpBody::from_radius(3, RatMatrix::identity(2),
                                          {make_rat(1, 2), make_rat(1, 2)}, make_rat(1, 3), 2);
        FlatnessOutcome f = flatness_lp(ball);
        if (f.kind == FlatnessKind::Direction) {
            // completeness is vacuous: the ball has no integer points
            for_each_box_vector(2, 2, [&](const IntVector& z) { CHECK(!ball.contains(z)); });
        } else {
            CHECK(f.kind == FlatnessKind::NoInteger);
        }
    }
}
