#include "doctest.h"

#include <set>

#include "test_util.hpp"

using namespace inclab;
using namespace testutil;

TEST_CASE("point_on_plane") {
    PrimeField f(5);
    CHECK(point_on_plane(pt(f, 1, 0, 0), pl(f, 0, 0, 1, 0)));
    CHECK_FALSE(point_on_plane(pt(f, 0, 0, 1), pl(f, 0, 0, 1, 0)));
    // 2 + 3 + 4 = 9 = 4 (mod 5)
    CHECK(point_on_plane(pt(f, 2, 3, 4), pl(f, 1, 1, 1, -4)));
}

TEST_CASE("point_on_line") {
    PrimeField f(5);
    CHECK(point_on_line(pt(f, 3, 0, 0), x_axis(f)));
    CHECK_FALSE(point_on_line(pt(f, 0, 1, 0), x_axis(f)));
    // {(t, 0, 3t+3)} at t = 2: z = 9 = 4 (mod 5)
    CHECK(point_on_line(pt(f, 2, 0, 4), ln(f, 0, 0, 3, 1, 0, 3)));
}

TEST_CASE("line_in_plane") {
    PrimeField f(5);
    CHECK(line_in_plane(x_axis(f), pl(f, 0, 0, 1, 0)));
    CHECK_FALSE(line_in_plane(x_axis(f), pl(f, 1, 0, 0, 0)));
    CHECK(line_in_plane(ln(f, 0, 0, 3, 1, 0, 3), pl(f, 3, 0, -1, 3)));
}

TEST_CASE("line_line_intersection") {
    PrimeField f(5);
    SUBCASE("crossing axes") {
        std::optional<Point3> p = line_line_intersection(x_axis(f), y_axis(f));
        REQUIRE(p.has_value());
        CHECK(*p == pt(f, 0, 0, 0));
    }
    SUBCASE("parallel") {
        CHECK_FALSE(line_line_intersection(x_axis(f), ln(f, 0, 1, 0, 1, 0, 0)).has_value());
    }
    SUBCASE("skew") {
        CHECK_FALSE(line_line_intersection(x_axis(f), ln(f, 0, 0, 1, 0, 1, 0)).has_value());
    }
    SUBCASE("equal lines rejected") {
        CHECK_THROWS_AS(line_line_intersection(x_axis(f), ln(f, 2, 0, 0, 3, 0, 0)), EqualLines);
    }
    SUBCASE("symmetry") {
        PrimeField f101(101);
        SplitMix64 rng(5);
        for (int i = 0; i < 1000; ++i) {
            Line3 l1 = random_line(f101, rng);
            Line3 l2 = random_line(f101, rng);
            if (l1 == l2) continue;
            CHECK(line_line_intersection(l1, l2) == line_line_intersection(l2, l1));
        }
    }
}

TEST_CASE("line_through") {
    PrimeField f(5);
    CHECK(line_through(pt(f, 0, 0, 0), pt(f, 1, 0, 0)) == x_axis(f));
    CHECK(line_through(pt(f, 0, 0, 0), pt(f, 0, 0, 1)) == z_axis(f));
    // direction (1, 0, -2) = (1, 0, 3)
    CHECK(line_through(pt(f, 0, 0, 3), pt(f, 1, 0, 1)) == ln(f, 0, 0, 3, 1, 0, 3));
    CHECK_THROWS_AS(line_through(pt(f, 1, 2, 3), pt(f, 1, 2, 3)), EqualPoints);
}

TEST_CASE("plane_plane_intersection") {
    PrimeField f(5);
    SUBCASE("axes") {
        std::optional<Line3> l = plane_plane_intersection(pl(f, 0, 0, 1, 0), pl(f, 0, 1, 0, 0));
        REQUIRE(l.has_value());
        CHECK(*l == x_axis(f));
    }
    SUBCASE("parallel") {
        CHECK_FALSE(plane_plane_intersection(pl(f, 0, 0, 1, 0), pl(f, 0, 0, 1, -1)).has_value());
    }
    SUBCASE("z=0 and x+z=1") {
        std::optional<Line3> l = plane_plane_intersection(pl(f, 0, 0, 1, 0), pl(f, 1, 0, 1, -1));
        REQUIRE(l.has_value());
        CHECK(*l == ln(f, 1, 0, 0, 0, 1, 0));
    }
    SUBCASE("equal planes rejected") {
        CHECK_THROWS_AS(plane_plane_intersection(pl(f, 0, 0, 1, 0), pl(f, 0, 0, 2, 0)),
                        EqualPlanes);
    }
    SUBCASE("result lies in both planes") {
        PrimeField f101(101);
        SplitMix64 rng(6);
        for (int i = 0; i < 500; ++i) {
            Plane3 q1 = random_plane(f101, rng);
            Plane3 q2 = random_plane(f101, rng);
            if (q1 == q2) continue;
            std::optional<Line3> l = plane_plane_intersection(q1, q2);
            if (!l) continue;
            CHECK(line_in_plane(*l, q1));
            CHECK(line_in_plane(*l, q2));
        }
    }
}

TEST_CASE("plane_through_lines") {
    PrimeField f(101);
    SUBCASE("intersecting") {
        std::optional<Plane3> q = plane_through_lines(x_axis(f), y_axis(f));
        REQUIRE(q.has_value());
        CHECK(*q == pl(f, 0, 0, 1, 0));
    }
    SUBCASE("parallel") {
        std::optional<Plane3> q = plane_through_lines(x_axis(f), ln(f, 0, 0, 1, 1, 0, 0));
        REQUIRE(q.has_value());
        CHECK(line_in_plane(x_axis(f), *q));
        CHECK(line_in_plane(ln(f, 0, 0, 1, 1, 0, 0), *q));
    }
    SUBCASE("skew") {
        CHECK_FALSE(plane_through_lines(x_axis(f), ln(f, 0, 0, 1, 0, 1, 0)).has_value());
    }
}

TEST_CASE("canonical forms identify equal loci") {
    PrimeField f(101);
    SplitMix64 rng(7);
    for (int i = 0; i < 1000; ++i) {
        Line3 l = random_line(f, rng);
        Fe t1 = f.sample(rng), t2 = f.sample(rng);
        if (t1 == t2) continue;
        CHECK(line_through(l.at(t1), l.at(t2)) == l);
    }
    for (int i = 0; i < 1000; ++i) {
        Plane3 q = random_plane(f, rng);
        Fe s = f.sample_nonzero(rng);
        CHECK(Plane3(s * q.a(), s * q.b(), s * q.c(), s * q.d()) == q);
    }
}

TEST_CASE("a line over F_5 has exactly 5 distinct points") {
    PrimeField f(5);
    SplitMix64 rng(8);
    for (int i = 0; i < 50; ++i) {
        Line3 l = random_line(f, rng);
        std::vector<Point3> pts = l.points();
        REQUIRE(pts.size() == 5);
        CHECK(std::set<Point3>(pts.begin(), pts.end()).size() == 5);
        for (const Point3& p : pts) CHECK(point_on_line(p, l));
    }
}

TEST_CASE("apply_affine") {
    PrimeField f(5);
    SUBCASE("identity") {
        AffineMap id = AffineMap::identity(f);
        CHECK(id.apply(pt(f, 1, 2, 3)) == pt(f, 1, 2, 3));
        CHECK(id.apply(pl(f, 1, 2, 3, 4)) == pl(f, 1, 2, 3, 4));
        CHECK(id.apply(ln(f, 0, 0, 3, 1, 0, 3)) == ln(f, 0, 0, 3, 1, 0, 3));
    }
    SUBCASE("translation") {
        Fe z = f.zero(), o = f.one();
        AffineMap shift({o, z, z, z, o, z, z, z, o}, {z, z, o});
        CHECK(shift.apply(pt(f, 0, 0, 0)) == pt(f, 0, 0, 1));
    }
    SUBCASE("swap x and z maps plane z=0 to x=0") {
        Fe z = f.zero(), o = f.one();
        AffineMap swap_xz({z, z, o, z, o, z, o, z, z}, {z, z, z});
        Plane3 image = swap_xz.apply(pl(f, 0, 0, 1, 0));
        CHECK(image == pl(f, 1, 0, 0, 0));
        // a point of z=0 lands on the image plane
        CHECK(point_on_plane(swap_xz.apply(pt(f, 2, 3, 0)), image));
    }
    SUBCASE("singular linear part rejected") {
        Fe z = f.zero(), o = f.one();
        CHECK_THROWS_AS(AffineMap({o, z, z, o, z, z, z, z, o}, {z, z, z}), PreconditionError);
    }
}

TEST_CASE("affine maps preserve incidence predicates") {
    PrimeField f(101);
    SplitMix64 rng(9);
    for (int i = 0; i < 1000; ++i) {
        AffineMap map = random_invertible_affine(f, rng);
        auto [p_on, q] = random_incident_pair(f, rng);
        CHECK(point_on_plane(map.apply(p_on), map.apply(q)));

        Point3 p = random_point(f, rng);
        Plane3 q2 = random_plane(f, rng);
        CHECK(point_on_plane(p, q2) == point_on_plane(map.apply(p), map.apply(q2)));

        Line3 l = random_line(f, rng);
        CHECK(point_on_line(p, l) == point_on_line(map.apply(p), map.apply(l)));
        CHECK(line_in_plane(l, q2) == line_in_plane(map.apply(l), map.apply(q2)));
    }
}

TEST_CASE("random_invertible_affine is deterministic per seed") {
    PrimeField f(101);
    SplitMix64 r1(123), r2(123);
    AffineMap m1 = random_invertible_affine(f, r1);
    AffineMap m2 = random_invertible_affine(f, r2);
    CHECK(m1.linear() == m2.linear());
    CHECK(m1.shift() == m2.shift());
}
