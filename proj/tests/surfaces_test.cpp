#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "inclab/constructions.hpp"
#include "inclab/surfaces.hpp"
#include "inclab/transform.hpp"
#include "test_util.hpp"

using namespace inclab;
using namespace testutil;

namespace {

Quadric quad(const PrimeField& f, std::initializer_list<std::int64_t> coeffs) {
    std::array<Fe, 10> c = {f.zero(), f.zero(), f.zero(), f.zero(), f.zero(),
                            f.zero(), f.zero(), f.zero(), f.zero(), f.zero()};
    std::size_t i = 0;
    for (std::int64_t v : coeffs) c[i++] = f.element(v);
    return Quadric(c);
}

// coefficient order (x^2, y^2, z^2, xy, xz, yz, x, y, z, 1)
Quadric z_squared(const PrimeField& f) { return quad(f, {0, 0, 1, 0, 0, 0, 0, 0, 0, 0}); }
Quadric unit_sphere(const PrimeField& f) { return quad(f, {1, 1, 1, 0, 0, 0, 0, 0, 0, -1}); }
Quadric saddle(const PrimeField& f) { return quad(f, {0, 0, 0, 1, 0, 0, 0, 0, -1, 0}); }  // xy - z

}  // namespace

TEST_CASE("quadric eval") {
    PrimeField f(5);
    CHECK(z_squared(f).eval(pt(f, 1, 1, 0)).is_zero());
    CHECK(unit_sphere(f).eval(pt(f, 1, 0, 0)).is_zero());
    // z - xy at (2,3,1): 1 - 6 = -5 = 0 (mod 5)
    CHECK(saddle(f).eval(pt(f, 2, 3, 1)).is_zero());
    CHECK_FALSE(saddle(f).eval(pt(f, 2, 3, 2)).is_zero());
}

TEST_CASE("quadric canonicalization and degenerate inputs") {
    PrimeField f(5);
    CHECK(quad(f, {0, 0, 2, 0, 0, 0, 0, 0, 0, 0}) == z_squared(f));
    std::array<Fe, 10> zeros = {f.zero(), f.zero(), f.zero(), f.zero(), f.zero(),
                                f.zero(), f.zero(), f.zero(), f.zero(), f.zero()};
    CHECK_THROWS_AS((void)Quadric(zeros), PreconditionError);
}

TEST_CASE("line_in_surface on quadrics") {
    PrimeField f(5);
    CHECK(line_in_surface(x_axis(f), z_squared(f)));
    CHECK_FALSE(line_in_surface(x_axis(f), unit_sphere(f)));
    // ruling line {x=1, z=y} of z = xy
    CHECK(line_in_surface(ln(f, 1, 0, 0, 0, 1, 1), saddle(f)));
}

TEST_CASE("line_in_surface agrees with full enumeration for small fields") {
    for (std::uint32_t pv : {5u, 7u}) {
        PrimeField f(pv);
        SplitMix64 rng(pv + 30);
        for (int trial = 0; trial < 60; ++trial) {
            Line3 l = random_line(f, rng);
            std::array<Fe, 10> c = {f.sample(rng), f.sample(rng), f.sample(rng), f.sample(rng),
                                    f.sample(rng), f.sample(rng), f.sample(rng), f.sample(rng),
                                    f.sample(rng), f.sample(rng)};
            bool all_zero = true;
            for (const Fe& v : c) all_zero = all_zero && v.is_zero();
            if (all_zero) continue;
            Quadric q(c);
            bool everywhere = true;
            for (const Point3& p : l.points()) everywhere = everywhere && q.eval(p).is_zero();
            REQUIRE(line_in_surface(l, q) == everywhere);
        }
    }
}

TEST_CASE("quadric_through_lines") {
    PrimeField f(101);
    SUBCASE("three coplanar lines give a quadric divisible by z") {
        Line3 diag = ln(f, 0, 0, 0, 1, 1, 0);
        Quadric q = quadric_through_lines(x_axis(f), y_axis(f), diag);
        CHECK(line_in_surface(x_axis(f), q));
        CHECK(line_in_surface(y_axis(f), q));
        CHECK(line_in_surface(diag, q));
        // all z-free coefficients vanish, and the canonical pick is z^2 itself
        CHECK(q == z_squared(f));
    }
    SUBCASE("a repeated line is still contained") {
        Quadric q = quadric_through_lines(x_axis(f), x_axis(f), x_axis(f));
        CHECK(line_in_surface(x_axis(f), q));
    }
    SUBCASE("three rulings of z = xy recover the saddle exactly") {
        Line3 r0 = ln(f, 0, 0, 0, 0, 1, 0);
        Line3 r1 = ln(f, 1, 0, 0, 0, 1, 1);
        Line3 r2 = ln(f, 2, 0, 0, 0, 1, 2);
        Quadric q = quadric_through_lines(r0, r1, r2);
        CHECK(q == saddle(f));
    }
    SUBCASE("random triples always produce a containing quadric") {
        SplitMix64 rng(31);
        for (int i = 0; i < 1000; ++i) {
            Line3 l1 = random_line(f, rng);
            Line3 l2 = random_line(f, rng);
            Line3 l3 = random_line(f, rng);
            Quadric q = quadric_through_lines(l1, l2, l3);
            REQUIRE(line_in_surface(l1, q));
            REQUIRE(line_in_surface(l2, q));
            REQUIRE(line_in_surface(l3, q));
        }
    }
}

TEST_CASE("lines_on_quadric") {
    PrimeField f(101);
    SUBCASE("both rulings of the saddle") {
        auto [L, M] = regulus_instance(4, 4, f, 77);
        std::vector<Line3> all = L;
        all.insert(all.end(), M.begin(), M.end());
        CHECK(lines_on_quadric(saddle(f), all).size() == 8);
    }
    SUBCASE("filtering") {
        std::vector<Line3> lines = {x_axis(f), z_axis(f)};
        std::vector<Line3> on = lines_on_quadric(z_squared(f), lines);
        REQUIRE(on.size() == 1);
        CHECK(on[0] == x_axis(f));
    }
    SUBCASE("empty input") { CHECK(lines_on_quadric(z_squared(f), {}).empty()); }
}

TEST_CASE("quadric_richness") {
    PrimeField f(101);
    SUBCASE("rulings of the saddle") {
        auto [L, M] = regulus_instance(3, 4, f, 5);
        auto profile = quadric_richness(L, M);
        bool has_full = false;
        for (auto [s, t] : profile) has_full = has_full || (s == 3 && t == 4);
        CHECK(has_full);
    }
    SUBCASE("empty M forces t = 0") {
        auto [L, M] = regulus_instance(4, 0, f, 6);
        for (auto [s, t] : quadric_richness(L, M)) {
            (void)s;
            CHECK(t == 0);
        }
    }
    SUBCASE("random lines in general position have no rich quadric") {
        SplitMix64 rng(32);
        std::vector<Line3> L, M;
        for (int i = 0; i < 4; ++i) L.push_back(random_line(f, rng));
        for (int i = 0; i < 4; ++i) M.push_back(random_line(f, rng));
        for (auto [s, t] : quadric_richness(L, M)) CHECK((s <= 2 || t <= 2));
    }
}

TEST_CASE("min_degree_surface") {
    PrimeField f(32003);
    SUBCASE("one line needs a plane") {
        Surface s = min_degree_surface({x_axis(f)});
        CHECK(s.degree() == 1);
        CHECK(line_in_surface(x_axis(f), s));
    }
    SUBCASE("two skew lines need degree 2") {
        std::vector<Line3> L = {x_axis(f), ln(f, 0, 0, 1, 0, 1, 0)};
        Surface s = min_degree_surface(L);
        CHECK(s.degree() == 2);
        CHECK(line_in_surface(L[0], s));
        CHECK(line_in_surface(L[1], s));
    }
    SUBCASE("degree bound and containment for random families") {
        SplitMix64 rng(33);
        for (std::size_t count : {1, 2, 5, 9, 14, 20}) {
            std::set<Line3> family;
            while (family.size() < count) family.insert(random_line(f, rng));
            std::vector<Line3> L(family.begin(), family.end());
            Surface s = min_degree_surface(L);
            CHECK(s.degree() <= int(std::ceil(std::sqrt(6.0 * double(count)))) + 1);
            for (const Line3& l : L) REQUIRE(line_in_surface(l, s));
        }
    }
    SUBCASE("tiny fields are rejected") {
        PrimeField f5(5);
        std::vector<Line3> L;
        auto [A, B] = regulus_instance(3, 2, f5, 1);
        L = A;
        L.insert(L.end(), B.begin(), B.end());
        CHECK_THROWS_AS(min_degree_surface(L), FieldTooSmallForDegree);
    }
    SUBCASE("duplicate lines are rejected") {
        CHECK_THROWS_AS(min_degree_surface({x_axis(f), x_axis(f)}), PreconditionError);
    }
}

TEST_CASE("surface monomial basis order") {
    // graded-lexicographic: degree blocks descending, (i,j,k) lex-descending
    std::vector<std::array<int, 3>> expected = {
        {2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 2, 0}, {0, 1, 1},
        {0, 0, 2}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, 0, 0}};
    CHECK(Surface::monomials(2) == expected);
    CHECK(Surface::basis_size(2) == 10);
    CHECK(Surface::basis_size(3) == 20);
}

TEST_CASE("surface constructor enforces the degree invariant") {
    PrimeField f(101);
    // a degree-2 coefficient vector whose quadratic block is zero
    std::vector<Fe> c(Surface::basis_size(2), f.zero());
    c[Surface::basis_size(2) - 1] = f.one();  // constant term only
    CHECK_THROWS_AS(Surface(2, c), PreconditionError);
    std::vector<Fe> zeros(Surface::basis_size(1), f.zero());
    CHECK_THROWS_AS(Surface(1, zeros), PreconditionError);
}

TEST_CASE("common quadric of a collinear configuration") {
    // m collinear points on a line inside n common planes: the quadric through
    // the first three phi images carries every phi and psi image.
    PrimeField f(101);
    SplitMix64 rng(34);
    Instance inst = rich_line_instance(4, 3, f, 99);  // 3 points, 3 planes
    GenericInstance g = genericize(inst.points(), inst.planes(), rng);
    std::vector<Line3> L, M;
    for (const Point3& p : g.points) L.push_back(phi(p));
    for (const Plane3& q : g.planes) M.push_back(psi(q));
    Quadric s = quadric_through_lines(L[0], L[1], L[2]);
    for (const Line3& l : L) CHECK(line_in_surface(l, s));
    for (const Line3& m : M) CHECK(line_in_surface(m, s));
}
