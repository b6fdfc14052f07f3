#include "doctest.h"

#include <string>
#include <vector>

#include "inclab/kernels.hpp"
#include "inclab/rng.hpp"

using namespace inclab;
using kernels::LineEq;
using kernels::PlaneEq;
using kernels::PointsView;

namespace {

struct Arrays {
    std::vector<std::uint32_t> x, y, z;
    PointsView view() const { return {x.data(), y.data(), z.data(), x.size()}; }
};

Arrays random_arrays(std::size_t n, std::uint32_t p, SplitMix64& rng) {
    Arrays a;
    for (std::size_t i = 0; i < n; ++i) {
        a.x.push_back(std::uint32_t(rng.bounded(p)));
        a.y.push_back(std::uint32_t(rng.bounded(p)));
        a.z.push_back(std::uint32_t(rng.bounded(p)));
    }
    return a;
}

// Widest-arithmetic recount, independent of both kernel implementations.
std::size_t plane_oracle(const Arrays& a, const PlaneEq& eq, std::uint32_t p) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < a.x.size(); ++i) {
        unsigned __int128 t = (unsigned __int128)(eq.a) * a.x[i] +
                              (unsigned __int128)(eq.b) * a.y[i] +
                              (unsigned __int128)(eq.c) * a.z[i] + eq.d;
        if (t % p == 0) ++count;
    }
    return count;
}

std::size_t line_oracle(const Arrays& a, const LineEq& eq, std::uint32_t p) {
    auto sub = [&](std::uint32_t u, std::uint32_t v) {
        return (std::int64_t(u) - v % p + p) % p;
    };
    std::size_t count = 0;
    for (std::size_t i = 0; i < a.x.size(); ++i) {
        __int128 wx = sub(a.x[i], eq.bx), wy = sub(a.y[i], eq.by), wz = sub(a.z[i], eq.bz);
        __int128 c1 = (wy * eq.dz - wz * eq.dy) % p;
        __int128 c2 = (wz * eq.dx - wx * eq.dz) % p;
        __int128 c3 = (wx * eq.dy - wy * eq.dx) % p;
        if (c1 == 0 && c2 == 0 && c3 == 0) ++count;
    }
    return count;
}

}  // namespace

TEST_CASE("implementation registry") {
    std::vector<kernels::Impl> impls = kernels::available_impls();
    REQUIRE(!impls.empty());
    CHECK(std::string(impls.front().name) == "scalar");
    bool active_listed = false;
    for (const kernels::Impl& impl : impls)
        active_listed = active_listed || std::string(impl.name) == kernels::active_impl();
    CHECK(active_listed);
}

TEST_CASE("all implementations agree with the scalar reference") {
    for (std::uint32_t p : {5u, 101u, 1009u, 2147483629u, 2147483647u}) {
        SplitMix64 rng(p);
        std::vector<kernels::Impl> impls = kernels::available_impls();
        for (std::size_t n : {0, 1, 3, 4, 5, 17, 100, 257}) {
            Arrays a = random_arrays(n, p, rng);
            PlaneEq peq = {std::uint32_t(rng.bounded(p)), std::uint32_t(rng.bounded(p)),
                           std::uint32_t(rng.bounded(p)), std::uint32_t(rng.bounded(p))};
            LineEq leq = {std::uint32_t(rng.bounded(p)),     std::uint32_t(rng.bounded(p)),
                          std::uint32_t(rng.bounded(p)),     std::uint32_t(rng.bounded(p)),
                          std::uint32_t(rng.bounded(p)),     std::uint32_t(1 + rng.bounded(p - 1))};
            std::size_t plane_ref = impls.front().plane_zero_count(a.view(), peq, p);
            std::size_t line_ref = impls.front().line_zero_count(a.view(), leq, p);
            REQUIRE(plane_ref == plane_oracle(a, peq, p));
            REQUIRE(line_ref == line_oracle(a, leq, p));
            for (const kernels::Impl& impl : impls) {
                REQUIRE(impl.plane_zero_count(a.view(), peq, p) == plane_ref);
                REQUIRE(impl.line_zero_count(a.view(), leq, p) == line_ref);
            }
            REQUIRE(kernels::plane_zero_count(a.view(), peq, p) == plane_ref);
            REQUIRE(kernels::line_zero_count(a.view(), leq, p) == line_ref);
        }
    }
}

TEST_CASE("extreme operand values near the modulus") {
    for (std::uint32_t p : {2147483629u, 2147483647u}) {
        std::uint32_t m = p - 1;
        Arrays a;
        for (int i = 0; i < 9; ++i) {
            a.x.push_back(m);
            a.y.push_back(m);
            a.z.push_back(m);
        }
        PlaneEq peq = {m, m, m, m};
        LineEq leq = {m, m, m, m, m, 1};
        for (const kernels::Impl& impl : kernels::available_impls()) {
            CHECK(impl.plane_zero_count(a.view(), peq, p) == plane_oracle(a, peq, p));
            CHECK(impl.line_zero_count(a.view(), leq, p) == line_oracle(a, leq, p));
        }
    }
}

TEST_CASE("line kernel counts exactly the points on the line") {
    std::uint32_t p = 101;
    // line {(t, 7, 3t+5)}: points have y = 7, z = 3x + 5
    LineEq eq = {0, 7, 5, 1, 0, 3};
    Arrays a;
    int expected = 0;
    for (std::uint32_t t = 0; t < p; t += 2) {
        a.x.push_back(t);
        a.y.push_back(7);
        a.z.push_back((3 * t + 5) % p);
        ++expected;
    }
    a.x.push_back(1);
    a.y.push_back(8);
    a.z.push_back(8);  // off the line
    for (const kernels::Impl& impl : kernels::available_impls())
        CHECK(impl.line_zero_count(a.view(), eq, p) == std::size_t(expected));
}
