#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace inclab::kernels {

/// Structure-of-arrays view of point coordinates, each value fully reduced
/// into [0, p) for an odd prime p < 2^31.
struct PointsView {
    const std::uint32_t* x;
    const std::uint32_t* y;
    const std::uint32_t* z;
    std::size_t n;
};

/// Coefficients of a*x + b*y + c*z + d, reduced mod p.
struct PlaneEq {
    std::uint32_t a, b, c, d;
};

/// Base point and direction of a line, reduced mod p.
struct LineEq {
    std::uint32_t bx, by, bz;
    std::uint32_t dx, dy, dz;
};

/// Number of points with a*x + b*y + c*z + d == 0 (mod p).
std::size_t plane_zero_count(const PointsView& pts, const PlaneEq& eq, std::uint32_t p);

/// Number of points on the line, i.e. with cross(point - base, dir) == 0 (mod p).
std::size_t line_zero_count(const PointsView& pts, const LineEq& eq, std::uint32_t p);

/// Name of the implementation the runtime dispatcher selected ("avx2" or "scalar").
const char* active_impl();

using PlaneZeroCountFn = std::size_t (*)(const PointsView&, const PlaneEq&, std::uint32_t);
using LineZeroCountFn = std::size_t (*)(const PointsView&, const LineEq&, std::uint32_t);

struct Impl {
    const char* name;
    PlaneZeroCountFn plane_zero_count;
    LineZeroCountFn line_zero_count;
};

/// Every implementation usable on this machine, scalar first. The scalar
/// entries are the reference the vector variants are equivalence-tested
/// against.
std::vector<Impl> available_impls();

}  // namespace inclab::kernels
