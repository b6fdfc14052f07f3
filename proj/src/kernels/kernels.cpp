#include "inclab/kernels.hpp"

namespace inclab::kernels {

namespace {

std::size_t plane_zero_count_scalar(const PointsView& pts, const PlaneEq& eq, std::uint32_t p) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < pts.n; ++i) {
        std::uint64_t t = std::uint64_t(eq.a) * pts.x[i] + std::uint64_t(eq.b) * pts.y[i] +
                          std::uint64_t(eq.c) * pts.z[i] + eq.d;
        if (t % p == 0) ++count;
    }
    return count;
}

std::size_t line_zero_count_scalar(const PointsView& pts, const LineEq& eq, std::uint32_t p) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < pts.n; ++i) {
        std::uint32_t wx = pts.x[i] >= eq.bx ? pts.x[i] - eq.bx : pts.x[i] + p - eq.bx;
        std::uint32_t wy = pts.y[i] >= eq.by ? pts.y[i] - eq.by : pts.y[i] + p - eq.by;
        std::uint32_t wz = pts.z[i] >= eq.bz ? pts.z[i] - eq.bz : pts.z[i] + p - eq.bz;
        // cross(w, dir) with each subtraction folded into + p - coefficient
        std::uint64_t c1 = std::uint64_t(wy) * eq.dz + std::uint64_t(wz) * (p - eq.dy);
        std::uint64_t c2 = std::uint64_t(wz) * eq.dx + std::uint64_t(wx) * (p - eq.dz);
        std::uint64_t c3 = std::uint64_t(wx) * eq.dy + std::uint64_t(wy) * (p - eq.dx);
        if (c1 % p == 0 && c2 % p == 0 && c3 % p == 0) ++count;
    }
    return count;
}

}  // namespace

#if defined(INCLAB_HAVE_AVX2_TU)
// Defined in kernels_avx2.cpp, compiled with -mavx2.
std::size_t plane_zero_count_avx2(const PointsView& pts, const PlaneEq& eq, std::uint32_t p);
std::size_t line_zero_count_avx2(const PointsView& pts, const LineEq& eq, std::uint32_t p);
#endif

std::vector<Impl> available_impls() {
    std::vector<Impl> impls;
    impls.push_back({"scalar", &plane_zero_count_scalar, &line_zero_count_scalar});
#if defined(INCLAB_HAVE_AVX2_TU)
    if (__builtin_cpu_supports("avx2"))
        impls.push_back({"avx2", &plane_zero_count_avx2, &line_zero_count_avx2});
#endif
    return impls;
}

namespace {

const Impl& dispatch() {
    // Last registered implementation wins; available_impls() orders them
    // scalar first, widest vector extension last.
    static const Impl selected = available_impls().back();
    return selected;
}

}  // namespace

std::size_t plane_zero_count(const PointsView& pts, const PlaneEq& eq, std::uint32_t p) {
    return dispatch().plane_zero_count(pts, eq, p);
}

std::size_t line_zero_count(const PointsView& pts, const LineEq& eq, std::uint32_t p) {
    return dispatch().line_zero_count(pts, eq, p);
}

const char* active_impl() { return dispatch().name; }

}  // namespace inclab::kernels
