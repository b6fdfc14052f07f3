// AVX2 variants of the counting kernels. Compiled with -mavx2 and selected at
// runtime by the dispatcher in kernels.cpp; numeric contract is identical to
// the scalar reference implementations.

#include <immintrin.h>

#include "inclab/kernels.hpp"

namespace inclab::kernels {

namespace {

// p^-1 mod 2^64 for odd p, by Newton iteration.
std::uint64_t inv_mod_pow64(std::uint64_t p) {
    std::uint64_t x = p;  // correct to 3 bits
    for (int i = 0; i < 5; ++i) x *= 2 - p * x;
    return x;
}

inline __m256i load4_u32(const std::uint32_t* src) {
    return _mm256_cvtepu32_epi64(_mm_loadu_si128(reinterpret_cast<const __m128i*>(src)));
}

// Low 64 bits of the lane-wise 64x64 product.
inline __m256i mullo64(__m256i a, __m256i b) {
    __m256i lo = _mm256_mul_epu32(a, b);
    __m256i hi = _mm256_add_epi64(_mm256_mul_epu32(_mm256_srli_epi64(a, 32), b),
                                  _mm256_mul_epu32(a, _mm256_srli_epi64(b, 32)));
    return _mm256_add_epi64(lo, _mm256_slli_epi64(hi, 32));
}

const __m256i kBias = _mm256_set1_epi64x(std::int64_t(0x8000000000000000ULL));

// All-ones lanes where t == 0 (mod p). Divisibility test of Granlund and
// Montgomery: t is a multiple of odd p iff t * p^-1 (mod 2^64) <= (2^64-1)/p.
inline __m256i divisible_mask(__m256i t, __m256i pinv, __m256i qmax_biased) {
    __m256i q = mullo64(t, pinv);
    __m256i gt = _mm256_cmpgt_epi64(_mm256_xor_si256(q, kBias), qmax_biased);
    return _mm256_andnot_si256(gt, _mm256_set1_epi64x(-1));
}

inline std::size_t hsum_epi64(__m256i v) {
    alignas(32) std::uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), v);
    return std::size_t(lanes[0] + lanes[1] + lanes[2] + lanes[3]);
}

}  // namespace

std::size_t plane_zero_count_avx2(const PointsView& pts, const PlaneEq& eq, std::uint32_t p) {
    const __m256i av = _mm256_set1_epi64x(eq.a);
    const __m256i bv = _mm256_set1_epi64x(eq.b);
    const __m256i cv = _mm256_set1_epi64x(eq.c);
    const __m256i dv = _mm256_set1_epi64x(eq.d);
    const __m256i pinv = _mm256_set1_epi64x(std::int64_t(inv_mod_pow64(p)));
    const __m256i qmax_biased =
        _mm256_xor_si256(_mm256_set1_epi64x(std::int64_t(~0ULL / p)), kBias);

    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= pts.n; i += 4) {
        __m256i xv = load4_u32(pts.x + i);
        __m256i yv = load4_u32(pts.y + i);
        __m256i zv = load4_u32(pts.z + i);
        // a*x + b*y + c*z + d < 3*(2^31-1)^2 + 2^31 < 2^64: no lane overflow
        __m256i t = _mm256_add_epi64(
            _mm256_add_epi64(_mm256_mul_epu32(av, xv), _mm256_mul_epu32(bv, yv)),
            _mm256_add_epi64(_mm256_mul_epu32(cv, zv), dv));
        acc = _mm256_sub_epi64(acc, divisible_mask(t, pinv, qmax_biased));
    }
    std::size_t count = hsum_epi64(acc);
    for (; i < pts.n; ++i) {
        std::uint64_t t = std::uint64_t(eq.a) * pts.x[i] + std::uint64_t(eq.b) * pts.y[i] +
                          std::uint64_t(eq.c) * pts.z[i] + eq.d;
        if (t % p == 0) ++count;
    }
    return count;
}

std::size_t line_zero_count_avx2(const PointsView& pts, const LineEq& eq, std::uint32_t p) {
    const __m256i pv = _mm256_set1_epi64x(p);
    const __m256i bxv = _mm256_set1_epi64x(eq.bx);
    const __m256i byv = _mm256_set1_epi64x(eq.by);
    const __m256i bzv = _mm256_set1_epi64x(eq.bz);
    const __m256i dxv = _mm256_set1_epi64x(eq.dx);
    const __m256i dyv = _mm256_set1_epi64x(eq.dy);
    const __m256i dzv = _mm256_set1_epi64x(eq.dz);
    // p - d* stands in for the subtraction in the cross product
    const __m256i pmdx = _mm256_set1_epi64x(p - eq.dx);
    const __m256i pmdy = _mm256_set1_epi64x(p - eq.dy);
    const __m256i pmdz = _mm256_set1_epi64x(p - eq.dz);
    const __m256i pinv = _mm256_set1_epi64x(std::int64_t(inv_mod_pow64(p)));
    const __m256i qmax_biased =
        _mm256_xor_si256(_mm256_set1_epi64x(std::int64_t(~0ULL / p)), kBias);

    auto reduce_sub = [&](__m256i v, __m256i b) {
        // v - b mod p for canonical operands; signed compare is safe below 2^31
        __m256i need = _mm256_cmpgt_epi64(b, v);
        return _mm256_add_epi64(_mm256_sub_epi64(v, b), _mm256_and_si256(need, pv));
    };

    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= pts.n; i += 4) {
        __m256i wx = reduce_sub(load4_u32(pts.x + i), bxv);
        __m256i wy = reduce_sub(load4_u32(pts.y + i), byv);
        __m256i wz = reduce_sub(load4_u32(pts.z + i), bzv);
        __m256i c1 = _mm256_add_epi64(_mm256_mul_epu32(wy, dzv), _mm256_mul_epu32(wz, pmdy));
        __m256i c2 = _mm256_add_epi64(_mm256_mul_epu32(wz, dxv), _mm256_mul_epu32(wx, pmdz));
        __m256i c3 = _mm256_add_epi64(_mm256_mul_epu32(wx, dyv), _mm256_mul_epu32(wy, pmdx));
        __m256i on = _mm256_and_si256(divisible_mask(c1, pinv, qmax_biased),
                                      _mm256_and_si256(divisible_mask(c2, pinv, qmax_biased),
                                                       divisible_mask(c3, pinv, qmax_biased)));
        acc = _mm256_sub_epi64(acc, on);
    }
    std::size_t count = hsum_epi64(acc);
    for (; i < pts.n; ++i) {
        std::uint32_t wx = pts.x[i] >= eq.bx ? pts.x[i] - eq.bx : pts.x[i] + p - eq.bx;
        std::uint32_t wy = pts.y[i] >= eq.by ? pts.y[i] - eq.by : pts.y[i] + p - eq.by;
        std::uint32_t wz = pts.z[i] >= eq.bz ? pts.z[i] - eq.bz : pts.z[i] + p - eq.bz;
        std::uint64_t c1 = std::uint64_t(wy) * eq.dz + std::uint64_t(wz) * (p - eq.dy);
        std::uint64_t c2 = std::uint64_t(wz) * eq.dx + std::uint64_t(wx) * (p - eq.dz);
        std::uint64_t c3 = std::uint64_t(wx) * eq.dy + std::uint64_t(wy) * (p - eq.dx);
        if (c1 % p == 0 && c2 % p == 0 && c3 % p == 0) ++count;
    }
    return count;
}

}  // namespace inclab::kernels
