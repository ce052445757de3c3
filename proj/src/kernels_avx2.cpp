#include "rmlist/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)
#define RMLIST_HAVE_AVX2_TU 1
#include <immintrin.h>
#else
#define RMLIST_HAVE_AVX2_TU 0
#include <cstdlib>
#endif

namespace rmlist::kernels {

#if RMLIST_HAVE_AVX2_TU

bool avx2_available() { return __builtin_cpu_supports("avx2") != 0; }

namespace avx2 {

bool compiled() { return true; }

// Reduce v in [0, 2p) to [0, p).  If v < p the subtraction wraps around and
// the unsigned min keeps v.
static inline __m256i reduce_once(__m256i v, __m256i vp) {
    return _mm256_min_epu32(v, _mm256_sub_epi32(v, vp));
}

// High 32 bits of the 32x32 products, per lane.
static inline __m256i mulhi_epu32(__m256i v, __m256i m) {
    __m256i even = _mm256_srli_epi64(_mm256_mul_epu32(v, m), 32);
    __m256i odd = _mm256_mul_epu32(_mm256_srli_epi64(v, 32), m);
    return _mm256_blend_epi32(even, odd, 0xAA);
}

void add_mod(uint32_t* dst, const uint32_t* a, const uint32_t* b, size_t len, uint32_t p) {
    const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
    size_t i = 0;
    for (; i + 8 <= len; i += 8) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        __m256i v = reduce_once(_mm256_add_epi32(va, vb), vp);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), v);
    }
    if (i < len) scalar::add_mod(dst + i, a + i, b + i, len - i, p);
}

void sub_mod(uint32_t* dst, const uint32_t* a, const uint32_t* b, size_t len, uint32_t p) {
    const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
    size_t i = 0;
    for (; i + 8 <= len; i += 8) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        __m256i v = _mm256_add_epi32(va, _mm256_sub_epi32(vp, vb));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), reduce_once(v, vp));
    }
    if (i < len) scalar::sub_mod(dst + i, a + i, b + i, len - i, p);
}

// Barrett step: with M = floor(2^32 / p) and v < 2^32, the quotient estimate
// t = floor(v*M / 2^32) satisfies v - t*p < 3p, so two reductions settle it.
static inline __m256i barrett_mod(__m256i v, __m256i vm, __m256i vp) {
    __m256i t = mulhi_epu32(v, vm);
    __m256i r = _mm256_sub_epi32(v, _mm256_mullo_epi32(t, vp));
    r = reduce_once(r, vp);
    return reduce_once(r, vp);
}

void axpy_mod(uint32_t* y, const uint32_t* x, uint32_t c, size_t len, uint32_t p) {
    c %= p;
    if (c == 0) return;
    const uint32_t mbar = static_cast<uint32_t>((static_cast<uint64_t>(1) << 32) / p);
    const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
    const __m256i vm = _mm256_set1_epi32(static_cast<int>(mbar));
    const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
    size_t i = 0;
    for (; i + 8 <= len; i += 8) {
        __m256i vx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
        __m256i vy = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
        __m256i v = _mm256_add_epi32(vy, _mm256_mullo_epi32(vc, vx));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + i), barrett_mod(v, vm, vp));
    }
    if (i < len) scalar::axpy_mod(y + i, x + i, c, len - i, p);
}

void scale_mod(uint32_t* dst, const uint32_t* x, uint32_t c, size_t len, uint32_t p) {
    c %= p;
    const uint32_t mbar = static_cast<uint32_t>((static_cast<uint64_t>(1) << 32) / p);
    const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
    const __m256i vm = _mm256_set1_epi32(static_cast<int>(mbar));
    const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
    size_t i = 0;
    for (; i + 8 <= len; i += 8) {
        __m256i vx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
        __m256i v = _mm256_mullo_epi32(vc, vx);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), barrett_mod(v, vm, vp));
    }
    if (i < len) scalar::scale_mod(dst + i, x + i, c, len - i, p);
}

}  // namespace avx2

#else  // non-x86 build: scalar only

bool avx2_available() { return false; }

namespace avx2 {
bool compiled() { return false; }
void add_mod(uint32_t*, const uint32_t*, const uint32_t*, size_t, uint32_t) { std::abort(); }
void sub_mod(uint32_t*, const uint32_t*, const uint32_t*, size_t, uint32_t) { std::abort(); }
void axpy_mod(uint32_t*, const uint32_t*, uint32_t, size_t, uint32_t) { std::abort(); }
void scale_mod(uint32_t*, const uint32_t*, uint32_t, size_t, uint32_t) { std::abort(); }
}  // namespace avx2

#endif

}  // namespace rmlist::kernels
