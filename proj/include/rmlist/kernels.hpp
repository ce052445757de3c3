#pragma once

#include <cstddef>
#include <cstdint>

// Vectorized residue arithmetic on arrays of canonical residues in [0, p).
//
// Every routine exists twice: a scalar reference implementation (valid for any
// prime p < 2^31) and an AVX2 variant working in 32-bit lanes.  The AVX2 path
// requires p <= kSimdMaxModulus so that c*x + y fits an unsigned 32-bit lane.
// The dispatched wrappers pick the backend once per process (overridable with
// the RMLIST_KERNELS environment variable or force_backend(), used by the
// equivalence tests).

namespace rmlist::kernels {

// p*(p-1) + (p-1) must stay below 2^32.
inline constexpr uint32_t kSimdMaxModulus = 65535;

enum class Backend { Scalar, Avx2 };

Backend active_backend();
void force_backend(Backend b);
bool avx2_available();
const char* backend_name(Backend b);

// dst[i] = (a[i] + b[i]) mod p
void add_mod(uint32_t* dst, const uint32_t* a, const uint32_t* b, size_t len, uint32_t p);
// dst[i] = (a[i] - b[i]) mod p
void sub_mod(uint32_t* dst, const uint32_t* a, const uint32_t* b, size_t len, uint32_t p);
// y[i] = (y[i] + c * x[i]) mod p
void axpy_mod(uint32_t* y, const uint32_t* x, uint32_t c, size_t len, uint32_t p);
// dst[i] = (c * x[i]) mod p
void scale_mod(uint32_t* dst, const uint32_t* x, uint32_t c, size_t len, uint32_t p);

namespace scalar {
void add_mod(uint32_t* dst, const uint32_t* a, const uint32_t* b, size_t len, uint32_t p);
void sub_mod(uint32_t* dst, const uint32_t* a, const uint32_t* b, size_t len, uint32_t p);
void axpy_mod(uint32_t* y, const uint32_t* x, uint32_t c, size_t len, uint32_t p);
void scale_mod(uint32_t* dst, const uint32_t* x, uint32_t c, size_t len, uint32_t p);
}  // namespace scalar

namespace avx2 {
// True when this binary carries the AVX2 translation unit (x86 builds).
bool compiled();
// Callers must ensure avx2_available() and p <= kSimdMaxModulus.
void add_mod(uint32_t* dst, const uint32_t* a, const uint32_t* b, size_t len, uint32_t p);
void sub_mod(uint32_t* dst, const uint32_t* a, const uint32_t* b, size_t len, uint32_t p);
void axpy_mod(uint32_t* y, const uint32_t* x, uint32_t c, size_t len, uint32_t p);
void scale_mod(uint32_t* dst, const uint32_t* x, uint32_t c, size_t len, uint32_t p);
}  // namespace avx2

}  // namespace rmlist::kernels
