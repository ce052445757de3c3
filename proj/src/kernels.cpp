#include "rmlist/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace rmlist::kernels {

namespace scalar {

void add_mod(uint32_t* dst, const uint32_t* a, const uint32_t* b, size_t len, uint32_t p) {
    for (size_t i = 0; i < len; ++i) {
        uint32_t v = a[i] + b[i];
        dst[i] = v >= p ? v - p : v;
    }
}

void sub_mod(uint32_t* dst, const uint32_t* a, const uint32_t* b, size_t len, uint32_t p) {
    for (size_t i = 0; i < len; ++i) {
        uint32_t v = a[i] + p - b[i];
        dst[i] = v >= p ? v - p : v;
    }
}

void axpy_mod(uint32_t* y, const uint32_t* x, uint32_t c, size_t len, uint32_t p) {
    for (size_t i = 0; i < len; ++i) {
        y[i] = static_cast<uint32_t>((y[i] + static_cast<uint64_t>(c) * x[i]) % p);
    }
}

void scale_mod(uint32_t* dst, const uint32_t* x, uint32_t c, size_t len, uint32_t p) {
    for (size_t i = 0; i < len; ++i) {
        dst[i] = static_cast<uint32_t>((static_cast<uint64_t>(c) * x[i]) % p);
    }
}

}  // namespace scalar

namespace {

Backend detect() {
    if (const char* env = std::getenv("RMLIST_KERNELS")) {
        if (std::strcmp(env, "scalar") == 0) return Backend::Scalar;
        if (std::strcmp(env, "avx2") == 0 && avx2_available()) return Backend::Avx2;
    }
    return avx2_available() ? Backend::Avx2 : Backend::Scalar;
}

Backend& backend_slot() {
    static Backend b = detect();
    return b;
}

}  // namespace

Backend active_backend() { return backend_slot(); }

void force_backend(Backend b) {
    if (b == Backend::Avx2 && !avx2_available()) return;
    backend_slot() = b;
}

const char* backend_name(Backend b) { return b == Backend::Avx2 ? "avx2" : "scalar"; }

// Short rows gain nothing from the vector path.
static inline bool use_avx2(size_t len, uint32_t p) {
    return backend_slot() == Backend::Avx2 && p <= kSimdMaxModulus && len >= 8;
}

void add_mod(uint32_t* dst, const uint32_t* a, const uint32_t* b, size_t len, uint32_t p) {
    if (use_avx2(len, p)) {
        avx2::add_mod(dst, a, b, len, p);
    } else {
        scalar::add_mod(dst, a, b, len, p);
    }
}

void sub_mod(uint32_t* dst, const uint32_t* a, const uint32_t* b, size_t len, uint32_t p) {
    if (use_avx2(len, p)) {
        avx2::sub_mod(dst, a, b, len, p);
    } else {
        scalar::sub_mod(dst, a, b, len, p);
    }
}

void axpy_mod(uint32_t* y, const uint32_t* x, uint32_t c, size_t len, uint32_t p) {
    if (use_avx2(len, p)) {
        avx2::axpy_mod(y, x, c, len, p);
    } else {
        scalar::axpy_mod(y, x, c, len, p);
    }
}

void scale_mod(uint32_t* dst, const uint32_t* x, uint32_t c, size_t len, uint32_t p) {
    if (use_avx2(len, p)) {
        avx2::scale_mod(dst, x, c, len, p);
    } else {
        scalar::scale_mod(dst, x, c, len, p);
    }
}

}  // namespace rmlist::kernels
