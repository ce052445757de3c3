#include "rmlist/bigmath.hpp"

#include <vector>

namespace rmlist {

Big big_pow(uint64_t base, uint64_t exp) {
    Big r = 1;
    Big b = base;
    while (exp) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

Big ceil_div(const Big& a, const Big& b) { return (a + b - 1) / b; }

Big gaussian_binomial(uint32_t n, int64_t r, uint64_t q) {
    if (r < 0 || r > static_cast<int64_t>(n)) return 0;
    // row[k] = [i k]_q while sweeping i upward
    std::vector<Big> row(static_cast<size_t>(r) + 1, 0);
    row[0] = 1;
    for (uint32_t i = 1; i <= n; ++i) {
        for (size_t k = std::min<size_t>(i, static_cast<size_t>(r)); k >= 1; --k) {
            row[k] = row[k - 1] + big_pow(q, k) * row[k];
        }
    }
    return row[static_cast<size_t>(r)];
}

std::string big_to_string(const Big& v) { return v.str(); }

}  // namespace rmlist
