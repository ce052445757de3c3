#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

namespace rmlist {

using Big = boost::multiprecision::cpp_int;

Big big_pow(uint64_t base, uint64_t exp);

/// ceil(a / b) for positive b.
Big ceil_div(const Big& a, const Big& b);

/// Gaussian binomial [n r]_q: number of r-dimensional subspaces of an
/// n-dimensional GF(q)-space, computed by the q-analog Pascal recurrence
/// [n r] = [n-1 r-1] + q^r [n-1 r].  Out-of-range r yields 0.
Big gaussian_binomial(uint32_t n, int64_t r, uint64_t q);

std::string big_to_string(const Big& v);

}  // namespace rmlist
