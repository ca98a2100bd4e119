#pragma once

#include <vector>

#include "veronese/int_polynomial.hpp"
#include "veronese/integer.hpp"

namespace veronese {

// a(t) = numerator(t) / (1-t)^pole_order with pole_order >= 1.
struct RationalSeries {
  IntPolynomial numerator;
  long long pole_order = 1;
};

// Validates d >= 1.
RationalSeries make_series(IntPolynomial numerator, long long pole_order);

// a_0 .. a_N via a_n = sum_j h_j * C(n-j+d-1, d-1).
std::vector<Int> expand(const RationalSeries& series, long long N);

// Unique numerator of degree <= lambda_bound with the given expansion prefix;
// indices lambda_bound+1 .. prefix.size()-1 are verified to refit to zero.
// Requires prefix.size() >= lambda_bound + d + 1. Throws ConsistencyError.
IntPolynomial refit_numerator(const std::vector<Int>& prefix, long long d,
                              long long lambda_bound);

// Brute-force Veronese: expand far enough, keep every r-th coefficient, refit.
RationalSeries veronese_by_expansion(const RationalSeries& series, long long r,
                                     long long lambda_bound);
// Convenience overload with lambda_bound = max(deg numerator, d).
RationalSeries veronese_by_expansion(const RationalSeries& series, long long r);

// chi(a): constant term of b1 in a = b1 + b2/(1-t)^d with deg b2 < d.
Int characteristic(const RationalSeries& series);

// (g_0,...,g_L), g_0 = h_0, g_i = h_i - h_{i-1}, default L = floor(deg h / 2).
std::vector<Int> g_vector(const IntPolynomial& h);
std::vector<Int> g_vector(const IntPolynomial& h, long long length_bound);

}  // namespace veronese
