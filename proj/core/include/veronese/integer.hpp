#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace veronese {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// C(n,k) with the total convention: 0 when k < 0, n < 0 or k > n.
inline Int binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int result = 1;
  for (long long j = 1; j <= k; ++j) {
    result *= n - k + j;
    result /= j;  // exact: C(n-k+j, j) is an integer
  }
  return result;
}

// Same convention for a big-integer upper argument (Kruskal-Katona cascades).
inline Int binomial(const Int& n, long long k) {
  if (k < 0 || n < 0 || n < k) return 0;
  Int result = 1;
  for (long long j = 1; j <= k; ++j) {
    result *= n - k + j;
    result /= j;
  }
  return result;
}

}  // namespace veronese
