#include "veronese/series.hpp"

#include <algorithm>

#include "veronese/errors.hpp"

namespace veronese {

RationalSeries make_series(IntPolynomial numerator, long long pole_order) {
  if (pole_order < 1) throw DomainError("pole order must be >= 1");
  return RationalSeries{std::move(numerator), pole_order};
}

std::vector<Int> expand(const RationalSeries& series, long long N) {
  if (N < 0) throw DomainError("expansion length must be >= 0");
  const long long d = series.pole_order;
  const long long lambda = std::max<long long>(series.numerator.degree(), 0);
  std::vector<Int> a(static_cast<size_t>(N) + 1);
  for (long long n = 0; n <= N; ++n) {
    Int sum = 0;
    for (long long j = 0; j <= std::min(lambda, n); ++j)
      sum += series.numerator.coeff(j) * binomial(n - j + d - 1, d - 1);
    a[static_cast<size_t>(n)] = sum;
  }
  return a;
}

IntPolynomial refit_numerator(const std::vector<Int>& prefix, long long d,
                              long long lambda_bound) {
  if (d < 1) throw DomainError("pole order must be >= 1");
  if (lambda_bound < 0) throw DomainError("lambda bound must be >= 0");
  const long long len = static_cast<long long>(prefix.size());
  if (len < lambda_bound + d + 1)
    throw DomainError("prefix too short for the requested lambda bound");
  // h_i = sum_{k=0}^{min(i,d)} (-1)^k C(d,k) a_{i-k}; indices past the bound
  // must come out zero for the prefix to be an expansion at all.
  std::vector<Int> h;
  for (long long i = 0; i < len; ++i) {
    Int hi = 0;
    for (long long k = 0; k <= std::min(i, d); ++k) {
      Int term = binomial(d, k) * prefix[static_cast<size_t>(i - k)];
      if (k % 2 == 0)
        hi += term;
      else
        hi -= term;
    }
    if (i <= lambda_bound) {
      h.push_back(std::move(hi));
    } else if (hi != 0) {
      throw ConsistencyError("prefix is not the expansion of a series with the given pole order and degree bound");
    }
  }
  return IntPolynomial(std::move(h));
}

RationalSeries veronese_by_expansion(const RationalSeries& series, long long r,
                                     long long lambda_bound) {
  if (r < 1) throw DomainError("Veronese index must be >= 1");
  const long long d = series.pole_order;
  // Subsampled prefix long enough to pin degree lambda_bound and verify d more.
  const long long need = lambda_bound + d + 1;
  std::vector<Int> a = expand(series, r * (need - 1));
  std::vector<Int> sub(static_cast<size_t>(need));
  for (long long n = 0; n < need; ++n) sub[static_cast<size_t>(n)] = a[static_cast<size_t>(n * r)];
  IntPolynomial h = refit_numerator(sub, d, lambda_bound);
  return RationalSeries{std::move(h), d};
}

RationalSeries veronese_by_expansion(const RationalSeries& series, long long r) {
  const long long bound =
      std::max<long long>(series.numerator.degree(), series.pole_order);
  return veronese_by_expansion(series, r, bound);
}

Int characteristic(const RationalSeries& series) {
  const long long d = series.pole_order;
  if (series.numerator.degree() < d) return 0;
  // Divide h by (1-t)^d from the top: b1 has degree lambda - d and
  // h = b1 * (1-t)^d + b2 with deg b2 < d. Only b1(0) is needed, but the full
  // quotient is computed for clarity; sizes are desk scale.
  std::vector<Int> rem = series.numerator.coeffs();
  const long long lambda = series.numerator.degree();
  std::vector<Int> b1(static_cast<size_t>(lambda - d) + 1);
  // (1-t)^d has coefficients (-1)^k C(d,k); leading coefficient (-1)^d.
  std::vector<Int> div(static_cast<size_t>(d) + 1);
  for (long long k = 0; k <= d; ++k) {
    div[static_cast<size_t>(k)] = binomial(d, k);
    if (k % 2 == 1) div[static_cast<size_t>(k)] = -div[static_cast<size_t>(k)];
  }
  for (long long i = lambda - d; i >= 0; --i) {
    Int q = rem[static_cast<size_t>(i + d)] / div[static_cast<size_t>(d)];
    b1[static_cast<size_t>(i)] = q;
    for (long long k = 0; k <= d; ++k)
      rem[static_cast<size_t>(i + k)] -= q * div[static_cast<size_t>(k)];
  }
  return b1[0];
}

std::vector<Int> g_vector(const IntPolynomial& h, long long length_bound) {
  if (h.is_zero()) throw DomainError("g_vector requires a nonzero polynomial");
  if (length_bound < 0) throw DomainError("length bound must be >= 0");
  std::vector<Int> g(static_cast<size_t>(length_bound) + 1);
  g[0] = h.coeff(0);
  for (long long i = 1; i <= length_bound; ++i)
    g[static_cast<size_t>(i)] = h.coeff(i) - h.coeff(i - 1);
  return g;
}

std::vector<Int> g_vector(const IntPolynomial& h) {
  if (h.is_zero()) throw DomainError("g_vector requires a nonzero polynomial");
  return g_vector(h, h.degree() / 2);
}

}  // namespace veronese
