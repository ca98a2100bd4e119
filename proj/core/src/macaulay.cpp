#include "veronese/macaulay.hpp"

#include "veronese/errors.hpp"

namespace veronese {

std::vector<std::pair<Int, long long>> macaulay_representation(const Int& m,
                                                               long long k) {
  if (m < 0 || k < 1) throw DomainError("Macaulay representation requires m >= 0 and k >= 1");
  std::vector<std::pair<Int, long long>> rep;
  Int rest = m;
  for (long long j = k; j >= 1 && rest > 0; --j) {
    // Largest a with C(a,j) <= rest, by exponential bracketing + bisection;
    // greedy guarantees the a_j strictly decrease.
    Int lo = j;  // C(j,j) = 1 <= rest
    Int hi = lo + 1;
    while (binomial(hi, j) <= rest) {
      lo = hi;
      hi *= 2;
    }
    while (hi - lo > 1) {
      Int mid = (lo + hi) / 2;
      if (binomial(mid, j) <= rest)
        lo = mid;
      else
        hi = mid;
    }
    rest -= binomial(lo, j);
    rep.emplace_back(lo, j);
  }
  return rep;
}

Int kk_shadow_size(const Int& m, long long k) {
  if (m == 0) return 0;
  Int total = 0;
  for (const auto& [a, j] : macaulay_representation(m, k)) total += binomial(a, j - 1);
  return total;
}

Int macaulay_bound(const Int& v, long long i) {
  if (v == 0) return 0;
  Int total = 0;
  for (const auto& [a, j] : macaulay_representation(v, i)) total += binomial(a + 1, j + 1);
  return total;
}

bool is_m_sequence(const std::vector<Int>& v) {
  if (v.empty() || v[0] != 1) return false;
  for (const Int& x : v)
    if (x < 0) return false;
  for (size_t i = 1; i + 1 < v.size(); ++i) {
    if (v[i] == 0) {
      for (size_t j = i + 1; j < v.size(); ++j)
        if (v[j] != 0) return false;
      break;
    }
    if (v[i + 1] > macaulay_bound(v[i], static_cast<long long>(i))) return false;
  }
  return true;
}

}  // namespace veronese
