#pragma once

#include <optional>
#include <string>
#include <vector>

#include "veronese/int_polynomial.hpp"
#include "veronese/integer.hpp"

namespace veronese {

// C(r,d,i): bounded compositions of i into d parts in [0,r]; C(r,0,i) = [i==0].
// Closed form: sum_k (-1)^k C(d,k) C(i - k(r+1) + d - 1, d - 1).
Int c_count(long long r, long long d, long long i);

// (d+1) x r matrix, entry(i,j) = C(r-1,d,ir-j). Requires r >= d >= 1.
struct CMatrix {
  long long r = 0;
  long long d = 0;
  std::vector<std::vector<Int>> rows;
};
CMatrix c_matrix(long long r, long long d);

// Column vectors with the all-zero convention for k >= r.
std::vector<Int> column(long long r, long long d, long long k);  // d+1 entries
std::vector<Int> ghat(long long r, long long d, long long k);    // floor(d/2)+2
std::vector<Int> g(long long r, long long d, long long k);       // floor(d/2)+1

// Formula-evaluated ghat for any k >= 0, ignoring the k >= r convention.
// The last-entry pairings need the raw value at index d when d = r.
std::vector<Int> ghat_raw(long long r, long long d, long long k);

// h-vector transform: entry i = sum_{j<=lambda} C(r-1,d,ir-j) h_j for
// 0 <= i <= m, m = max(lambda, d); raw full-length output, untrimmed.
std::vector<Int> veronese_h(const IntPolynomial& h, long long d, long long r);

// g-vector transform sum_k h_k g^{r,d}_k; requires r >= max(deg h, d), where
// the column zero convention agrees with the raw transform.
std::vector<Int> veronese_g(const IntPolynomial& h, long long d, long long r);

// Trailing-zero trim of a raw transform output.
IntPolynomial trim(const std::vector<Int>& raw);

struct CheckReport {
  std::string name;
  bool pass = true;
  std::vector<std::string> violations;
};

// Basic symmetry C(r,d,i) = C(r,d,dr-i) over 0 <= i <= dr, plus the extended
// matrix identity C(r-1,d,ir-j) = C(r-1,d,(d+1-i)r-(r-(j-d))) for j >= d+1.
CheckReport check_symmetry(long long r, long long d);

// Recursion C(r,d,i) = sum_{m=0}^r C(r,d-1,i-m) over 0 <= i <= dr, plus the
// column-sum identity sum_i C(r-1,d,ir-k) = r^{d-1} for 0 <= k <= r-1.
CheckReport check_recursion(long long r, long long d);

// Sign classification of last(g)/last(ghat) and the last-entry pairings.
// Requires 1 <= d <= r.
CheckReport check_sign_pattern(long long r, long long d);

// Componentwise growth in r and the chain g^{1,d}_k <= g^{d,d}_k <= ... .
// Requires 1 <= d <= r.
CheckReport check_growth(long long r, long long d);

// Smallest R <= max_r with all trimmed veronese_h coefficients positive for
// every R <= r <= max_r; nullopt if no such R.
std::optional<long long> find_positivity_threshold(const IntPolynomial& h,
                                                   long long d, long long max_r);

}  // namespace veronese
