#pragma once

#include <vector>

#include "veronese/integer.hpp"

namespace veronese {

// k-th Macaulay (cascade) representation of m >= 0:
// m = C(a_k,k) + C(a_{k-1},k-1) + ... + C(a_t,t) with a_k > a_{k-1} > ... >= t >= 1.
// Returned as (a_j, j) pairs, highest j first; empty for m = 0.
std::vector<std::pair<Int, long long>> macaulay_representation(const Int& m,
                                                               long long k);

// Size of the shadow of the first m k-sets in colex order: sum C(a_j, j-1).
Int kk_shadow_size(const Int& m, long long k);

// Macaulay upper bound v^{<i>} = sum C(a_j + 1, j + 1) for the next entry of
// an M-sequence after value v in position i >= 1.
Int macaulay_bound(const Int& v, long long i);

// v_0 = 1, entries nonnegative, zeros propagate, v_{i+1} <= v_i^{<i>}.
bool is_m_sequence(const std::vector<Int>& v);

}  // namespace veronese
