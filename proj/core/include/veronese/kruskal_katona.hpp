#pragma once

#include <vector>

#include "veronese/integer.hpp"
#include "veronese/simplicial.hpp"

namespace veronese {

// 1-based position of a k-set in the colexicographic order on k-subsets of
// {1, 2, ...}.  Labels must be strictly increasing and >= 1.
Int colex_rank(const std::vector<int>& labels);

// Inverse of colex_rank: the k-set at position `rank` (rank >= 1).
std::vector<int> colex_unrank(const Int& rank, long long k);

// Advance a nonempty strictly increasing set to its colex successor in place.
void colex_successor(std::vector<int>& labels);

// Kruskal-Katona test: v is the f-vector of a simplicial complex iff
// v_0 = 1, entries are nonnegative, and each colex-initial layer's shadow
// fits in the layer below.  Trailing zeros are allowed; a positive entry
// after a zero is rejected.
bool is_f_vector(const std::vector<Int>& v);

// The compressed complex realizing v: for every i the faces of cardinality i
// are the first v_i i-subsets in colex order.  Facets at size s are the ranks
// not covered by the shadow of the layer above, so the shadow is never
// materialized.  Throws NotAnFVector when is_f_vector(v) fails and
// BudgetExceeded when the facet count would exceed `budget`.
SimplicialComplex revlex_realize(const std::vector<Int>& v,
                                 long long budget = kDefaultFaceBudget);

// alpha = (0, 1, a_0, ..., a_{d-1}) is basic admissible for
// f = (1, f_0, ..., f_d) iff (1, a_0, ..., a_{d-1}) is an f-vector and
// f_i >= a_i for 0 <= i <= d-1.  Throws DomainError when the inputs do not
// have these shapes.
bool is_basic_admissible(const std::vector<Int>& alpha, const std::vector<Int>& f);

}  // namespace veronese
