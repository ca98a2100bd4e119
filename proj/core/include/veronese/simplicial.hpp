#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "veronese/int_polynomial.hpp"
#include "veronese/integer.hpp"

namespace veronese {

inline constexpr long long kDefaultFaceBudget = 10'000'000;

// Finite simplicial complex given by its facets over integer labels >= 0.
// Facets are stored flat (CSR): labels ascending within a facet, facets
// deduplicated, antichain-reduced and ordered by (size, colexicographic).
// The empty complex {emptyset} is a single empty facet.
class SimplicialComplex {
 public:
  // Normalizes arbitrary input: sorts and dedupes labels, drops duplicate and
  // dominated facets. An empty list yields the empty complex.
  static SimplicialComplex from_facets(std::vector<std::vector<int>> facets);

  // Trusted path for construction-proven antichains in canonical order;
  // skips the quadratic dominance sweep.
  static SimplicialComplex from_canonical_facets(std::vector<int> labels,
                                                 std::vector<uint32_t> offsets);

  size_t facet_count() const { return offsets_.size() - 1; }
  std::span<const int> facet(size_t i) const {
    return {labels_.data() + offsets_[i], labels_.data() + offsets_[i + 1]};
  }

  // Max facet cardinality minus one; -1 for the empty complex.
  long long dim() const;
  int max_label() const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  SimplicialComplex() : offsets_{0} {}
  std::vector<int> labels_;
  std::vector<uint32_t> offsets_;
};

// (f_{-1}, f_0, ..., f_{dim}) by explicit downward closure with deduplication.
// Throws BudgetExceeded when the total face count passes the budget.
std::vector<Int> f_vector(const SimplicialComplex& complex,
                          long long budget = kDefaultFaceBudget);

// f-to-h: h_j = sum_i (-1)^{j-i} C(d-i, j-i) f_{i-1}, raw length d+1.
// Requires f.size() == d + 1.
std::vector<Int> h_from_f_raw(const std::vector<Int>& f, long long d);
// Trimmed variant.
IntPolynomial h_from_f(const std::vector<Int>& f, long long d);

}  // namespace veronese
