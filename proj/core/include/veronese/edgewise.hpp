#pragma once

#include <vector>

#include "veronese/integer.hpp"
#include "veronese/simplicial.hpp"

namespace veronese {

// phi(a)_m = a_1 + ... + a_m.  Linear, so it applies to differences of grid
// points, whose entries may be negative.
std::vector<int> phi(const std::vector<int>& a);

struct EdgewiseResult {
  SimplicialComplex complex;             // vertex ids 1..points.size()
  std::vector<std::vector<int>> points;  // points[id-1], lex-ascending
};

// r-fold edgewise subdivision.  Base vertices are relabeled order-preserving
// to 1..n.  Vertices of the subdivision are the grid points a in Z_{>=0}^n
// with sum r and supp(a) a base face; F is a face iff the union of the
// supports is a base face and every pair a, a~ in F has phi(a - a~) in
// {0,1}^n or phi(a~ - a) in {0,1}^n.  Faces are enumerated as cliques of the
// pairwise relation, maximal ones become facets.  Throws BudgetExceeded when
// the vertex or face count of the subdivision would exceed `budget`.
EdgewiseResult edgewise(const SimplicialComplex& base, long long r,
                        long long budget = kDefaultFaceBudget);

struct HilbertCheck {
  bool pass;
  std::vector<Int> h_subdivision;  // trimmed h-vector of the subdivision
  std::vector<Int> h_veronese;     // trimmed r-th Veronese of the base h-vector
};

// The subdivision and the r-th Veronese of the base have the same Hilbert
// series, hence equal trimmed h-vectors (d = dim + 1).  Throws DomainError
// for the empty complex, where no dimension is available.
HilbertCheck check_edgewise_hilbert(const SimplicialComplex& base, long long r,
                                    long long budget = kDefaultFaceBudget);

}  // namespace veronese
