#pragma once

#include <iosfwd>

#include "veronese/simplicial.hpp"

namespace veronese {

// One facet per line: whitespace-separated base-10 labels >= 1.  Blank lines
// and lines whose first nonblank character is '#' are ignored.  An input with
// no facet lines yields the complex {emptyset}.
SimplicialComplex read_facets(std::istream& in);

// One facet per line in canonical order; {emptyset} prints nothing.
void write_facets(std::ostream& out, const SimplicialComplex& complex);

}  // namespace veronese
