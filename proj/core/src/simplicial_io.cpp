#include "veronese/simplicial_io.hpp"

#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "veronese/errors.hpp"

namespace veronese {

SimplicialComplex read_facets(std::istream& in) {
  std::vector<std::vector<int>> facets;
  std::string line;
  while (std::getline(in, line)) {
    const size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream tokens(line);
    std::vector<int> facet;
    std::string tok;
    while (tokens >> tok) {
      if (tok.size() > 10 || tok.find_first_not_of("0123456789") != std::string::npos)
        throw DomainError("facet file: labels must be base-10 integers >= 1");
      const long long v = std::stoll(tok);
      if (v < 1 || v > std::numeric_limits<int>::max())
        throw DomainError("facet file: label out of range");
      facet.push_back(static_cast<int>(v));
    }
    facets.push_back(std::move(facet));
  }
  return SimplicialComplex::from_facets(std::move(facets));
}

void write_facets(std::ostream& out, const SimplicialComplex& complex) {
  for (size_t i = 0; i < complex.facet_count(); ++i) {
    const auto f = complex.facet(i);
    if (f.empty()) continue;
    for (size_t j = 0; j < f.size(); ++j) {
      if (j) out << ' ';
      out << f[j];
    }
    out << '\n';
  }
}

}  // namespace veronese
