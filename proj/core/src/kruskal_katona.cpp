#include "veronese/kruskal_katona.hpp"

#include <limits>

#include "veronese/errors.hpp"
#include "veronese/macaulay.hpp"

namespace veronese {

namespace {

constexpr int kMaxLabel = std::numeric_limits<int>::max();

// Largest a >= j-1 with C(a, j) <= rest (exists since C(j-1, j) = 0).
Int largest_binomial_arg(const Int& rest, long long j) {
  Int lo = j - 1;
  Int step = 1;
  while (binomial(lo + step, j) <= rest) {
    lo += step;
    step <<= 1;
  }
  while (step > 1) {
    step >>= 1;
    if (binomial(lo + step, j) <= rest) lo += step;
  }
  return lo;
}

}  // namespace

Int colex_rank(const std::vector<int>& labels) {
  int prev = 0;
  for (int v : labels) {
    if (v <= prev) throw DomainError("labels must be strictly increasing and >= 1");
    prev = v;
  }
  Int rank = 1;
  for (size_t j = 1; j <= labels.size(); ++j)
    rank += binomial(labels[j - 1] - 1, static_cast<long long>(j));
  return rank;
}

std::vector<int> colex_unrank(const Int& rank, long long k) {
  if (rank < 1) throw DomainError("colex rank must be >= 1");
  if (k < 0) throw DomainError("subset size must be >= 0");
  if (k == 0) {
    if (rank != 1) throw DomainError("the empty set is the only 0-subset");
    return {};
  }
  Int rest = rank - 1;
  std::vector<int> out(static_cast<size_t>(k));
  for (long long j = k; j >= 1; --j) {
    const Int a = largest_binomial_arg(rest, j);
    rest -= binomial(a, j);
    if (a >= kMaxLabel) throw BudgetExceeded("vertex label exceeds supported range");
    out[static_cast<size_t>(j - 1)] = a.convert_to<int>() + 1;
  }
  return out;
}

void colex_successor(std::vector<int>& labels) {
  size_t idx = 0;
  while (idx + 1 < labels.size() && labels[idx] + 1 == labels[idx + 1]) ++idx;
  if (labels[idx] == kMaxLabel) throw BudgetExceeded("vertex label exceeds supported range");
  ++labels[idx];
  for (size_t i = 0; i < idx; ++i) labels[i] = static_cast<int>(i) + 1;
}

bool is_f_vector(const std::vector<Int>& v) {
  if (v.empty() || v[0] != 1) return false;
  for (const Int& x : v)
    if (x < 0) return false;
  for (size_t i = 0; i + 1 < v.size(); ++i) {
    if (v[i + 1] == 0) continue;  // zero after a zero is fine; after a positive
                                  // entry the shadow bound below rejects it
    if (kk_shadow_size(v[i + 1], static_cast<long long>(i) + 1) > v[i]) return false;
  }
  return true;
}

SimplicialComplex revlex_realize(const std::vector<Int>& v, long long budget) {
  if (budget < 1) throw DomainError("facet budget must be >= 1");
  if (!is_f_vector(v)) throw NotAnFVector("not the f-vector of a simplicial complex");
  size_t L = 0;
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i] > 0) L = i;
  if (L == 0) return SimplicialComplex::from_facets({});

  // The shadow of a colex-initial segment is itself colex-initial, so the
  // faces of size s covered from above are exactly the first
  // kk_shadow_size(v_{s+1}, s+1) ranks; the facets are the remaining ranks
  // up to v_s.
  std::vector<Int> cover(L + 1), count(L + 1);
  Int total_facets = 0, total_labels = 0;
  for (size_t s = 1; s <= L; ++s) {
    cover[s] = (s < L) ? kk_shadow_size(v[s + 1], static_cast<long long>(s) + 1) : 0;
    count[s] = v[s] - cover[s];
    total_facets += count[s];
    total_labels += count[s] * static_cast<long long>(s);
  }
  if (total_facets > budget) throw BudgetExceeded("facet count exceeds budget");
  if (total_labels > std::numeric_limits<uint32_t>::max() - 1)
    throw BudgetExceeded("facet storage exceeds supported range");

  std::vector<int> labels;
  std::vector<uint32_t> offsets{0};
  labels.reserve(total_labels.convert_to<size_t>());
  offsets.reserve(total_facets.convert_to<size_t>() + 1);
  for (size_t s = 1; s <= L; ++s) {
    if (count[s] == 0) continue;
    std::vector<int> cur = colex_unrank(cover[s] + 1, static_cast<long long>(s));
    const long long n = count[s].convert_to<long long>();
    for (long long t = 0; t < n; ++t) {
      if (t > 0) colex_successor(cur);
      labels.insert(labels.end(), cur.begin(), cur.end());
      offsets.push_back(static_cast<uint32_t>(labels.size()));
    }
  }
  return SimplicialComplex::from_canonical_facets(std::move(labels), std::move(offsets));
}

bool is_basic_admissible(const std::vector<Int>& alpha, const std::vector<Int>& f) {
  if (alpha.size() != f.size() || alpha.size() < 2 || alpha[0] != 0 || alpha[1] != 1 ||
      f[0] != 1)
    throw DomainError("expected alpha = (0,1,a_0,...,a_{d-1}) and f = (1,f_0,...,f_d)");
  const size_t d = alpha.size() - 2;
  std::vector<Int> w;
  w.reserve(d + 1);
  w.push_back(1);
  for (size_t i = 0; i < d; ++i) w.push_back(alpha[i + 2]);
  if (!is_f_vector(w)) return false;
  for (size_t i = 0; i < d; ++i)
    if (f[i + 1] < alpha[i + 2]) return false;
  return true;
}

}  // namespace veronese
