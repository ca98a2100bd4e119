#include "veronese/simplicial.hpp"

#include <algorithm>
#include <bit>

#include "veronese/errors.hpp"

namespace veronese {

SimplicialComplex SimplicialComplex::from_facets(std::vector<std::vector<int>> facets) {
  for (auto& f : facets) {
    for (int v : f)
      if (v < 0) throw DomainError("vertex labels must be >= 0");
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
  }
  // Canonical facet order: size ascending, colex within a size (compare the
  // sorted label tuples from the back).  Matches the order revlex_realize
  // produces, so realized complexes need no re-sort.
  auto by_size_colex = [](const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  };
  std::sort(facets.begin(), facets.end(), by_size_colex);
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  // Antichain reduction: drop any facet included in a later (larger) one.
  std::vector<std::vector<int>> kept;
  for (size_t i = 0; i < facets.size(); ++i) {
    bool dominated = false;
    for (size_t j = i + 1; j < facets.size() && !dominated; ++j)
      dominated = facets[j].size() > facets[i].size() &&
                  std::includes(facets[j].begin(), facets[j].end(),
                                facets[i].begin(), facets[i].end());
    if (!dominated) kept.push_back(std::move(facets[i]));
  }
  if (kept.empty()) kept.push_back({});  // the empty complex {emptyset}
  std::vector<int> labels;
  std::vector<uint32_t> offsets{0};
  for (const auto& f : kept) {
    labels.insert(labels.end(), f.begin(), f.end());
    offsets.push_back(static_cast<uint32_t>(labels.size()));
  }
  return from_canonical_facets(std::move(labels), std::move(offsets));
}

SimplicialComplex SimplicialComplex::from_canonical_facets(
    std::vector<int> labels, std::vector<uint32_t> offsets) {
  SimplicialComplex c;
  c.labels_ = std::move(labels);
  c.offsets_ = std::move(offsets);
  return c;
}

long long SimplicialComplex::dim() const {
  size_t best = 0;
  for (size_t i = 0; i + 1 < offsets_.size(); ++i)
    best = std::max<size_t>(best, offsets_[i + 1] - offsets_[i]);
  return static_cast<long long>(best) - 1;
}

int SimplicialComplex::max_label() const {
  int best = 0;
  for (int v : labels_) best = std::max(best, v);
  return best;
}

namespace {

class Bitmap {
 public:
  explicit Bitmap(size_t bits) : words_((bits + 63) / 64, 0) {}
  void set(size_t i) { words_[i >> 6] |= uint64_t{1} << (i & 63); }
  long long popcount() const {
    long long n = 0;
    for (uint64_t w : words_) n += std::popcount(w);
    return n;
  }

 private:
  std::vector<uint64_t> words_;
};

// Colex rank of the pair {a < b} over labels >= 0.
inline size_t pair_rank(int a, int b) {
  return static_cast<size_t>(b) * (static_cast<size_t>(b) - 1) / 2 +
         static_cast<size_t>(a);
}

// Dimension <= 2 with small labels on the >=2-faces: fused bitmap counting.
// All edges (facet edges and triangle shadows) are marked in a colex-rank
// bitmap, vertices in a plain bitmap, triangles counted directly (they are
// facets, distinct by the class invariant).
std::vector<Int> f_vector_bitmap(const SimplicialComplex& K, long long budget,
                                 int max_label) {
  Bitmap vertices(static_cast<size_t>(max_label) + 1);
  int b2 = 0;  // max label among faces of cardinality >= 2
  for (size_t i = 0; i < K.facet_count(); ++i) {
    const auto f = K.facet(i);
    if (f.size() >= 2) b2 = std::max(b2, f.back());
  }
  Bitmap edges(b2 >= 1 ? pair_rank(b2 - 1, b2) + 1 : 1);
  long long triangles = 0;
  for (size_t i = 0; i < K.facet_count(); ++i) {
    const auto f = K.facet(i);
    switch (f.size()) {
      case 3:
        ++triangles;
        edges.set(pair_rank(f[0], f[1]));
        edges.set(pair_rank(f[0], f[2]));
        edges.set(pair_rank(f[1], f[2]));
        vertices.set(static_cast<size_t>(f[0]));
        vertices.set(static_cast<size_t>(f[1]));
        vertices.set(static_cast<size_t>(f[2]));
        break;
      case 2:
        edges.set(pair_rank(f[0], f[1]));
        vertices.set(static_cast<size_t>(f[0]));
        vertices.set(static_cast<size_t>(f[1]));
        break;
      case 1:
        vertices.set(static_cast<size_t>(f[0]));
        break;
      default:
        break;
    }
  }
  const long long n1 = vertices.popcount();
  const long long n2 = edges.popcount();
  if (n1 + n2 + triangles > budget) throw BudgetExceeded("face budget exceeded");
  const long long D = K.dim() + 1;
  std::vector<Int> out{1, n1};
  if (D >= 2) out.push_back(n2);
  if (D >= 3) out.push_back(triangles);
  return out;
}

// General path: level-by-level closure with per-level dedup, faces packed
// into uint64 when labels and sizes allow, sorted vectors otherwise.
std::vector<Int> f_vector_generic(const SimplicialComplex& K, long long budget) {
  const long long D = K.dim() + 1;
  const int max_label = K.max_label();
  int bits = 0;
  if (D <= 4 && max_label < (1 << 16)) bits = 16;
  else if (D <= 5 && max_label < (1 << 12)) bits = 12;
  else if (D <= 6 && max_label < (1 << 10)) bits = 10;
  else if (D <= 8 && max_label < (1 << 8)) bits = 8;

  std::vector<std::vector<std::span<const int>>> facets_by_size(static_cast<size_t>(D) + 1);
  for (size_t i = 0; i < K.facet_count(); ++i)
    facets_by_size[K.facet(i).size()].push_back(K.facet(i));

  std::vector<Int> counts(static_cast<size_t>(D) + 1);
  long long total = 0;
  auto account = [&](long long n, long long s) {
    counts[static_cast<size_t>(s)] = n;
    total += n;
    if (total > budget) throw BudgetExceeded("face budget exceeded");
  };

  if (bits > 0) {
    std::vector<uint64_t> level;  // unique faces of the current cardinality
    for (long long s = D; s >= 1; --s) {
      std::vector<uint64_t> next;
      next.reserve(level.size() * static_cast<size_t>(s + 1) +
                   facets_by_size[static_cast<size_t>(s)].size());
      for (const auto f : facets_by_size[static_cast<size_t>(s)]) {
        uint64_t packed = 0;
        for (size_t i = 0; i < f.size(); ++i)
          packed |= static_cast<uint64_t>(f[i]) << (bits * i);
        next.push_back(packed);
      }
      // Shadows: drop each position from every (s+1)-face.
      for (uint64_t face : level) {
        for (long long drop = 0; drop <= s; ++drop) {
          const uint64_t low = face & ((uint64_t{1} << (bits * drop)) - 1);
          const int high_shift = bits * static_cast<int>(drop + 1);
          const uint64_t high = high_shift >= 64 ? 0 : face >> high_shift;
          next.push_back(low | (high << (bits * drop)));
        }
      }
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      account(static_cast<long long>(next.size()), s);
      level = std::move(next);
    }
  } else {
    std::vector<std::vector<int>> level;
    for (long long s = D; s >= 1; --s) {
      std::vector<std::vector<int>> next;
      for (const auto f : facets_by_size[static_cast<size_t>(s)])
        next.emplace_back(f.begin(), f.end());
      for (const auto& face : level) {
        for (size_t drop = 0; drop < face.size(); ++drop) {
          std::vector<int> sub;
          sub.reserve(face.size() - 1);
          for (size_t i = 0; i < face.size(); ++i)
            if (i != drop) sub.push_back(face[i]);
          next.push_back(std::move(sub));
        }
      }
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      account(static_cast<long long>(next.size()), s);
      level = std::move(next);
    }
  }
  std::vector<Int> out{1};
  for (long long s = 1; s <= D; ++s) out.push_back(counts[static_cast<size_t>(s)]);
  return out;
}

}  // namespace

std::vector<Int> f_vector(const SimplicialComplex& complex, long long budget) {
  if (budget < 1) throw DomainError("face budget must be >= 1");
  if (complex.dim() < 0) return {1};
  const int max_label = complex.max_label();
  int b2 = 0;
  for (size_t i = 0; i < complex.facet_count(); ++i) {
    const auto f = complex.facet(i);
    if (f.size() >= 2) b2 = std::max(b2, f.back());
  }
  if (complex.dim() <= 2 && b2 <= (1 << 14) && max_label <= (64 << 20))
    return f_vector_bitmap(complex, budget, max_label);
  return f_vector_generic(complex, budget);
}

std::vector<Int> h_from_f_raw(const std::vector<Int>& f, long long d) {
  if (d < 1 || static_cast<long long>(f.size()) != d + 1)
    throw DomainError("h_from_f requires an f-vector of length d + 1");
  std::vector<Int> h(static_cast<size_t>(d) + 1);
  for (long long j = 0; j <= d; ++j) {
    Int sum = 0;
    for (long long i = 0; i <= j; ++i) {
      Int term = binomial(d - i, j - i) * f[static_cast<size_t>(i)];
      if ((j - i) % 2 == 0)
        sum += term;
      else
        sum -= term;
    }
    h[static_cast<size_t>(j)] = sum;
  }
  return h;
}

IntPolynomial h_from_f(const std::vector<Int>& f, long long d) {
  return IntPolynomial(h_from_f_raw(f, d));
}

}  // namespace veronese
