#include "veronese/edgewise.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "veronese/errors.hpp"
#include "veronese/int_polynomial.hpp"
#include "veronese/transform.hpp"

namespace veronese {

std::vector<int> phi(const std::vector<int>& a) {
  std::vector<int> out(a.size());
  long long run = 0;
  for (size_t m = 0; m < a.size(); ++m) {
    run += a[m];
    out[m] = static_cast<int>(run);
  }
  return out;
}

namespace {

using Mask = std::vector<uint64_t>;

void mask_set(Mask& m, size_t bit) { m[bit >> 6] |= uint64_t{1} << (bit & 63); }

Mask mask_or(const Mask& a, const Mask& b) {
  Mask out(a.size());
  for (size_t w = 0; w < a.size(); ++w) out[w] = a[w] | b[w];
  return out;
}

bool mask_subset(const Mask& sub, const Mask& sup) {
  for (size_t w = 0; w < sub.size(); ++w)
    if (sub[w] & ~sup[w]) return false;
  return true;
}

// phi(a - b) in {0,1}^n or phi(b - a) in {0,1}^n: all partial sums of a - b
// lie in {0,1} or all lie in {-1,0}.
bool compatible(const std::vector<int>& a, const std::vector<int>& b) {
  long long run = 0;
  bool seen_pos = false, seen_neg = false;
  for (size_t m = 0; m < a.size(); ++m) {
    run += a[m] - b[m];
    if (run > 1 || run < -1) return false;
    seen_pos |= run > 0;
    seen_neg |= run < 0;
    if (seen_pos && seen_neg) return false;
  }
  return true;
}

struct CliqueContext {
  const std::vector<std::vector<int>>* points;
  const std::vector<Mask>* supports;
  const std::vector<Mask>* facet_masks;
  long long budget;
  long long faces = 0;
  std::vector<std::vector<int>> facets;  // 0-based point indices

  bool is_base_face(const Mask& m) const {
    for (const Mask& fm : *facet_masks)
      if (mask_subset(m, fm)) return true;
    return false;
  }

  // face: ascending indices; ext: every p outside face with face + {p} a face.
  // A face is a facet exactly when ext is empty.
  void grow(std::vector<int>& face, const std::vector<int>& ext, const Mask& uni) {
    if (ext.empty()) {
      facets.push_back(face);
      return;
    }
    const int floor_id = face.empty() ? -1 : face.back();
    for (int c : ext) {
      if (c <= floor_id) continue;
      if (++faces > budget) throw BudgetExceeded("face budget exceeded");
      const Mask next_uni = mask_or(uni, (*supports)[static_cast<size_t>(c)]);
      std::vector<int> next_ext;
      next_ext.reserve(ext.size());
      for (int p : ext) {
        if (p == c) continue;
        if (!compatible((*points)[static_cast<size_t>(p)], (*points)[static_cast<size_t>(c)]))
          continue;
        if (!is_base_face(mask_or(next_uni, (*supports)[static_cast<size_t>(p)]))) continue;
        next_ext.push_back(p);
      }
      face.push_back(c);
      grow(face, next_ext, next_uni);
      face.pop_back();
    }
  }
};

}  // namespace

EdgewiseResult edgewise(const SimplicialComplex& base, long long r, long long budget) {
  if (r < 1) throw DomainError("subdivision parameter r must be >= 1");
  if (r > std::numeric_limits<int>::max()) throw DomainError("r out of supported range");
  if (budget < 1) throw DomainError("face budget must be >= 1");
  if (base.dim() < 0) return {SimplicialComplex::from_facets({}), {}};

  // Relabel vertices order-preserving to 1..n (position in `verts` + 1).
  std::vector<int> verts;
  for (size_t i = 0; i < base.facet_count(); ++i)
    for (int v : base.facet(i)) verts.push_back(v);
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  const size_t n = verts.size();
  const size_t words = (n + 63) / 64;
  auto position = [&](int label) {
    return static_cast<size_t>(
        std::lower_bound(verts.begin(), verts.end(), label) - verts.begin());
  };

  std::vector<Mask> facet_masks;
  std::vector<std::vector<size_t>> facet_positions;
  for (size_t i = 0; i < base.facet_count(); ++i) {
    Mask m(words, 0);
    std::vector<size_t> pos;
    for (int v : base.facet(i)) {
      pos.push_back(position(v));
      mask_set(m, pos.back());
    }
    facet_masks.push_back(std::move(m));
    facet_positions.push_back(std::move(pos));
  }

  // Vertex count of the subdivision: a face with i+1 base vertices carries
  // C(r-1, i) grid points supported exactly on it.
  const std::vector<Int> f = f_vector(base, budget);
  Int admissible = 0;
  for (size_t i = 0; i + 1 < f.size(); ++i)
    admissible += f[i + 1] * binomial(r - 1, static_cast<long long>(i));
  if (admissible > budget) throw BudgetExceeded("subdivision vertex count exceeds budget");

  // Grid points with support inside some facet; every one is admissible
  // since the base is closed under subsets.
  std::set<std::vector<int>> seen;
  std::vector<int> tuple(n, 0);
  for (const auto& pos : facet_positions) {
    auto rec = [&](auto&& self, size_t at, int remaining) -> void {
      if (at + 1 == pos.size()) {
        tuple[pos[at]] = remaining;
        seen.insert(tuple);
        tuple[pos[at]] = 0;
        return;
      }
      for (int take = 0; take <= remaining; ++take) {
        tuple[pos[at]] = take;
        self(self, at + 1, remaining - take);
      }
      tuple[pos[at]] = 0;
    };
    rec(rec, 0, static_cast<int>(r));
  }
  std::vector<std::vector<int>> points(seen.begin(), seen.end());

  std::vector<Mask> supports;
  supports.reserve(points.size());
  for (const auto& p : points) {
    Mask m(words, 0);
    for (size_t l = 0; l < n; ++l)
      if (p[l] > 0) mask_set(m, l);
    supports.push_back(std::move(m));
  }

  CliqueContext ctx;
  ctx.points = &points;
  ctx.supports = &supports;
  ctx.facet_masks = &facet_masks;
  ctx.budget = budget;
  std::vector<int> all_ids(points.size());
  for (size_t i = 0; i < points.size(); ++i) all_ids[i] = static_cast<int>(i);
  std::vector<int> face;
  ctx.grow(face, all_ids, Mask(words, 0));

  // Canonical facet order (size, then colex) with 1-based ids; the clique
  // DFS already yields distinct maximal sets, so the CSR is built directly.
  std::sort(ctx.facets.begin(), ctx.facets.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(),
                                                  b.rend());
            });
  std::vector<int> labels;
  std::vector<uint32_t> offsets{0};
  for (const auto& fc : ctx.facets) {
    for (int id : fc) labels.push_back(id + 1);
    offsets.push_back(static_cast<uint32_t>(labels.size()));
  }
  return {SimplicialComplex::from_canonical_facets(std::move(labels), std::move(offsets)),
          std::move(points)};
}

HilbertCheck check_edgewise_hilbert(const SimplicialComplex& base, long long r,
                                    long long budget) {
  if (base.dim() < 0)
    throw DomainError("Hilbert comparison needs a complex of dimension >= 0");
  const long long d = base.dim() + 1;
  const EdgewiseResult sub = edgewise(base, r, budget);
  const IntPolynomial h_sub = h_from_f(f_vector(sub.complex, budget), d);
  const IntPolynomial h_ver = trim(veronese_h(h_from_f(f_vector(base, budget), d), d, r));
  return {h_sub == h_ver, h_sub.coeffs(), h_ver.coeffs()};
}

}  // namespace veronese
