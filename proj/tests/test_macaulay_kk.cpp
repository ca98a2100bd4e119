#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <utility>
#include <vector>

#include "doctest.h"
#include "support/oracles.hpp"
#include "veronese/errors.hpp"
#include "veronese/kruskal_katona.hpp"
#include "veronese/macaulay.hpp"
#include "veronese/simplicial.hpp"

using veronese::Int;
using veronese::SimplicialComplex;

using V = std::vector<Int>;

TEST_CASE("macaulay representation goldens") {
  using P = std::vector<std::pair<Int, long long>>;
  CHECK(veronese::macaulay_representation(10, 3) == P{{5, 3}});
  CHECK(veronese::macaulay_representation(11, 3) == P{{5, 3}, {2, 2}});
  CHECK(veronese::macaulay_representation(7, 2) == P{{4, 2}, {1, 1}});
  CHECK(veronese::macaulay_representation(0, 3) == P{});
}

TEST_CASE("macaulay representation reconstructs and cascades") {
  for (long long m = 0; m <= 200; ++m)
    for (long long k = 1; k <= 5; ++k) {
      const auto rep = veronese::macaulay_representation(m, k);
      Int sum = 0;
      Int prev_a = -1;
      long long prev_j = k + 1;
      for (const auto& [a, j] : rep) {
        CHECK(j < prev_j);        // indices strictly decreasing from k
        CHECK(a >= j);            // positive binomials only
        if (prev_a >= 0) CHECK(a < prev_a);
        sum += testsupport::pascal_binomial(a.convert_to<long long>(), j);
        prev_a = a;
        prev_j = j;
      }
      CHECK(!rep.empty() == (m > 0));
      if (!rep.empty()) CHECK(rep.front().second == k);
      CHECK(sum == m);
    }
}

TEST_CASE("shadow size goldens") {
  CHECK(veronese::kk_shadow_size(4, 2) == 4);
  CHECK(veronese::kk_shadow_size(3, 2) == 3);
  CHECK(veronese::kk_shadow_size(2, 3) == 5);
  CHECK(veronese::kk_shadow_size(0, 2) == 0);
  CHECK(veronese::kk_shadow_size(6, 1) == 1);
}

TEST_CASE("shadow size equals materialized shadow") {
  for (long long k = 1; k <= 4; ++k)
    for (long long m = 0; m <= 60; ++m)
      CHECK(veronese::kk_shadow_size(m, k) == testsupport::brute_shadow_size(m, static_cast<int>(k)));
}

TEST_CASE("macaulay bound goldens") {
  CHECK(veronese::macaulay_bound(3, 1) == 6);
  CHECK(veronese::macaulay_bound(6, 2) == 10);
  CHECK(veronese::macaulay_bound(4, 2) == 5);
  CHECK(veronese::macaulay_bound(1, 3) == 1);
  CHECK(veronese::macaulay_bound(0, 2) == 0);
}

TEST_CASE("is_m_sequence goldens") {
  CHECK(veronese::is_m_sequence(V{1, 3, 6, 10}));
  CHECK_FALSE(veronese::is_m_sequence(V{1, 2, 4}));
  CHECK(veronese::is_m_sequence(V{1, 0, 0}));
  CHECK(veronese::is_m_sequence(V{1}));
  CHECK(veronese::is_m_sequence(V{1, 100}));
  CHECK(veronese::is_m_sequence(V{1, 1, 1, 1, 1}));
  CHECK_FALSE(veronese::is_m_sequence(V{1, 3, 6, 11}));
  CHECK_FALSE(veronese::is_m_sequence(V{1, 2, 0, 1}));  // zeros propagate
  CHECK_FALSE(veronese::is_m_sequence(V{2, 1}));
  CHECK_FALSE(veronese::is_m_sequence(V{1, -1}));
  CHECK_FALSE(veronese::is_m_sequence(V{}));
}

TEST_CASE("colex rank goldens") {
  CHECK(veronese::colex_rank({}) == 1);
  CHECK(veronese::colex_rank({1}) == 1);
  CHECK(veronese::colex_rank({5}) == 5);
  CHECK(veronese::colex_rank({1, 2}) == 1);
  CHECK(veronese::colex_rank({2, 3}) == 3);
  CHECK(veronese::colex_rank({1, 4}) == 4);
  CHECK(veronese::colex_rank({1, 2, 3}) == 1);
  CHECK(veronese::colex_rank({2, 3, 4}) == 4);
  CHECK_THROWS_AS(veronese::colex_rank({2, 1}), veronese::DomainError);
  CHECK_THROWS_AS(veronese::colex_rank({0, 1}), veronese::DomainError);
  CHECK_THROWS_AS(veronese::colex_rank({1, 1}), veronese::DomainError);
}

TEST_CASE("colex unrank and successor walk the squashed order") {
  CHECK(veronese::colex_unrank(1, 0).empty());
  CHECK_THROWS_AS(veronese::colex_unrank(2, 0), veronese::DomainError);
  CHECK_THROWS_AS(veronese::colex_unrank(0, 1), veronese::DomainError);
  for (int k = 1; k <= 4; ++k) {
    const auto family = testsupport::colex_family(70, k);
    std::vector<int> walker;
    for (long long m = 1; m <= 70; ++m) {
      const auto& expected = family[static_cast<size_t>(m - 1)];
      CHECK(veronese::colex_unrank(m, k) == expected);
      CHECK(veronese::colex_rank(expected) == m);
      if (m == 1) {
        walker = expected;
      } else {
        veronese::colex_successor(walker);
        CHECK(walker == expected);
      }
    }
  }
}

TEST_CASE("unrank guards astronomically large labels") {
  const Int huge = Int("3000000000");
  CHECK_THROWS_AS(veronese::colex_unrank(huge, 1), veronese::BudgetExceeded);
}

TEST_CASE("is_f_vector goldens") {
  CHECK(veronese::is_f_vector(V{1, 4, 6, 4, 1}));
  CHECK_FALSE(veronese::is_f_vector(V{1, 3, 4}));
  CHECK(veronese::is_f_vector(V{1, 5, 7, 2}));
  CHECK(veronese::is_f_vector(V{1}));
  CHECK(veronese::is_f_vector(V{1, 0, 0}));
  CHECK(veronese::is_f_vector(V{1, 3, 3, 1}));
  CHECK(veronese::is_f_vector(V{1, 30, 0}));
  CHECK_FALSE(veronese::is_f_vector(V{1, 0, 2}));
  CHECK_FALSE(veronese::is_f_vector(V{2, 1}));
  CHECK_FALSE(veronese::is_f_vector(V{1, -1}));
  CHECK_FALSE(veronese::is_f_vector(V{}));
}

TEST_CASE("is_f_vector agrees with compressed-family search") {
  // Exhaustive over (1,a,b,c) with entries <= 20; the compressed family
  // decides realizability by Kruskal-Katona.
  for (int a = 0; a <= 20; ++a)
    for (int b = 0; b <= 20; ++b) {
      CHECK(veronese::is_f_vector(V{1, a, b}) ==
            testsupport::compressed_family_realizable(V{1, a, b}));
      for (int c = 0; c <= 20; ++c) {
        const V v{1, a, b, c};
        CHECK(veronese::is_f_vector(v) == testsupport::compressed_family_realizable(v));
      }
    }
}

TEST_CASE("every f-vector is an M-sequence") {
  for (int a = 0; a <= 14; ++a)
    for (int b = 0; b <= 14; ++b)
      for (int c = 0; c <= 14; ++c) {
        const V v{1, a, b, c};
        if (veronese::is_f_vector(v)) CHECK(veronese::is_m_sequence(v));
      }
}

TEST_CASE("revlex_realize goldens") {
  CHECK(veronese::revlex_realize(V{1, 3, 3}) ==
        SimplicialComplex::from_facets({{1, 2}, {1, 3}, {2, 3}}));
  CHECK(veronese::revlex_realize(V{1, 1}) == SimplicialComplex::from_facets({{1}}));
  const SimplicialComplex empty = veronese::revlex_realize(V{1});
  REQUIRE(empty.facet_count() == 1);
  CHECK(empty.facet(0).empty());
  CHECK(empty.dim() == -1);
  CHECK(veronese::f_vector(empty) == V{1});
  CHECK_THROWS_AS(veronese::revlex_realize(V{1, 3, 4}), veronese::NotAnFVector);
  CHECK_THROWS_AS(veronese::revlex_realize(V{1, 3, 3}, 2), veronese::BudgetExceeded);
  CHECK_THROWS_AS(veronese::revlex_realize(V{1, 3, 3}, 0), veronese::DomainError);
}

TEST_CASE("realization round trips") {
  auto trimmed = [](V v) {
    while (v.size() > 1 && v.back() == 0) v.pop_back();
    return v;
  };
  const std::vector<V> vectors = {
      {1, 4, 6, 4, 1}, {1, 5, 7, 2},  {1, 215, 240}, {1, 6, 15, 20, 15, 6, 1},
      {1, 30, 0},      {1, 65, 120},  {1, 7, 21, 35, 35, 21, 7, 1},
      {1, 12, 40, 50}, {1, 20, 100, 150, 60},
  };
  for (const V& v : vectors) {
    REQUIRE(veronese::is_f_vector(v));
    const SimplicialComplex c = veronese::revlex_realize(v);
    CHECK(veronese::f_vector(c) == trimmed(v));
  }
  // all short f-vectors with small entries
  for (int a = 0; a <= 12; ++a)
    for (int b = 0; b <= 12; ++b) {
      const V v{1, a, b};
      if (!veronese::is_f_vector(v)) continue;
      CHECK(veronese::f_vector(veronese::revlex_realize(v)) == trimmed(v));
    }
}

TEST_CASE("realized complexes are compressed") {
  // Faces of size s are the colex-first v_s s-sets: facet labels of the
  // (1,5,7,2) realization match the tail of the oracle families.
  const SimplicialComplex c = veronese::revlex_realize(V{1, 5, 7, 2});
  const auto triples = testsupport::colex_family(2, 3);
  REQUIRE(c.facet_count() >= 2);
  // canonical order puts the two 3-sets last
  const auto last = c.facet(c.facet_count() - 1);
  CHECK(std::vector<int>(last.begin(), last.end()) == triples[1]);
}

TEST_CASE("is_basic_admissible goldens") {
  CHECK(veronese::is_basic_admissible(V{0, 1, 1}, V{1, 2, 1}));
  CHECK_FALSE(veronese::is_basic_admissible(V{0, 1, 3}, V{1, 2, 1}));
  CHECK(veronese::is_basic_admissible(V{0, 1, 0}, V{1, 0, 0}));
  CHECK(veronese::is_basic_admissible(V{0, 1}, V{1, 5}));
  // rejected through the f-vector branch, not the shape check
  CHECK_FALSE(veronese::is_basic_admissible(V{0, 1, 3, 4}, V{1, 5, 5, 5}));
}

TEST_CASE("is_basic_admissible shape errors") {
  CHECK_THROWS_AS(veronese::is_basic_admissible(V{1, 1, 1}, V{1, 2, 1}),
                  veronese::DomainError);
  CHECK_THROWS_AS(veronese::is_basic_admissible(V{0, 2, 1}, V{1, 2, 1}),
                  veronese::DomainError);
  CHECK_THROWS_AS(veronese::is_basic_admissible(V{0, 1, 1}, V{2, 2, 1}),
                  veronese::DomainError);
  CHECK_THROWS_AS(veronese::is_basic_admissible(V{0, 1, 1}, V{1, 2, 1, 3}),
                  veronese::DomainError);
  CHECK_THROWS_AS(veronese::is_basic_admissible(V{0}, V{1}), veronese::DomainError);
}
