#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <vector>

#include "doctest.h"
#include "support/oracles.hpp"
#include "veronese/errors.hpp"
#include "veronese/int_polynomial.hpp"
#include "veronese/series.hpp"
#include "veronese/transform.hpp"

using veronese::Int;
using veronese::IntPolynomial;

namespace {

IntPolynomial poly(std::vector<Int> c) { return IntPolynomial(std::move(c)); }

using V = std::vector<Int>;

}  // namespace

TEST_CASE("c_count golden values and conventions") {
  CHECK(veronese::c_count(8, 4, 9) == 216);
  CHECK(veronese::c_count(8, 4, 18) == 456);
  CHECK(veronese::c_count(5, 0, 0) == 1);
  CHECK(veronese::c_count(5, 0, 3) == 0);
  CHECK(veronese::c_count(1, 2, 1) == 2);
  CHECK(veronese::c_count(3, 2, -1) == 0);
  CHECK(veronese::c_count(3, 2, 7) == 0);
  CHECK_THROWS_AS(veronese::c_count(-1, 2, 0), veronese::DomainError);
  CHECK_THROWS_AS(veronese::c_count(2, -1, 0), veronese::DomainError);
}

TEST_CASE("c_count equals bounded-tuple enumeration") {
  for (int r = 0; r <= 6; ++r)
    for (int d = 0; d <= 5; ++d)
      for (int i = -1; i <= d * r + 1; ++i)
        CHECK(veronese::c_count(r, d, i) == testsupport::brute_c_count(r, d, i));
}

TEST_CASE("c_count symmetry") {
  for (int r = 1; r <= 7; ++r)
    for (int d = 1; d <= 4; ++d)
      for (int i = 0; i <= d * r; ++i)
        CHECK(veronese::c_count(r, d, i) == veronese::c_count(r, d, d * r - i));
}

TEST_CASE("c_matrix golden 9,4") {
  const veronese::CMatrix m = veronese::c_matrix(9, 4);
  REQUIRE(m.rows.size() == 5);
  CHECK(m.rows[0] == V{1, 0, 0, 0, 0, 0, 0, 0, 0});
  CHECK(m.rows[1] == V{216, 165, 120, 84, 56, 35, 20, 10, 4});
  CHECK(m.rows[2] == V{456, 480, 489, 480, 456, 420, 375, 324, 270});
  CHECK(m.rows[3] == V{56, 84, 120, 165, 216, 270, 324, 375, 420});
  CHECK(m.rows[4] == V{0, 0, 0, 0, 1, 4, 10, 20, 35});
}

TEST_CASE("c_matrix edge shapes and errors") {
  const veronese::CMatrix m = veronese::c_matrix(1, 1);
  REQUIRE(m.rows.size() == 2);
  CHECK(m.rows[0] == V{1});
  CHECK(m.rows[1] == V{0});
  CHECK_THROWS_AS(veronese::c_matrix(3, 4), veronese::DomainError);
  CHECK_THROWS_AS(veronese::c_matrix(2, 0), veronese::DomainError);
}

TEST_CASE("matrix columns agree with the column vectors") {
  for (long long r = 1; r <= 10; ++r)
    for (long long d = 1; d <= r; ++d) {
      const veronese::CMatrix m = veronese::c_matrix(r, d);
      for (long long k = 0; k < r; ++k) {
        const V col = veronese::column(r, d, k);
        for (long long i = 0; i <= d; ++i)
          CHECK(m.rows[static_cast<size_t>(i)][static_cast<size_t>(k)] ==
                col[static_cast<size_t>(i)]);
      }
    }
}

TEST_CASE("small-values table d=1 and d=2, generic r") {
  for (long long r : {2, 5, 9}) {
    CHECK(veronese::column(r, 1, 0) == V{1, 0});
    CHECK(veronese::ghat(r, 1, 0) == V{1, -1});
    CHECK(veronese::g(r, 1, 0) == V{1});
    for (long long k = 1; k < r; ++k) {
      CHECK(veronese::column(r, 1, k) == V{0, 1});
      CHECK(veronese::ghat(r, 1, k) == V{0, 1});
      CHECK(veronese::g(r, 1, k) == V{0});
    }
  }
  for (long long r : {5, 9}) {
    CHECK(veronese::column(r, 2, 0) == V{1, r - 1, 0});
    CHECK(veronese::g(r, 2, 0) == V{1, r - 2});
    CHECK(veronese::ghat(r, 2, 0) == V{1, r - 2, -r + 1});
    CHECK(veronese::column(r, 2, 1) == V{0, r, 0});
    CHECK(veronese::g(r, 2, 1) == V{0, r});
    CHECK(veronese::ghat(r, 2, 1) == V{0, r, -r});
    for (long long k = 2; k < r; ++k) {
      CHECK(veronese::column(r, 2, k) == V{0, r - k + 1, k - 1});
      CHECK(veronese::g(r, 2, k) == V{0, r - k + 1});
      CHECK(veronese::ghat(r, 2, k) == V{0, r - k + 1, 2 * k - r - 2});
    }
  }
}

TEST_CASE("small-values table d=3, r=3") {
  CHECK(veronese::column(3, 3, 0) == V{1, 7, 1, 0});
  CHECK(veronese::g(3, 3, 0) == V{1, 6});
  CHECK(veronese::ghat(3, 3, 0) == V{1, 6, -6});
  CHECK(veronese::column(3, 3, 1) == V{0, 6, 3, 0});
  CHECK(veronese::g(3, 3, 1) == V{0, 6});
  CHECK(veronese::ghat(3, 3, 1) == V{0, 6, -3});
  CHECK(veronese::column(3, 3, 2) == V{0, 3, 6, 0});
  CHECK(veronese::g(3, 3, 2) == V{0, 3});
  CHECK(veronese::ghat(3, 3, 2) == V{0, 3, 3});
}

TEST_CASE("small-values table d=4, r=4") {
  CHECK(veronese::column(4, 4, 0) == V{1, 31, 31, 1, 0});
  CHECK(veronese::g(4, 4, 0) == V{1, 30, 0});
  CHECK(veronese::ghat(4, 4, 0) == V{1, 30, 0, -30});
  CHECK(veronese::column(4, 4, 1) == V{0, 20, 40, 4, 0});
  CHECK(veronese::g(4, 4, 1) == V{0, 20, 20});
  CHECK(veronese::ghat(4, 4, 1) == V{0, 20, 20, -36});
  CHECK(veronese::column(4, 4, 2) == V{0, 10, 44, 10, 0});
  CHECK(veronese::g(4, 4, 2) == V{0, 10, 34});
  CHECK(veronese::ghat(4, 4, 2) == V{0, 10, 34, -34});
  CHECK(veronese::column(4, 4, 3) == V{0, 4, 40, 20, 0});
  CHECK(veronese::g(4, 4, 3) == V{0, 4, 36});
  CHECK(veronese::ghat(4, 4, 3) == V{0, 4, 36, -20});
}

TEST_CASE("named column and zero convention") {
  CHECK(veronese::column(9, 4, 1) == V{0, 165, 480, 84, 0});
  CHECK(veronese::column(3, 2, 7) == V{0, 0, 0});
  CHECK(veronese::ghat(3, 2, 3) == V{0, 0, 0});
  CHECK(veronese::g(3, 2, 5) == V{0, 0});
  CHECK_THROWS_AS(veronese::column(0, 1, 0), veronese::DomainError);
  CHECK_THROWS_AS(veronese::ghat(2, 2, -1), veronese::DomainError);
}

TEST_CASE("ghat entries are column differences; g drops the last entry") {
  for (long long r = 1; r <= 8; ++r)
    for (long long d = 1; d <= r; ++d)
      for (long long k = 0; k <= r + 2; ++k) {
        const V col = veronese::column(r, d, k);
        const V gh = veronese::ghat(r, d, k);
        const V gv = veronese::g(r, d, k);
        REQUIRE(gh.size() == static_cast<size_t>(d / 2) + 2);
        REQUIRE(gv.size() == gh.size() - 1);
        for (size_t i = 0; i + 1 < gh.size(); ++i) CHECK(gv[i] == gh[i]);
        if (k < r) {
          CHECK(gh[0] == col[0]);
          for (size_t i = 1; i < gh.size(); ++i)
            CHECK(gh[i] == col[i] - col[i - 1]);
        }
        // raw formula agrees with the definitional vectors below the cutoff
        if (k < r) CHECK(veronese::ghat_raw(r, d, k) == gh);
      }
}

TEST_CASE("ghat_raw beyond the convention cutoff") {
  CHECK(veronese::ghat_raw(4, 4, 4) == V{0, 1, 30, 0});
}

TEST_CASE("column sums are r^(d-1)") {
  for (long long r = 1; r <= 9; ++r)
    for (long long d = 1; d <= r; ++d) {
      Int expected = 1;
      for (long long t = 1; t < d; ++t) expected *= r;
      for (long long k = 0; k < r; ++k) {
        Int sum = 0;
        for (const Int& x : veronese::column(r, d, k)) sum += x;
        CHECK(sum == expected);
      }
    }
}

TEST_CASE("veronese_h golden values") {
  CHECK(veronese::veronese_h(poly({1}), 4, 9) == V{1, 216, 456, 56, 0});
  CHECK(veronese::veronese_h(poly({1}), 1, 3) == V{1, 0});
  CHECK(veronese::veronese_h(poly({1, 1}), 2, 2) == V{1, 3, 0});
  // r = 1 is the identity, zero-padded to m + 1 = max(deg, d) + 1
  CHECK(veronese::veronese_h(poly({1, 2, 1}), 4, 1) == V{1, 2, 1, 0, 0});
  CHECK(veronese::veronese_h(poly({1, 2, 1}), 2, 1) == V{1, 2, 1});
}

TEST_CASE("veronese_g golden values and precondition") {
  CHECK(veronese::veronese_g(poly({1}), 4, 4) == V{1, 30, 0});
  // deg h = r boundary: the raw k = 4 column still contributes h_4 * (0, 1, 30),
  // so this matches the differences of veronese_h = (1, 66, 186, 66, 1).
  CHECK(veronese::veronese_g(poly({1, 1, 1, 1, 1}), 4, 4) == V{1, 65, 120});
  CHECK(veronese::veronese_g(poly({1, 2, 1}), 2, 2) == V{1, 5});
  CHECK(veronese::veronese_g(poly({1, 0, 3}), 2, 2) == V{1, 3});
  CHECK(veronese::veronese_g(poly({1}), 1, 1) == V{1});
  CHECK(veronese::veronese_g(poly({1}), 1, 5) == V{1});
  CHECK_THROWS_AS(veronese::veronese_g(poly({1}), 4, 3), veronese::DomainError);
  CHECK_THROWS_AS(veronese::veronese_g(poly({1, 1, 1}), 2, 1), veronese::DomainError);
}

TEST_CASE("veronese_g equals differences of veronese_h") {
  const std::vector<std::vector<Int>> hs = {{1}, {1, 1}, {1, 2}, {1, 0, 3}, {1, 2, 1}};
  for (const auto& c : hs) {
    const IntPolynomial h(c);
    for (long long d = 1; d <= 5; ++d)
      for (long long r = std::max<long long>(h.degree(), d); r <= 8; ++r) {
        const V lhs = veronese::veronese_g(h, d, r);
        const V rhs =
            veronese::g_vector(veronese::trim(veronese::veronese_h(h, d, r)), d / 2);
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("transform agrees with the expansion oracle") {
  for (int c1 = 0; c1 <= 3; ++c1)
    for (int c2 = 0; c2 <= 3; ++c2) {
      const IntPolynomial h(std::vector<Int>{1, c1, c2});
      for (long long d = 1; d <= 4; ++d)
        for (long long r = 1; r <= 6; ++r) {
          const IntPolynomial lhs = veronese::trim(veronese::veronese_h(h, d, r));
          const IntPolynomial rhs =
              veronese::veronese_by_expansion(veronese::make_series(h, d), r).numerator;
          CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("lemma check suites pass on a small grid") {
  for (long long r = 1; r <= 10; ++r)
    for (long long d = 1; d <= r; ++d) {
      const auto sym = veronese::check_symmetry(r, d);
      const auto rec = veronese::check_recursion(r, d);
      const auto sgn = veronese::check_sign_pattern(r, d);
      const auto grw = veronese::check_growth(r, d);
      INFO("r=", r, " d=", d);
      CHECK(sym.pass);
      CHECK(rec.pass);
      CHECK(sgn.pass);
      CHECK(grw.pass);
    }
}

TEST_CASE("even last-entry growth cutoff is exactly 2k >= d + r") {
  // Pins why check_growth restricts the even-d last-entry comparison: below
  // the cutoff the shifted entries genuinely shrink.
  CHECK(veronese::ghat(9, 4, 4).back() == Int(-240));
  CHECK(veronese::ghat(10, 4, 5).back() == Int(-244));
  CHECK(veronese::check_growth(9, 4).pass);
  // At and above the cutoff the inequality holds on a wide sweep.
  for (long long r = 2; r <= 14; ++r)
    for (long long d = 2; d <= r; d += 2)
      for (long long k = (d + r + 1) / 2; k <= r; ++k) {
        INFO("r=", r, " d=", d, " k=", k);
        CHECK(veronese::ghat(r + 1, d, k + 1).back() >= veronese::ghat(r, d, k).back());
      }
}

TEST_CASE("positivity threshold search") {
  auto R1 = veronese::find_positivity_threshold(poly({1, -1, 1}), 2, 10);
  REQUIRE(R1.has_value());
  CHECK(*R1 == 3);
  CHECK_FALSE(veronese::find_positivity_threshold(poly({1, -1}), 2, 50).has_value());
  auto R3 = veronese::find_positivity_threshold(poly({1, 1}), 2, 5);
  REQUIRE(R3.has_value());
  CHECK(*R3 == 1);
}
