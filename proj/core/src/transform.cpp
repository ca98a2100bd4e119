#include "veronese/transform.hpp"

#include <algorithm>
#include <sstream>

#include "veronese/errors.hpp"

namespace veronese {
namespace {

Int pow_ll(long long base, long long exp) {
  Int result = 1;
  for (long long i = 0; i < exp; ++i) result *= base;
  return result;
}

void require_grid(long long r, long long d) {
  if (d < 1 || r < d) throw DomainError("requires 1 <= d <= r");
}

}  // namespace

Int c_count(long long r, long long d, long long i) {
  if (r < 0 || d < 0) throw DomainError("c_count requires r >= 0 and d >= 0");
  if (d == 0) return i == 0 ? 1 : 0;
  if (i < 0 || i > d * r) return 0;
  Int sum = 0;
  for (long long k = 0; k <= d && i - k * (r + 1) >= 0; ++k) {
    Int term = binomial(d, k) * binomial(i - k * (r + 1) + d - 1, d - 1);
    if (k % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  return sum;
}

CMatrix c_matrix(long long r, long long d) {
  if (d < 1 || r < d) throw DomainError("c_matrix requires r >= d >= 1");
  CMatrix m{r, d, {}};
  m.rows.resize(static_cast<size_t>(d) + 1);
  for (long long i = 0; i <= d; ++i) {
    auto& row = m.rows[static_cast<size_t>(i)];
    row.resize(static_cast<size_t>(r));
    for (long long j = 0; j < r; ++j) row[static_cast<size_t>(j)] = c_count(r - 1, d, i * r - j);
  }
  return m;
}

std::vector<Int> column(long long r, long long d, long long k) {
  if (r < 1 || d < 1 || k < 0) throw DomainError("column requires r, d >= 1 and k >= 0");
  std::vector<Int> v(static_cast<size_t>(d) + 1);
  if (k >= r) return v;
  for (long long i = 0; i <= d; ++i) v[static_cast<size_t>(i)] = c_count(r - 1, d, i * r - k);
  return v;
}

std::vector<Int> ghat_raw(long long r, long long d, long long k) {
  if (r < 1 || d < 1 || k < 0) throw DomainError("ghat requires r, d >= 1 and k >= 0");
  const long long top = d / 2 + 1;
  std::vector<Int> v(static_cast<size_t>(top) + 1);
  v[0] = c_count(r - 1, d, -k);
  for (long long i = 1; i <= top; ++i)
    v[static_cast<size_t>(i)] =
        c_count(r - 1, d, i * r - k) - c_count(r - 1, d, (i - 1) * r - k);
  return v;
}

std::vector<Int> ghat(long long r, long long d, long long k) {
  if (r < 1 || d < 1 || k < 0) throw DomainError("ghat requires r, d >= 1 and k >= 0");
  if (k >= r) return std::vector<Int>(static_cast<size_t>(d / 2) + 2);
  return ghat_raw(r, d, k);
}

std::vector<Int> g(long long r, long long d, long long k) {
  std::vector<Int> v = ghat(r, d, k);
  v.pop_back();
  return v;
}

std::vector<Int> veronese_h(const IntPolynomial& h, long long d, long long r) {
  if (h.is_zero()) throw DomainError("veronese_h requires a nonzero numerator");
  if (d < 1 || r < 1) throw DomainError("veronese_h requires d >= 1 and r >= 1");
  const long long lambda = h.degree();
  const long long m = std::max(lambda, d);
  std::vector<Int> out(static_cast<size_t>(m) + 1);
  for (long long i = 0; i <= m; ++i) {
    Int sum = 0;
    for (long long j = 0; j <= lambda; ++j) sum += c_count(r - 1, d, i * r - j) * h.coeff(j);
    out[static_cast<size_t>(i)] = sum;
  }
  return out;
}

std::vector<Int> veronese_g(const IntPolynomial& h, long long d, long long r) {
  if (h.is_zero()) throw DomainError("veronese_g requires a nonzero numerator");
  if (d < 1) throw DomainError("veronese_g requires d >= 1");
  const long long lambda = h.degree();
  if (r < std::max(lambda, d))
    throw DomainError("veronese_g requires r >= max(deg h, d)");
  // Raw columns, not the k >= r convention: at the k = r = deg h boundary the
  // zeroed column would drop h_k * (0, 1, ...) and the sum would no longer be
  // the difference vector of veronese_h.  For k < r the two columns agree.
  std::vector<Int> out(static_cast<size_t>(d / 2) + 1);
  for (long long k = 0; k <= lambda; ++k) {
    const std::vector<Int> gk = ghat_raw(r, d, k);
    for (size_t i = 0; i < out.size(); ++i) out[i] += h.coeff(k) * gk[i];
  }
  return out;
}

IntPolynomial trim(const std::vector<Int>& raw) { return IntPolynomial(raw); }

CheckReport check_symmetry(long long r, long long d) {
  if (r < 1 || d < 1) throw DomainError("check_symmetry requires r, d >= 1");
  CheckReport report{"symmetry", true, {}};
  for (long long i = 0; i <= d * r; ++i) {
    if (c_count(r, d, i) != c_count(r, d, d * r - i)) {
      report.pass = false;
      std::ostringstream os;
      os << "C(" << r << ',' << d << ',' << i << ") != C(" << r << ',' << d << ',' << d * r - i << ')';
      report.violations.push_back(os.str());
    }
  }
  for (long long i = 0; i <= d; ++i) {
    for (long long j = d + 1; j <= r - 1; ++j) {
      const Int lhs = c_count(r - 1, d, i * r - j);
      const Int rhs = c_count(r - 1, d, (d + 1 - i) * r - (r - (j - d)));
      if (lhs != rhs) {
        report.pass = false;
        std::ostringstream os;
        os << "extended symmetry fails at i=" << i << " j=" << j << ": " << lhs << " != " << rhs;
        report.violations.push_back(os.str());
      }
    }
  }
  return report;
}

CheckReport check_recursion(long long r, long long d) {
  if (r < 1 || d < 1) throw DomainError("check_recursion requires r, d >= 1");
  CheckReport report{"recursion", true, {}};
  for (long long i = 0; i <= d * r; ++i) {
    Int sum = 0;
    for (long long m = 0; m <= r; ++m) sum += c_count(r, d - 1, i - m);
    if (sum != c_count(r, d, i)) {
      report.pass = false;
      std::ostringstream os;
      os << "recursion fails at i=" << i << ": " << sum << " != " << c_count(r, d, i);
      report.violations.push_back(os.str());
    }
  }
  const Int expected = pow_ll(r, d - 1);
  for (long long k = 0; k <= r - 1; ++k) {
    Int sum = 0;
    for (long long i = 0; i <= d; ++i) sum += c_count(r - 1, d, i * r - k);
    if (sum != expected) {
      report.pass = false;
      std::ostringstream os;
      os << "column sum at k=" << k << " is " << sum << ", expected " << expected;
      report.violations.push_back(os.str());
    }
  }
  return report;
}

CheckReport check_sign_pattern(long long r, long long d) {
  require_grid(r, d);
  CheckReport report{"signs", true, {}};
  auto fail = [&](const std::string& msg) {
    report.pass = false;
    report.violations.push_back(msg);
  };
  for (long long k = 0; k <= r - 1; ++k) {
    const std::vector<Int> gk = g(r, d, k);
    const std::vector<Int> ghk = ghat(r, d, k);
    for (size_t i = 0; i < gk.size(); ++i) {
      if (gk[i] < 0) {
        std::ostringstream os;
        os << "g(" << r << ',' << d << ',' << k << ") entry " << i << " = " << gk[i] << " < 0";
        fail(os.str());
      }
    }
    const bool zero_expected = (d % 2 == 0 && d == r && k == 0) || (d == 1 && k > 0);
    if ((gk.back() == 0) != zero_expected) {
      std::ostringstream os;
      os << "last(g(" << r << ',' << d << ',' << k << ")) = " << gk.back()
         << (zero_expected ? ", expected zero" : ", expected nonzero");
      fail(os.str());
    }
    const Int& lg = ghk.back();
    if (d % 2 == 1) {
      const int expected_sign = 2 * k > d ? 1 : -1;  // 2k = d impossible for odd d
      if ((expected_sign > 0 && lg <= 0) || (expected_sign < 0 && lg >= 0)) {
        std::ostringstream os;
        os << "last(ghat(" << r << ',' << d << ',' << k << ")) = " << lg
           << ", expected sign " << expected_sign;
        fail(os.str());
      }
    } else {
      const int expected_sign = 2 * k > d + r ? 1 : (2 * k < d + r ? -1 : 0);
      const int actual = lg > 0 ? 1 : (lg < 0 ? -1 : 0);
      if (actual != expected_sign) {
        std::ostringstream os;
        os << "last(ghat(" << r << ',' << d << ',' << k << ")) = " << lg
           << ", expected sign " << expected_sign;
        fail(os.str());
      }
    }
  }
  // Last-entry pairings on formula-evaluated vectors: the partner index d-k
  // reaches r when d = r, where the storage convention would zero it out.
  for (long long k = 0; k <= d; ++k) {
    const std::vector<Int> a = ghat_raw(r, d, k);
    const std::vector<Int> b = ghat_raw(r, d, d - k);
    if (d % 2 == 1) {
      if (a.back() + b.back() != 0) {
        std::ostringstream os;
        os << "odd pairing fails at k=" << k << ": " << a.back() << " + " << b.back() << " != 0";
        fail(os.str());
      }
    } else {
      const Int& g_last = b[b.size() - 2];  // last entry of the g-part
      if (a.back() + g_last != 0) {
        std::ostringstream os;
        os << "even pairing fails at k=" << k << ": " << a.back() << " + " << g_last << " != 0";
        fail(os.str());
      }
    }
  }
  for (long long k = d + 1; k <= r - 1; ++k) {
    const Int lg = ghat(r, d, k).back();
    if (d % 2 == 0) {
      const Int partner = ghat(r, d, r - (k - d)).back();
      if (lg + partner != 0) {
        std::ostringstream os;
        os << "even high pairing fails at k=" << k << ": " << lg << " + " << partner << " != 0";
        fail(os.str());
      }
    } else {
      const Int lhs = lg + c_count(r - 1, d, (d + 1) / 2 * r + k - d);
      const Int rhs = c_count(r - 1, d, (d - 1) / 2 * r + k - d);
      if (lhs != rhs) {
        std::ostringstream os;
        os << "odd high identity fails at k=" << k << ": " << lhs << " != " << rhs;
        fail(os.str());
      }
    }
  }
  return report;
}

namespace {

bool leq(const std::vector<Int>& a, const std::vector<Int>& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

}  // namespace

CheckReport check_growth(long long r, long long d) {
  require_grid(r, d);
  CheckReport report{"growth", true, {}};
  auto fail = [&](const std::string& msg) {
    report.pass = false;
    report.violations.push_back(msg);
  };
  for (long long k = 0; k <= r; ++k) {
    if (!leq(g(r, d, k), g(r + 1, d, k))) {
      std::ostringstream os;
      os << "g(" << r << ',' << d << ',' << k << ") > g(" << r + 1 << ',' << d << ',' << k << ')';
      fail(os.str());
    }
    if (d % 2 == 1 && 2 * k >= d) {
      if (ghat(r + 1, d, k).back() < ghat(r, d, k).back()) {
        std::ostringstream os;
        os << "odd last-entry growth fails at k=" << k;
        fail(os.str());
      }
    }
    // Even d needs 2k >= d + r, not just k >= d: below that cutoff the shifted
    // last entries are negative and sink as r grows (first at r=9, d=4, k=4,
    // where last(ghat) moves -240 -> -244).
    if (d % 2 == 0 && 2 * k >= d + r) {
      if (ghat(r + 1, d, k + 1).back() < ghat(r, d, k).back()) {
        std::ostringstream os;
        os << "even last-entry growth fails at k=" << k;
        fail(os.str());
      }
    }
  }
  for (long long k = 0; k <= d - 1; ++k) {
    if (!leq(g(1, d, k), g(d, d, k))) {
      std::ostringstream os;
      os << "chain start fails at k=" << k;
      fail(os.str());
    }
    for (long long s = d; s <= r; ++s) {
      if (!leq(g(s, d, k), g(s + 1, d, k))) {
        std::ostringstream os;
        os << "chain fails at k=" << k << " between r=" << s << " and r=" << s + 1;
        fail(os.str());
      }
    }
  }
  return report;
}

std::optional<long long> find_positivity_threshold(const IntPolynomial& h,
                                                   long long d, long long max_r) {
  if (h.is_zero()) throw DomainError("threshold search requires a nonzero numerator");
  if (d < 1 || max_r < 1) throw DomainError("threshold search requires d >= 1 and max_r >= 1");
  auto positive = [&](long long r) {
    const IntPolynomial p = trim(veronese_h(h, d, r));
    if (p.is_zero()) return false;
    for (const Int& c : p.coeffs())
      if (c <= 0) return false;
    return true;
  };
  std::optional<long long> best;
  for (long long r = max_r; r >= 1; --r) {
    if (!positive(r)) break;
    best = r;
  }
  return best;
}

}  // namespace veronese
