#include "veronese/sturm.hpp"

#include <utility>
#include <vector>

#include "veronese/errors.hpp"
#include "veronese/integer.hpp"

namespace veronese {
namespace {

// Dense rational polynomial, trimmed (empty == zero).
using RPoly = std::vector<Rational>;

void trim(RPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

long long deg(const RPoly& p) { return static_cast<long long>(p.size()) - 1; }

RPoly derivative(const RPoly& p) {
  RPoly d;
  for (size_t i = 1; i < p.size(); ++i) d.push_back(Rational(i) * p[i]);
  return d;
}

// Remainder of a by b, b nonzero.
RPoly rem(RPoly a, const RPoly& b) {
  while (deg(a) >= deg(b)) {
    Rational q = a.back() / b.back();
    const size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
    a.pop_back();
    trim(a);
    if (a.empty()) break;
  }
  return a;
}

RPoly gcd(RPoly a, RPoly b) {
  while (!b.empty()) {
    RPoly r = rem(std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  // Monic normalization keeps divisions exact downstream.
  if (!a.empty()) {
    Rational lc = a.back();
    for (auto& c : a) c /= lc;
  }
  return a;
}

// Exact quotient; remainder must vanish.
RPoly quot(RPoly a, const RPoly& b) {
  RPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
  while (deg(a) >= deg(b)) {
    Rational c = a.back() / b.back();
    const size_t shift = a.size() - b.size();
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    a.pop_back();
    trim(a);
    if (a.empty()) break;
  }
  trim(q);
  return q;
}

int sign(const Rational& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

// Sign variations in the sequence of leading-term signs at +inf / -inf.
long long variations(const std::vector<RPoly>& chain, bool at_plus_infinity) {
  long long count = 0;
  int prev = 0;
  for (const RPoly& p : chain) {
    if (p.empty()) continue;
    int s = sign(p.back());
    if (!at_plus_infinity && deg(p) % 2 == 1) s = -s;
    if (prev != 0 && s != 0 && s != prev) ++count;
    if (s != 0) prev = s;
  }
  return count;
}

}  // namespace

bool is_real_rooted(const IntPolynomial& p) {
  if (p.is_zero()) throw DomainError("real-rootedness requires a nonzero polynomial");
  RPoly q;
  for (const Int& c : p.coeffs()) q.push_back(Rational(c));
  // Square-free part: roots without multiplicities.
  RPoly g = gcd(q, derivative(q));
  RPoly f = g.size() <= 1 ? q : quot(std::move(q), g);
  const long long n = deg(f);
  if (n <= 0) return true;
  std::vector<RPoly> chain{f, derivative(f)};
  while (deg(chain.back()) > 0) {
    RPoly r = rem(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;  // cannot happen for square-free f, kept for safety
    for (auto& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  const long long real_roots =
      variations(chain, /*at_plus_infinity=*/false) - variations(chain, true);
  return real_roots == n;
}

}  // namespace veronese
