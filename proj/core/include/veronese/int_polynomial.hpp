#pragma once

#include <utility>
#include <vector>

#include "veronese/integer.hpp"

namespace veronese {

// Integer polynomial in t. Invariant: coeffs_ is trimmed — empty represents
// the zero polynomial, otherwise coeffs_.back() != 0.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  long long degree() const { return static_cast<long long>(coeffs_.size()) - 1; }

  // Total accessor: 0 outside the stored range (h_i = 0 for i > lambda).
  const Int& coeff(long long i) const {
    static const Int kZero = 0;
    if (i < 0 || i >= static_cast<long long>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<size_t>(i)];
  }

  const std::vector<Int>& coeffs() const { return coeffs_; }

  IntPolynomial derivative() const {
    std::vector<Int> d;
    for (size_t i = 1; i < coeffs_.size(); ++i) d.push_back(Int(i) * coeffs_[i]);
    return IntPolynomial(std::move(d));
  }

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  std::vector<Int> coeffs_;
};

}  // namespace veronese
