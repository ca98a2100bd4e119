#pragma once

#include "veronese/int_polynomial.hpp"

namespace veronese {

// Exact real-rootedness via a Sturm chain over rationals: p (nonzero) has all
// roots real iff the number of distinct real roots of its square-free part
// equals that part's degree. Degree <= 0 is vacuously real-rooted.
bool is_real_rooted(const IntPolynomial& p);

}  // namespace veronese
