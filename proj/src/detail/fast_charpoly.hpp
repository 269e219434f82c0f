#pragma once

#include <vector>

#include "detail/bareiss.hpp"
#include "sdg/polynomial.hpp"
#include "sdg/sidigraph.hpp"

namespace sdg::detail {

// Up to this order every Bareiss intermediate of a {0,+1,-1} matrix stays far
// below 2^63, so plain 64-bit arithmetic is exact.
inline constexpr int kInt64CharpolyOrder = 10;

inline IntPolynomial charpoly_fast(const IntMatrix& a) {
  if (a.size() <= kInt64CharpolyOrder) {
    const std::vector<long long> c = bareiss_charpoly<long long>(a);
    return IntPolynomial(std::vector<BigInt>(c.begin(), c.end()));
  }
  return IntPolynomial(bareiss_charpoly<BigInt>(a));
}

}  // namespace sdg::detail
