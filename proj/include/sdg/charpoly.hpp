#pragma once

#include <cstddef>
#include <vector>

#include "sdg/polynomial.hpp"
#include "sdg/sidigraph.hpp"

namespace sdg {

/// A linear subsidigraph: vertex-disjoint directed cycles.
struct LinearSub {
  std::vector<CycleRecord> cycles;
  int order = 0;       // total number of vertices
  int components = 0;  // number of cycles
  int sign = 1;        // product of cycle signs
};

/// Linear subsidigraphs of one order, split by the parity of the component
/// count and the sign: a = odd/negative, b = even/positive, c = odd/positive,
/// d = even/negative. Types a and b contribute +1 to b_j, types c and d -1.
struct TypeCensus {
  int j = 0;
  std::size_t count_a = 0;
  std::size_t count_b = 0;
  std::size_t count_c = 0;
  std::size_t count_d = 0;

  std::size_t total() const noexcept { return count_a + count_b + count_c + count_d; }
  long long coefficient() const noexcept {
    return static_cast<long long>(count_a + count_b) - static_cast<long long>(count_c + count_d);
  }
};

struct NegationReport {
  bool spec_invariant = false;   // phi(z) == (-1)^n phi(-z)
  bool odd_coeffs_zero = false;  // b_j == 0 for every odd j
  bool census_balanced = false;  // a+b == c+d for every odd j
};

struct DeltaFormReport {
  bool form1_holds = false;
  bool form2_holds = false;
  bool c_values_match_census = false;
  std::vector<BigInt> c;  // c[j-1] = |b_{2j}|
};

struct LinearSubOptions {
  std::size_t cycle_cap = CycleOptions{}.cap;
  std::size_t sub_cap = 1'000'000;
};

inline constexpr int kDefaultExactOrderLimit = 64;
inline constexpr int kDefaultMinorsOrderLimit = 12;

/// det(zI - A(s)) by fraction-free elimination over Z[z]. Throws SizeOverflow
/// above `order_limit`.
IntPolynomial charpoly_exact(const Sidigraph& s, int order_limit = kDefaultExactOrderLimit);

/// Independent oracle: the coefficient of z^{n-j} is (-1)^j times the sum of
/// all principal j x j minors, each expanded by cofactors. Throws
/// OracleBoundExceeded above `order_limit`.
IntPolynomial charpoly_minors(const Sidigraph& s, int order_limit = kDefaultMinorsOrderLimit);

/// Characteristic polynomial assembled from the coefficient theorem over all
/// linear subsidigraphs.
IntPolynomial charpoly_from_linear_subs(const Sidigraph& s, const LinearSubOptions& options = {});

std::vector<LinearSub> enumerate_linear_subs(const Sidigraph& s, int j, const LinearSubOptions& options = {});
BigInt coefficient_via_theorem(const Sidigraph& s, int j, const LinearSubOptions& options = {});
TypeCensus type_census(const Sidigraph& s, int j, const LinearSubOptions& options = {});

NegationReport neg_invariance_equivalences(const Sidigraph& s, const LinearSubOptions& options = {});

/// Shape checks on a characteristic polynomial alone.
bool has_alternating_even_form(const IntPolynomial& p);
bool has_nonnegative_even_form(const IntPolynomial& p);

DeltaFormReport verify_delta_form(const Sidigraph& s, const LinearSubOptions& options = {});

}  // namespace sdg
