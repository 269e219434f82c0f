#pragma once

#include <cstddef>
#include <vector>

#include "sdg/polynomial.hpp"
#include "sdg/sidigraph.hpp"

namespace sdg {

enum class HalfLineMap {
  kSplitReciprocal,  // [0,1] as is, [1,inf) through x = 1/t
  kRational,         // all of [0,inf) through x = t / (1 - t)
};

struct QuadratureSpec {
  double abs_tol = 1e-6;
  int max_subdivisions = 2000;  // per integration piece
  HalfLineMap transform = HalfLineMap::kSplitReciprocal;
};

enum class CoulsonForm {
  kLogMagnitude,   // (1/pi) int x^-2 log|x^n p(i/x)| dx
  kLogDerivative,  // (1/pi) int (n - ix p'(ix)/p(ix)) dx, real part only
};

/// Energy of a monic integer polynomial from the Coulson-type integral.
/// Zero roots are split off first (they carry no energy). The log-derivative
/// form needs a polynomial with no roots on the imaginary axis and throws
/// InvalidArgument otherwise. Throws QuadratureFailure when abs_tol is not
/// reached within max_subdivisions.
double energy_coulson_general(const IntPolynomial& p, const QuadratureSpec& q = {},
                              CoulsonForm form = CoulsonForm::kLogMagnitude);

/// (1/pi) int z^-2 log[1 + sum_j c_{2j} z^{2j}] dz, with c[j-1] = c_{2j}.
/// `n` is the order; c may have at most n/2 entries, all nonnegative.
double energy_delta1(const std::vector<BigInt>& c, int n, const QuadratureSpec& q = {});
/// (1/pi) int z^-2 log|1 + sum_j (-1)^j c_{2j} z^{2j}| dz.
double energy_delta2(const std::vector<BigInt>& c, int n, const QuadratureSpec& q = {});

/// c_{2j} = |b_{2j}| for j = 1..n/2.
std::vector<BigInt> even_coefficient_magnitudes(const IntPolynomial& p);

enum class QuasiOrder { kPrecedesStrictly, kEqual, kSucceedsStrictly, kIncomparable };

struct QuasiOrderResult {
  QuasiOrder relation = QuasiOrder::kIncomparable;
  std::vector<BigInt> c1;
  std::vector<BigInt> c2;
};

/// Componentwise comparison of two c-vectors of equal length.
QuasiOrder compare_c_vectors(const std::vector<BigInt>& c1, const std::vector<BigInt>& c2);

/// Quasi-order on graphs of the first bipartite class (every 4k-cycle
/// negative, every (4k+2)-cycle positive). Throws NotInDelta1 for anything
/// else and OrderMismatch for different orders.
QuasiOrderResult quasi_order_compare(const Sidigraph& s1, const Sidigraph& s2);

struct ArcDeletionReport {
  double e_before = 0;
  double e_after = 0;
  bool decreased = false;
};

/// Energy before and after deleting arc (tail, head) from a member of the
/// first bipartite class whose (head, tail) arc is also present.
ArcDeletionReport arc_deletion_energy_delta(const Sidigraph& s, int tail, int head);

}  // namespace sdg
