#include "sdg/coulson.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <queue>
#include <string>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "sdg/charpoly.hpp"
#include "sdg/error.hpp"
#include "sdg/spectra.hpp"

namespace sdg {

namespace {

using Real = long double;
using Integrand = std::function<Real(Real)>;

struct Panel {
  Real a, b, value, error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

// Kronrod 15 / Gauss 7 on [a, b]; the rule never touches the endpoints.
Panel gk15(const Integrand& f, Real a, Real b) {
  using GK = boost::math::quadrature::gauss_kronrod<Real, 15>;
  using G = boost::math::quadrature::gauss<Real, 7>;
  const auto& x = GK::abscissa();
  const auto& wk = GK::weights();
  const auto& wg = G::weights();
  const Real mid = (a + b) / 2, half = (b - a) / 2;
  const Real f0 = f(mid);
  Real k = wk[0] * f0, g = wg[0] * f0;
  for (std::size_t i = 1; i < x.size(); ++i) {
    const Real pair = f(mid - half * x[i]) + f(mid + half * x[i]);
    k += wk[i] * pair;
    if (i % 2 == 0) g += wg[i / 2] * pair;
  }
  return {a, b, k * half, std::fabs((k - g) * half)};
}

// Global adaptive bisection: always split the panel with the largest error.
Real integrate(const Integrand& f, Real a, Real b, Real tol, int max_subdivisions) {
  std::priority_queue<Panel> heap;
  heap.push(gk15(f, a, b));
  Real total_err = heap.top().error;
  int splits = 0;
  while (total_err > tol) {
    if (splits >= max_subdivisions) {
      throw QuadratureFailure("error estimate " + std::to_string(static_cast<double>(total_err)) +
                              " above tolerance after " + std::to_string(splits) + " subdivisions");
    }
    const Panel worst = heap.top();
    heap.pop();
    const Real mid = (worst.a + worst.b) / 2;
    const Panel left = gk15(f, worst.a, mid), right = gk15(f, mid, worst.b);
    heap.push(left);
    heap.push(right);
    ++splits;
    // recompute rather than update, so rounding in the running sum cannot stall the loop
    total_err = 0;
    auto copy = heap;
    while (!copy.empty()) {
      total_err += copy.top().error;
      copy.pop();
    }
  }
  Real sum = 0;
  while (!heap.empty()) {
    sum += heap.top().value;
    heap.pop();
  }
  if (!std::isfinite(static_cast<double>(sum))) throw QuadratureFailure("integral is not finite");
  return sum;
}

Real horner(const std::vector<Real>& c, Real u) {
  Real v = 0;
  for (std::size_t k = c.size(); k-- > 0;) v = v * u + c[k];
  return v;
}

Real safe_log_abs(Real v) { return std::log(std::max(std::fabs(v), std::numeric_limits<Real>::min())); }

std::vector<Real> to_real(const std::vector<BigInt>& c) {
  std::vector<Real> r;
  r.reserve(c.size());
  for (const BigInt& v : c) r.push_back(v.convert_to<Real>());
  return r;
}

// Even integrand w * log|S(x^2)| / x^2 on (0, inf) for an integer S with
// S(0) = +-1. S is split into exact-multiplicity factors first, so a repeated
// zero of S does not sink into cancellation noise. The tail uses
// h_rev(v) = v^d h(1/v) for each factor.
class LogForm {
 public:
  LogForm(const IntPolynomial& s, Real weight) : weight_(weight) {
    const std::vector<IntPolynomial> factors = multiplicity_factors(s);
    for (std::size_t m = 0; m < factors.size(); ++m) {
      if (factors[m].degree() < 1) continue;
      std::vector<Real> c = to_real(factors[m].coeffs());
      if (c[0] < 0) {
        for (Real& v : c) v = -v;
      }
      degree_ += static_cast<int>(m + 1) * factors[m].degree();
      parts_.push_back({static_cast<Real>(m + 1), std::move(c)});
    }
  }

  Real inner(Real x) const {
    const Real u = x * x;
    Real sum = 0;
    for (const Part& p : parts_) {
      // h(u) = 1 + u T(u)
      Real t = 0;
      for (std::size_t k = p.c.size(); k-- > 1;) t = t * u + p.c[k];
      const Real ut = u * t;
      Real term;
      if (u == 0) {
        term = t;
      } else if (std::fabs(ut) < 0.5L) {
        term = std::log1p(ut) / u;
      } else {
        term = safe_log_abs(1 + ut) / u;
      }
      sum += p.mult * term;
    }
    return weight_ * sum;
  }

  Real tail(Real t) const {
    const Real v = t * t;
    Real sum = 0;
    for (const Part& p : parts_) {
      Real r = 0;
      for (const Real c : p.c) r = r * v + c;
      sum += p.mult * safe_log_abs(r);
    }
    return weight_ * sum;
  }

  // int_0^1 -2 d w log t dt with d = deg S
  Real tail_constant() const { return 2 * degree_ * weight_; }

 private:
  struct Part {
    Real mult;
    std::vector<Real> c;  // low-first in u
  };
  Real weight_;
  int degree_ = 0;
  std::vector<Part> parts_;
};

// Even rational integrand N(x^2) / D(x^2) with deg N < deg D.
struct RationalForm {
  std::vector<Real> num, den;  // low-first in u

  Real inner(Real x) const { return horner(num, x * x) / horner(den, x * x); }

  Real tail(Real t) const {
    const Real v = t * t;
    const std::size_t dd = den.size() - 1;
    Real n = 0, d = 0;
    // v^(dd-1) N(1/v) and v^dd D(1/v)
    for (std::size_t k = 0; k < dd; ++k) n = n * v + (k < num.size() ? num[k] : 0);
    for (std::size_t k = 0; k <= dd; ++k) d = d * v + den[k];
    return n / d;
  }

  Real tail_constant() const { return 0; }
};

template <class Form>
double integrate_form(const Form& form, const QuadratureSpec& q) {
  if (!(q.abs_tol > 0)) throw InvalidArgument("quadrature tolerance must be positive");
  // the line integral is twice the half-line one; each piece gets abs_tol/4
  const Real piece_tol = static_cast<Real>(q.abs_tol) / 4;
  Real half_line = 0;
  if (q.transform == HalfLineMap::kSplitReciprocal) {
    half_line = integrate([&](Real x) { return form.inner(x); }, 0, 1, piece_tol, q.max_subdivisions) +
                integrate([&](Real t) { return form.tail(t); }, 0, 1, piece_tol, q.max_subdivisions) +
                form.tail_constant();
  } else {
    auto mapped = [&](Real t) {
      const Real s = 1 - t;
      return form.inner(t / s) / (s * s);
    };
    half_line = integrate(mapped, 0, 1, 2 * piece_tol, q.max_subdivisions);
  }
  return static_cast<double>(2 * half_line / std::numbers::pi_v<Real>);
}

// sum over k = l (mod 2) of w(k) a_k a_l (-1)^((k-l)/2) u^((k+l)/2): the real
// part of W(ix) conj(A(ix)) with x^2 = u, A(z) = sum a_k z^k, W(z) = sum w(k) a_k z^k.
std::vector<BigInt> even_pair_sum(const IntPolynomial& p, const std::function<BigInt(int)>& w) {
  const int n = p.degree();
  std::vector<BigInt> out(static_cast<std::size_t>(n) + 1, 0);
  for (int k = 0; k <= n; ++k) {
    const BigInt ak = p.coeff(k);
    if (ak == 0) continue;
    for (int l = k % 2; l <= n; l += 2) {
      const BigInt al = p.coeff(l);
      if (al == 0) continue;
      const int half = (k - l) / 2;
      BigInt term = w(k) * ak * al;
      if (half % 2 != 0) term = -term;
      out[static_cast<std::size_t>((k + l) / 2)] += term;
    }
  }
  return out;
}

void check_c(const std::vector<BigInt>& c, int n) {
  if (n < 0 || 2 * static_cast<int>(c.size()) > n) {
    throw InvalidArgument("c-vector of length " + std::to_string(c.size()) + " does not fit order " +
                          std::to_string(n));
  }
  for (const BigInt& v : c) {
    if (v < 0) throw InvalidArgument("c-vector entries must be nonnegative");
  }
}

LogForm delta_form(const std::vector<BigInt>& c, bool alternate) {
  std::vector<BigInt> low{1};
  for (std::size_t j = 0; j < c.size(); ++j) low.push_back(alternate && j % 2 == 0 ? BigInt(-c[j]) : c[j]);
  return LogForm(IntPolynomial(std::move(low)), 1);
}

}  // namespace

double energy_coulson_general(const IntPolynomial& p, const QuadratureSpec& q, CoulsonForm form) {
  if (!p.is_monic()) throw InvalidArgument("Coulson integral needs a monic polynomial");
  const IntPolynomial r = p.divide_by_z_power(p.zero_root_multiplicity());
  const int n = r.degree();
  if (n == 0) return 0.0;

  // D(u) = |r(ix)|^2, u = x^2; D(0) = r(0)^2 > 0 and deg D = n with leading 1
  const std::vector<BigInt> d = even_pair_sum(r, [](int) { return BigInt(1); });

  if (form == CoulsonForm::kLogMagnitude) {
    // |x^n r(i/x)|^2 = x^{2n} D(1/x^2), i.e. the reversal of D
    return integrate_form(LogForm(IntPolynomial(std::vector<BigInt>(d.rbegin(), d.rend())), 0.5L), q);
  }

  const Spectrum sp = roots(r);
  for (const auto& z : sp.values()) {
    if (std::fabs(z.real()) <= 1e-9) {
      throw InvalidArgument("log-derivative form needs a polynomial without imaginary-axis roots");
    }
  }
  // Re[(n r(ix) - ix r'(ix)) conj(r(ix))] / |r(ix)|^2
  const std::vector<BigInt> num = even_pair_sum(r, [n](int k) { return BigInt(n - k); });
  RationalForm f;
  f.num = to_real(num);
  while (!f.num.empty() && f.num.back() == 0) f.num.pop_back();
  f.den = to_real(d);
  return integrate_form(f, q);
}

double energy_delta1(const std::vector<BigInt>& c, int n, const QuadratureSpec& q) {
  check_c(c, n);
  return integrate_form(delta_form(c, false), q);
}

double energy_delta2(const std::vector<BigInt>& c, int n, const QuadratureSpec& q) {
  check_c(c, n);
  return integrate_form(delta_form(c, true), q);
}

std::vector<BigInt> even_coefficient_magnitudes(const IntPolynomial& p) {
  std::vector<BigInt> c;
  for (int j = 2; j <= p.degree(); j += 2) c.push_back(abs(p.b(j)));
  return c;
}

QuasiOrder compare_c_vectors(const std::vector<BigInt>& c1, const std::vector<BigInt>& c2) {
  if (c1.size() != c2.size()) throw InvalidArgument("c-vectors differ in length");
  bool some_less = false, some_greater = false;
  for (std::size_t j = 0; j < c1.size(); ++j) {
    if (c1[j] < c2[j]) some_less = true;
    if (c1[j] > c2[j]) some_greater = true;
  }
  if (some_less && some_greater) return QuasiOrder::kIncomparable;
  if (some_less) return QuasiOrder::kPrecedesStrictly;
  if (some_greater) return QuasiOrder::kSucceedsStrictly;
  return QuasiOrder::kEqual;
}

namespace {

void require_delta1(const Sidigraph& s, const char* which) {
  if (!classify(s).in_delta1) throw NotInDelta1(std::string(which) + " is not in the first bipartite sign class");
}

}  // namespace

QuasiOrderResult quasi_order_compare(const Sidigraph& s1, const Sidigraph& s2) {
  require_delta1(s1, "first graph");
  require_delta1(s2, "second graph");
  if (s1.order() != s2.order()) {
    throw OrderMismatch("orders differ: " + std::to_string(s1.order()) + " vs " + std::to_string(s2.order()));
  }
  QuasiOrderResult r;
  r.c1 = even_coefficient_magnitudes(charpoly_exact(s1));
  r.c2 = even_coefficient_magnitudes(charpoly_exact(s2));
  r.relation = compare_c_vectors(r.c1, r.c2);
  return r;
}

ArcDeletionReport arc_deletion_energy_delta(const Sidigraph& s, int tail, int head) {
  require_delta1(s, "graph");
  if (!s.has_arc(tail, head) || !s.has_arc(head, tail)) {
    throw MissingArc("arcs (" + std::to_string(tail) + "," + std::to_string(head) + ") and (" +
                     std::to_string(head) + "," + std::to_string(tail) + ") are not both present");
  }
  ArcDeletionReport r;
  r.e_before = energy(s);
  r.e_after = energy(delete_arc(s, tail, head));
  r.decreased = r.e_after < r.e_before;
  return r;
}

}  // namespace sdg
