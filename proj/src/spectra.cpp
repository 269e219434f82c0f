#include "sdg/spectra.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <random>
#include <string>

#include <Eigen/Eigenvalues>

#include "detail/fast_charpoly.hpp"
#include "sdg/charpoly.hpp"
#include "sdg/error.hpp"

namespace sdg {

namespace {

using cld = std::complex<long double>;
constexpr long double kEps = std::numeric_limits<long double>::epsilon();

std::vector<long double> to_long_double(const IntPolynomial& p) {
  std::vector<long double> c;
  c.reserve(p.coeffs().size());
  for (const BigInt& v : p.coeffs()) c.push_back(v.convert_to<long double>());
  return c;
}

// p(z), p'(z) and sum |a_k| |z|^k in one Horner pass.
struct Eval {
  cld value;
  cld deriv;
  long double scale;
};

Eval horner(const std::vector<long double>& c, cld z) {
  cld v = 0, d = 0;
  long double s = 0;
  const long double az = std::abs(z);
  for (std::size_t k = c.size(); k-- > 0;) {
    d = d * z + v;
    v = v * z + c[k];
    s = s * az + std::fabs(c[k]);
  }
  return {v, d, s};
}

// Aberth-Ehrlich iteration for a squarefree polynomial with nonzero constant
// term, Gauss-Seidel style (each correction used immediately).
std::vector<cld> aberth(const IntPolynomial& q, int max_iterations) {
  const int d = q.degree();
  const std::vector<long double> c = to_long_double(q);
  if (d == 1) return {cld(-c[0] / c[1], 0)};

  const long double radius = std::pow(std::fabs(c[0] / c[static_cast<std::size_t>(d)]), 1.0L / d);
  std::vector<cld> z(static_cast<std::size_t>(d));
  for (int k = 0; k < d; ++k) {
    const long double theta = 2 * std::numbers::pi_v<long double> * k / d + 0.7L;
    z[static_cast<std::size_t>(k)] = std::polar(radius, theta);
  }

  std::vector<char> done(z.size(), 0);
  std::size_t remaining = z.size();
  for (int iter = 0; iter < max_iterations && remaining > 0; ++iter) {
    for (std::size_t i = 0; i < z.size(); ++i) {
      if (done[i]) continue;
      const Eval e = horner(c, z[i]);
      if (std::abs(e.value) <= 4 * kEps * e.scale) {
        done[i] = 1;
        --remaining;
        continue;
      }
      const cld ratio = e.value / e.deriv;
      cld repel = 0;
      for (std::size_t j = 0; j < z.size(); ++j) {
        if (j != i) repel += 1.0L / (z[i] - z[j]);
      }
      const cld w = ratio / (1.0L - ratio * repel);
      z[i] -= w;
      if (std::abs(w) <= 2 * kEps * std::abs(z[i])) {
        done[i] = 1;
        --remaining;
      }
    }
  }
  if (remaining > 0) {
    throw ConvergenceFailure("root iteration did not converge in " + std::to_string(max_iterations) +
                             " iterations (degree " + std::to_string(d) + ")");
  }

  // a couple of Newton steps, kept only when they help
  for (cld& r : z) {
    for (int step = 0; step < 2; ++step) {
      const Eval e = horner(c, r);
      if (e.deriv == cld(0)) break;
      const cld next = r - e.value / e.deriv;
      if (std::abs(horner(c, next).value) < std::abs(e.value)) r = next;
    }
  }
  return z;
}

std::vector<cld> companion_roots(const IntPolynomial& q) {
  const int d = q.degree();
  const std::vector<long double> c = to_long_double(q);
  if (d == 1) return {cld(-c[0] / c[1], 0)};
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d, d);
  const long double lead = c[static_cast<std::size_t>(d)];
  for (int i = 1; i < d; ++i) m(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) m(i, d - 1) = static_cast<double>(-c[static_cast<std::size_t>(i)] / lead);
  Eigen::EigenSolver<Eigen::MatrixXd> solver(m, false);
  if (solver.info() != Eigen::Success) throw ConvergenceFailure("companion eigenvalue solver failed");
  std::vector<cld> out;
  for (int i = 0; i < d; ++i) {
    const std::complex<double> e = solver.eigenvalues()[i];
    out.emplace_back(e.real(), e.imag());
  }
  return out;
}

// Snap near-real roots onto the axis and make complex roots exact conjugate
// pairs; the input polynomial has real coefficients.
void symmetrise(std::vector<cld>& z) {
  std::vector<std::size_t> upper, lower;
  for (std::size_t i = 0; i < z.size(); ++i) {
    const long double tol = 1e-12L * std::max<long double>(1, std::abs(z[i]));
    if (std::fabs(z[i].imag()) <= tol) {
      z[i] = cld(z[i].real(), 0);
    } else {
      (z[i].imag() > 0 ? upper : lower).push_back(i);
    }
  }
  if (upper.size() != lower.size()) return;
  std::vector<char> used(lower.size(), 0);
  for (std::size_t u : upper) {
    std::size_t best = lower.size();
    long double best_dist = 0;
    for (std::size_t k = 0; k < lower.size(); ++k) {
      if (used[k]) continue;
      const long double dist = std::abs(std::conj(z[u]) - z[lower[k]]);
      if (best == lower.size() || dist < best_dist) {
        best = k;
        best_dist = dist;
      }
    }
    used[best] = 1;
    const cld mid = (z[u] + std::conj(z[lower[best]])) / 2.0L;
    z[u] = mid;
    z[lower[best]] = std::conj(mid);
  }
}

bool root_less(const std::complex<double>& a, const std::complex<double>& b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

}  // namespace

Spectrum::Spectrum(std::vector<std::complex<double>> values, double cluster_tol, IntPolynomial source)
    : values_(std::move(values)), cluster_tol_(cluster_tol), source_(std::move(source)) {}

std::vector<RootCluster> Spectrum::clusters() const {
  std::vector<RootCluster> out;
  for (const auto& z : values_) {
    auto it = std::find_if(out.begin(), out.end(),
                           [&](const RootCluster& c) { return std::abs(c.value - z) <= cluster_tol_; });
    if (it == out.end()) {
      out.push_back({z, 1});
    } else {
      ++it->multiplicity;
    }
  }
  return out;
}

double Spectrum::max_residual() const {
  const long double scale = source_.max_abs_coeff().convert_to<long double>();
  long double worst = 0;
  for (const auto& z : values_) {
    const cld v = source_.evaluate(cld(z.real(), z.imag()));
    worst = std::max(worst, std::abs(v) / scale);
  }
  return static_cast<double>(worst);
}

Spectrum roots(const IntPolynomial& p, const RootOptions& options) {
  if (p.degree() < 1) throw InvalidArgument("roots: polynomial degree must be at least 1");
  const int zeros = p.zero_root_multiplicity();
  const IntPolynomial rest = p.divide_by_z_power(zeros);

  std::vector<cld> found(static_cast<std::size_t>(zeros), cld(0, 0));
  if (rest.degree() >= 1) {
    const std::vector<IntPolynomial> factors = multiplicity_factors(rest);
    for (std::size_t m = 0; m < factors.size(); ++m) {
      const IntPolynomial& h = factors[m];
      if (h.degree() < 1) continue;
      std::vector<cld> r =
          options.method == RootMethod::kCompanion ? companion_roots(h) : aberth(h, options.max_iterations);
      symmetrise(r);
      for (std::size_t rep = 0; rep <= m; ++rep) found.insert(found.end(), r.begin(), r.end());
    }
  }
  if (found.size() != static_cast<std::size_t>(p.degree())) {
    throw ConvergenceFailure("root count " + std::to_string(found.size()) + " does not match degree " +
                             std::to_string(p.degree()));
  }

  const std::vector<long double> c = to_long_double(p);
  std::vector<std::complex<double>> values;
  values.reserve(found.size());
  for (const cld& z : found) {
    const std::complex<double> zd(static_cast<double>(z.real()), static_cast<double>(z.imag()));
    const Eval e = horner(c, cld(zd.real(), zd.imag()));
    if (e.scale > 0 && std::abs(e.value) > options.residual_tol * e.scale) {
      throw ConvergenceFailure("root residual above tolerance for " + p.to_string());
    }
    values.push_back(zd);
  }
  std::sort(values.begin(), values.end(), root_less);
  return Spectrum(std::move(values), options.cluster_tol, p);
}

Spectrum spectrum_of(const Sidigraph& s, const RootOptions& options) {
  return roots(charpoly_exact(s), options);
}

double energy_from_spectrum(const Spectrum& sp) {
  double e = 0;
  for (const auto& z : sp.values()) e += std::fabs(z.real());
  return e;
}

double energy(const Sidigraph& s) {
  if (s.order() == 0) return 0.0;
  return energy_from_spectrum(spectrum_of(s));
}

SpectrumClass classify_spectrum(const Spectrum& sp, double tol) {
  if (!(tol > 0)) throw InvalidArgument("classification tolerance must be positive");
  SpectrumClass sc{true, true, true, tol};
  for (const auto& z : sp.values()) {
    const bool re_int = std::fabs(z.real() - std::round(z.real())) <= tol;
    const bool im_zero = std::fabs(z.imag()) <= tol;
    const bool im_int = std::fabs(z.imag() - std::round(z.imag())) <= tol;
    sc.real = sc.real && im_zero;
    sc.integral = sc.integral && re_int && im_zero;
    sc.gaussian = sc.gaussian && re_int && im_int;
  }
  return sc;
}

namespace {

void require_same_order(const Sidigraph& s1, const Sidigraph& s2) {
  if (s1.order() != s2.order()) {
    throw OrderMismatch("orders differ: " + std::to_string(s1.order()) + " vs " + std::to_string(s2.order()));
  }
}

}  // namespace

bool cospectral(const Sidigraph& s1, const Sidigraph& s2) {
  require_same_order(s1, s2);
  return charpoly_exact(s1) == charpoly_exact(s2);
}

bool equienergetic(const Sidigraph& s1, const Sidigraph& s2, double tol) {
  require_same_order(s1, s2);
  if (cospectral(s1, s2)) return false;
  return std::fabs(energy(s1) - energy(s2)) <= tol;
}

namespace {

using Signs = std::vector<signed char>;

Sidigraph apply_signs(const Sidigraph& d, const Signs& signs) {
  std::vector<Arc> arcs(d.arcs().begin(), d.arcs().end());
  for (std::size_t k = 0; k < arcs.size(); ++k) arcs[k].sign = signs[k];
  return Sidigraph(d.order(), std::move(arcs));
}

// One digraph with all of its signings: charpoly and cycle balance per signing.
class SigningWalker {
 public:
  explicit SigningWalker(const Sidigraph& d) : d_(d), signs_(d.arc_count(), 1) {
    const std::size_t m = d.arc_count();
    if (m <= 64) {
      // arc index lookup by (tail, head); arcs are sorted
      std::map<std::pair<int, int>, std::size_t> index;
      for (std::size_t k = 0; k < m; ++k) index[{d.arcs()[k].tail, d.arcs()[k].head}] = k;
      for (const CycleRecord& c : enumerate_cycles(d)) {
        std::uint64_t mask = 0;
        const std::size_t len = c.vertices.size();
        for (std::size_t i = 0; i < len; ++i) {
          mask |= std::uint64_t{1} << index.at({c.vertices[i], c.vertices[(i + 1) % len]});
        }
        cycle_masks_.push_back(mask);
      }
      use_masks_ = true;
    }
  }

  std::size_t arc_count() const { return signs_.size(); }
  const Signs& signs() const { return signs_; }

  void set_mask(std::uint64_t neg) {
    for (std::size_t k = 0; k < signs_.size(); ++k) signs_[k] = (neg >> k) & 1 ? -1 : 1;
    neg_ = neg;
  }
  void set_random(std::mt19937_64& rng) {
    neg_ = 0;
    for (std::size_t k = 0; k < signs_.size(); ++k) {
      const bool negative = (rng() >> 33) & 1;
      signs_[k] = negative ? -1 : 1;
      if (negative && k < 64) neg_ |= std::uint64_t{1} << k;
    }
  }

  IntPolynomial charpoly() const {
    IntMatrix a(d_.order());
    for (std::size_t k = 0; k < signs_.size(); ++k) a(d_.arcs()[k].tail, d_.arcs()[k].head) = signs_[k];
    return detail::charpoly_fast(a);
  }

  bool balanced() const {
    if (!use_masks_) return is_cycle_balanced(apply_signs(d_, signs_));
    return std::none_of(cycle_masks_.begin(), cycle_masks_.end(),
                        [&](std::uint64_t c) { return std::popcount(c & neg_) % 2 == 1; });
  }

 private:
  const Sidigraph& d_;
  Signs signs_;
  std::uint64_t neg_ = 0;
  bool use_masks_ = false;
  std::vector<std::uint64_t> cycle_masks_;
};

struct Seen {
  Signs first;
  std::optional<Signs> first_unbalanced;
};

constexpr std::size_t kExhaustiveArcLimit = 20;

}  // namespace

std::optional<QuasiCospectralResult> quasi_cospectral_search(const Sidigraph& d1, const Sidigraph& d2,
                                                             std::size_t budget, std::uint64_t seed) {
  if (d1.order() != d2.order()) return std::nullopt;
  const Sidigraph u1 = underlying_digraph(d1);
  const Sidigraph u2 = underlying_digraph(d2);
  const bool base_cospectral = charpoly_exact(u1) == charpoly_exact(u2);

  SigningWalker w1(u1), w2(u2);
  const std::size_t m1 = w1.arc_count(), m2 = w2.arc_count();
  const bool exhaustive = m1 <= kExhaustiveArcLimit && m2 <= kExhaustiveArcLimit &&
                          (std::size_t{1} << m1) + (std::size_t{1} << m2) <= budget;
  std::mt19937_64 rng(seed);

  // Draw number k of a side's signings: Gray code when exhaustive (k = 0 is
  // the all-positive signing either way).
  auto draw = [&](SigningWalker& w, std::size_t k) {
    if (exhaustive || k == 0) {
      w.set_mask(k ^ (k >> 1));
    } else {
      w.set_random(rng);
    }
  };
  const std::size_t count1 = exhaustive ? std::size_t{1} << m1 : std::max<std::size_t>(1, budget / 2);
  const std::size_t count2 = exhaustive ? std::size_t{1} << m2 : std::max<std::size_t>(1, budget - count1);

  std::map<IntPolynomial, Seen> table;
  for (std::size_t k = 0; k < count1; ++k) {
    draw(w1, k);
    auto [it, inserted] = table.try_emplace(w1.charpoly(), Seen{w1.signs(), std::nullopt});
    if (base_cospectral && !it->second.first_unbalanced && !w1.balanced()) it->second.first_unbalanced = w1.signs();
  }

  std::optional<QuasiCospectralResult> result;
  for (std::size_t k = 0; k < count2; ++k) {
    draw(w2, k);
    const IntPolynomial p = w2.charpoly();
    const auto it = table.find(p);
    if (it == table.end()) continue;
    if (!result) {
      result = QuasiCospectralResult{apply_signs(u1, it->second.first), apply_signs(u2, w2.signs()), p,
                                     !base_cospectral, false, std::nullopt, exhaustive};
    }
    if (base_cospectral && it->second.first_unbalanced && !w2.balanced()) {
      result->strong = true;
      result->strong_witness.emplace(apply_signs(u1, *it->second.first_unbalanced), apply_signs(u2, w2.signs()));
    }
    if (result && (!base_cospectral || result->strong)) break;
  }
  return result;
}

}  // namespace sdg
