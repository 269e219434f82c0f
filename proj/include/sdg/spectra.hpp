#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "sdg/polynomial.hpp"
#include "sdg/sidigraph.hpp"

namespace sdg {

enum class RootMethod {
  kAberth,     // simultaneous iteration on each squarefree layer
  kCompanion,  // companion-matrix eigenvalues per layer; cross-check only
};

struct RootOptions {
  RootMethod method = RootMethod::kAberth;
  int max_iterations = 1000;
  double cluster_tol = 1e-8;
  double residual_tol = 1e-10;
};

struct RootCluster {
  std::complex<double> value;
  int multiplicity = 1;
};

/// Numerical spectrum of an integer polynomial, roots listed with
/// multiplicity and ordered by real part, then imaginary part.
class Spectrum {
 public:
  Spectrum(std::vector<std::complex<double>> values, double cluster_tol, IntPolynomial source);

  const std::vector<std::complex<double>>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double cluster_tol() const noexcept { return cluster_tol_; }
  const IntPolynomial& source() const noexcept { return source_; }

  /// Roots grouped within cluster_tol; multiplicities are numerical, not exact.
  std::vector<RootCluster> clusters() const;
  /// max |p(z)| / max|coeff| over the roots.
  double max_residual() const;

 private:
  std::vector<std::complex<double>> values_;
  double cluster_tol_;
  IntPolynomial source_;
};

struct SpectrumClass {
  bool integral = false;
  bool real = false;
  bool gaussian = false;
  double tol = 0.0;
};

inline constexpr double kDefaultClassTol = 1e-6;

/// All complex roots of `p` (degree >= 1). Zero roots are split off exactly;
/// the rest is reduced to squarefree layers before iterating, so repeated
/// roots come out at full precision. Throws ConvergenceFailure when the
/// iteration stalls or a residual exceeds `residual_tol`.
Spectrum roots(const IntPolynomial& p, const RootOptions& options = {});

Spectrum spectrum_of(const Sidigraph& s, const RootOptions& options = {});

/// Sum of |Re z| over the roots, with multiplicity.
double energy_from_spectrum(const Spectrum& sp);
double energy(const Sidigraph& s);

SpectrumClass classify_spectrum(const Spectrum& sp, double tol = kDefaultClassTol);

/// Exact equality of characteristic polynomials. Throws OrderMismatch.
bool cospectral(const Sidigraph& s1, const Sidigraph& s2);
/// Not cospectral and |E(s1) - E(s2)| <= tol. Throws OrderMismatch.
bool equienergetic(const Sidigraph& s1, const Sidigraph& s2, double tol);

struct QuasiCospectralResult {
  Sidigraph signing1;
  Sidigraph signing2;
  IntPolynomial charpoly;
  /// Underlying digraphs are not cospectral.
  bool strict = false;
  /// Underlying digraphs are cospectral and a pair of non-cycle-balanced
  /// cospectral signings was found (stored in strong_witness).
  bool strong = false;
  std::optional<std::pair<Sidigraph, Sidigraph>> strong_witness;
  bool exhaustive = false;
};

/// Looks for signings of the digraphs underlying d1 and d2 with equal
/// characteristic polynomials. Signings are walked in Gray-code order when
/// both arc counts are <= 20 and the 2^arcs totals fit `budget`; otherwise
/// `budget` random signings are drawn. An empty result is not a proof that
/// no pair exists unless the search was exhaustive.
std::optional<QuasiCospectralResult> quasi_cospectral_search(const Sidigraph& d1, const Sidigraph& d2,
                                                             std::size_t budget = 1u << 22,
                                                             std::uint64_t seed = 0x5eed);

}  // namespace sdg
