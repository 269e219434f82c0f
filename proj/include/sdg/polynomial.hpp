#pragma once

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sdg {

using BigInt = boost::multiprecision::cpp_int;

/// Polynomial with arbitrary-precision integer coefficients.
///
/// `coeffs()[k]` is the coefficient of z^k. The vector never carries trailing
/// zeros, so the zero polynomial has no coefficients and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> low_first);

  /// Coefficients listed from the leading term down, e.g. {1, 0, -3, 2, 0}
  /// for z^4 - 3z^2 + 2z.
  static IntPolynomial from_leading_first(std::span<const BigInt> coeffs);
  static IntPolynomial from_leading_first(std::initializer_list<long long> coeffs);
  static IntPolynomial monomial(int degree, BigInt coeff = 1);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  /// Coefficient of z^k (zero outside the stored range).
  BigInt coeff(int k) const;
  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  std::vector<BigInt> leading_first() const;

  /// b_j in z^n + b_1 z^{n-1} + ... + b_n, i.e. the coefficient of z^{degree-j}.
  BigInt b(int j) const { return coeff(degree() - j); }

  /// Number of trailing zero coefficients (multiplicity of the root 0).
  int zero_root_multiplicity() const;
  /// p(z) / z^k; requires k <= zero_root_multiplicity().
  IntPolynomial divide_by_z_power(int k) const;

  IntPolynomial derivative() const;
  /// p(-z).
  IntPolynomial reflected() const;
  BigInt max_abs_coeff() const;
  BigInt content() const;
  IntPolynomial primitive_part() const;

  std::complex<long double> evaluate(std::complex<long double> z) const;
  std::complex<double> evaluate(std::complex<double> z) const;

  /// Human-readable form, e.g. "z^4 - 3z^2 + 2z".
  std::string to_string() const;

  IntPolynomial operator-() const;
  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const BigInt& c, const IntPolynomial& p);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;
  friend bool operator<(const IntPolynomial& a, const IntPolynomial& b);

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// Exact quotient a / b over the integers; throws InvalidArgument when b does
/// not divide a in Z[z].
IntPolynomial exact_divide(const IntPolynomial& a, const IntPolynomial& b);

/// Primitive greatest common divisor with positive leading coefficient.
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

/// Squarefree chain f_0 / f_1, f_1 / f_2, ... with f_{k+1} = gcd(f_k, f_k').
/// A root of multiplicity m is a simple root of exactly the first m entries.
std::vector<IntPolynomial> squarefree_layers(const IntPolynomial& p);

/// h_1, h_2, ... where h_m is squarefree and holds exactly the roots of
/// multiplicity m (constant 1 when there are none); p = c * prod h_m^m.
std::vector<IntPolynomial> multiplicity_factors(const IntPolynomial& p);

}  // namespace sdg
