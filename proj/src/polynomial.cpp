#include "sdg/polynomial.hpp"

#include <algorithm>
#include <utility>

#include "sdg/error.hpp"

namespace sdg {

IntPolynomial::IntPolynomial(std::vector<BigInt> low_first) : coeffs_(std::move(low_first)) { trim(); }

IntPolynomial IntPolynomial::from_leading_first(std::span<const BigInt> coeffs) {
  return IntPolynomial(std::vector<BigInt>(coeffs.rbegin(), coeffs.rend()));
}

IntPolynomial IntPolynomial::from_leading_first(std::initializer_list<long long> coeffs) {
  std::vector<BigInt> low(coeffs.size());
  std::size_t k = coeffs.size();
  for (long long c : coeffs) low[--k] = c;
  return IntPolynomial(std::move(low));
}

IntPolynomial IntPolynomial::monomial(int degree, BigInt coeff) {
  std::vector<BigInt> c(static_cast<std::size_t>(degree) + 1);
  c.back() = std::move(coeff);
  return IntPolynomial(std::move(c));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

std::vector<BigInt> IntPolynomial::leading_first() const { return {coeffs_.rbegin(), coeffs_.rend()}; }

int IntPolynomial::zero_root_multiplicity() const {
  int k = 0;
  while (k < static_cast<int>(coeffs_.size()) && coeffs_[static_cast<std::size_t>(k)] == 0) ++k;
  return k;
}

IntPolynomial IntPolynomial::divide_by_z_power(int k) const {
  if (k > zero_root_multiplicity()) throw InvalidArgument("polynomial is not divisible by z^k");
  return IntPolynomial(std::vector<BigInt>(coeffs_.begin() + k, coeffs_.end()));
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<BigInt> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long long>(k);
  return IntPolynomial(std::move(d));
}

IntPolynomial IntPolynomial::reflected() const {
  std::vector<BigInt> r = coeffs_;
  for (std::size_t k = 1; k < r.size(); k += 2) r[k] = -r[k];
  return IntPolynomial(std::move(r));
}

BigInt IntPolynomial::max_abs_coeff() const {
  BigInt m = 0;
  for (const BigInt& c : coeffs_) m = std::max(m, BigInt(abs(c)));
  return m;
}

BigInt IntPolynomial::content() const {
  BigInt g = 0;
  for (const BigInt& c : coeffs_) g = boost::multiprecision::gcd(g, c);
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return {};
  BigInt g = content();
  if (coeffs_.back() < 0) g = -g;
  std::vector<BigInt> c = coeffs_;
  for (BigInt& x : c) x /= g;
  return IntPolynomial(std::move(c));
}

std::complex<long double> IntPolynomial::evaluate(std::complex<long double> z) const {
  std::complex<long double> acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + it->convert_to<long double>();
  return acc;
}

std::complex<double> IntPolynomial::evaluate(std::complex<double> z) const {
  std::complex<double> acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + it->convert_to<double>();
  return acc;
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const BigInt& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const BigInt mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1 || k == 0) out += mag.str();
    if (k >= 1) out += "z";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

IntPolynomial IntPolynomial::operator-() const {
  std::vector<BigInt> c = coeffs_;
  for (BigInt& x : c) x = -x;
  return IntPolynomial(std::move(c));
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) c[k] += a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) c[k] += b.coeffs_[k];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) { return a + (-b); }

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const BigInt& s, const IntPolynomial& p) {
  std::vector<BigInt> c = p.coeffs_;
  for (BigInt& x : c) x *= s;
  return IntPolynomial(std::move(c));
}

bool operator<(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.coeffs_.rbegin(), a.coeffs_.rend(), b.coeffs_.rbegin(), b.coeffs_.rend());
}

IntPolynomial exact_divide(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw InvalidArgument("division by the zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw InvalidArgument("inexact polynomial division");
  std::vector<BigInt> rem = a.coeffs();
  const auto& d = b.coeffs();
  const BigInt& lead = d.back();
  std::vector<BigInt> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    BigInt& top = rem[static_cast<std::size_t>(k + b.degree())];
    if (top == 0) continue;
    BigInt r;
    BigInt quot;
    boost::multiprecision::divide_qr(top, lead, quot, r);
    if (r != 0) throw InvalidArgument("inexact polynomial division");
    for (std::size_t i = 0; i < d.size(); ++i) rem[static_cast<std::size_t>(k) + i] -= quot * d[i];
    q[static_cast<std::size_t>(k)] = std::move(quot);
  }
  if (std::any_of(rem.begin(), rem.end(), [](const BigInt& x) { return x != 0; })) {
    throw InvalidArgument("inexact polynomial division");
  }
  return IntPolynomial(std::move(q));
}

namespace {

// lc(b)^(deg a - deg b + 1) * a mod b
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> rem = a.coeffs();
  const auto& d = b.coeffs();
  const BigInt& lead = d.back();
  for (int k = a.degree(); k >= b.degree(); --k) {
    const BigInt top = rem[static_cast<std::size_t>(k)];
    for (BigInt& x : rem) x *= lead;
    const int shift = k - b.degree();
    for (std::size_t i = 0; i < d.size(); ++i) rem[static_cast<std::size_t>(shift) + i] -= top * d[i];
  }
  return IntPolynomial(std::move(rem));
}

}  // namespace

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial x = a.primitive_part();
  IntPolynomial y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPolynomial r = pseudo_remainder(x, y).primitive_part();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

std::vector<IntPolynomial> squarefree_layers(const IntPolynomial& p) {
  std::vector<IntPolynomial> layers;
  IntPolynomial f = p.primitive_part();
  while (f.degree() >= 1) {
    IntPolynomial next = gcd(f, f.derivative());
    layers.push_back(exact_divide(f, next).primitive_part());
    f = std::move(next);
  }
  return layers;
}

std::vector<IntPolynomial> multiplicity_factors(const IntPolynomial& p) {
  const std::vector<IntPolynomial> layers = squarefree_layers(p);
  std::vector<IntPolynomial> out;
  out.reserve(layers.size());
  for (std::size_t m = 0; m < layers.size(); ++m) {
    out.push_back(m + 1 < layers.size() ? exact_divide(layers[m], layers[m + 1]) : layers[m]);
  }
  return out;
}

}  // namespace sdg
