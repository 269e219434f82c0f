#pragma once

#include <cstddef>
#include <vector>

#include "sdg/sidigraph.hpp"

namespace sdg::detail {

// Dense polynomial helpers over a ring T, low-order coefficient first.
template <class T>
std::vector<T> poly_mul(const std::vector<T>& a, const std::vector<T>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<T> c(a.size() + b.size() - 1, T(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

template <class T>
void poly_trim(std::vector<T>& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// a / m for monic m; the division is exact inside Bareiss elimination.
template <class T>
std::vector<T> poly_div_monic(std::vector<T> a, const std::vector<T>& m) {
  poly_trim(a);
  if (a.empty()) return {};
  const std::size_t dm = m.size() - 1;
  if (a.size() - 1 < dm) return {};
  std::vector<T> q(a.size() - dm, T(0));
  for (std::size_t k = q.size(); k-- > 0;) {
    const T top = a[k + dm];
    q[k] = top;
    if (top == 0) continue;
    for (std::size_t i = 0; i <= dm; ++i) a[k + i] -= top * m[i];
  }
  return q;
}

// det(zI - A) by Bareiss elimination over T[z]. Every pivot is a leading
// principal minor of zI - A, hence monic and nonzero, so no pivoting is needed.
template <class T>
std::vector<T> bareiss_charpoly(const IntMatrix& a) {
  const int n = a.size();
  if (n == 0) return {T(1)};
  using Poly = std::vector<T>;
  std::vector<Poly> m(static_cast<std::size_t>(n) * n);
  auto at = [&](int i, int j) -> Poly& { return m[static_cast<std::size_t>(i) * n + j]; };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) {
        at(i, j) = {T(-a(i, j)), T(1)};
      } else if (a(i, j) != 0) {
        at(i, j) = {T(-a(i, j))};
      }
    }
  }
  Poly prev{T(1)};
  for (int k = 0; k + 1 < n; ++k) {
    const Poly& pivot = at(k, k);
    for (int i = k + 1; i < n; ++i) {
      const Poly& lik = at(i, k);
      for (int j = k + 1; j < n; ++j) {
        Poly num = poly_mul(pivot, at(i, j));
        if (!lik.empty() && !at(k, j).empty()) {
          Poly sub = poly_mul(lik, at(k, j));
          if (num.size() < sub.size()) num.resize(sub.size(), T(0));
          for (std::size_t t = 0; t < sub.size(); ++t) num[t] -= sub[t];
        }
        at(i, j) = poly_div_monic(std::move(num), prev);
      }
    }
    prev = pivot;
  }
  Poly det = at(n - 1, n - 1);
  poly_trim(det);
  return det;
}

}  // namespace sdg::detail
