#include "sdg/charpoly.hpp"

#include <cstdint>
#include <functional>
#include <string>

#include "detail/bareiss.hpp"
#include "sdg/error.hpp"

namespace sdg {

IntPolynomial charpoly_exact(const Sidigraph& s, int order_limit) {
  if (s.order() > order_limit) {
    throw SizeOverflow("order " + std::to_string(s.order()) + " exceeds the exact charpoly limit " +
                       std::to_string(order_limit));
  }
  return IntPolynomial(detail::bareiss_charpoly<BigInt>(adjacency_matrix(s)));
}

namespace {

// Determinant of a principal submatrix by Laplace expansion along successive
// rows, memoised on the set of columns still available. Entries are +-1/0 and
// n <= 12, so every minor fits comfortably in 64 bits.
class MinorExpander {
 public:
  explicit MinorExpander(const IntMatrix& a) : a_(a), memo_(std::size_t{1} << a.size()), stamp_(memo_.size(), 0) {}

  std::int64_t principal_minor(std::uint32_t subset) {
    ++generation_;
    rows_.clear();
    for (int v = 0; v < a_.size(); ++v) {
      if (subset & (1u << v)) rows_.push_back(v);
    }
    return expand(0, subset);
  }

 private:
  std::int64_t expand(std::size_t depth, std::uint32_t cols) {
    if (depth == rows_.size()) return 1;
    if (stamp_[cols] == generation_) return memo_[cols];
    const int row = rows_[depth];
    std::int64_t det = 0;
    int position = 0;  // index of the column among the remaining ones
    for (int c = 0; c < a_.size(); ++c) {
      if (!(cols & (1u << c))) continue;
      const int entry = a_(row, c);
      if (entry != 0) {
        const std::int64_t sub = expand(depth + 1, cols & ~(1u << c));
        det += (position % 2 == 0 ? 1 : -1) * entry * sub;
      }
      ++position;
    }
    stamp_[cols] = generation_;
    memo_[cols] = det;
    return det;
  }

  const IntMatrix& a_;
  std::vector<int> rows_;
  std::vector<std::int64_t> memo_;
  std::vector<std::uint64_t> stamp_;
  std::uint64_t generation_ = 0;
};

}  // namespace

IntPolynomial charpoly_minors(const Sidigraph& s, int order_limit) {
  const int n = s.order();
  if (n > order_limit || n > 20) {
    throw OracleBoundExceeded("order " + std::to_string(n) + " exceeds the minors oracle bound " +
                              std::to_string(std::min(order_limit, 20)));
  }
  const IntMatrix a = adjacency_matrix(s);
  MinorExpander expander(a);
  std::vector<std::int64_t> minor_sums(static_cast<std::size_t>(n) + 1, 0);
  minor_sums[0] = 1;
  for (std::uint32_t subset = 1; subset < (1u << n); ++subset) {
    minor_sums[static_cast<std::size_t>(__builtin_popcount(subset))] += expander.principal_minor(subset);
  }
  std::vector<BigInt> coeffs(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) {
    const BigInt sum = minor_sums[static_cast<std::size_t>(j)];
    coeffs[static_cast<std::size_t>(n - j)] = (j % 2 == 0) ? sum : BigInt(-sum);
  }
  return IntPolynomial(std::move(coeffs));
}

namespace {

// Visits every linear subsidigraph (optionally only those of order `target`)
// by choosing vertex-disjoint cycles in increasing census index.
class LinearSubWalker {
 public:
  using Visitor = std::function<void(const std::vector<std::size_t>&, int order, int sign)>;

  LinearSubWalker(const Sidigraph& s, const LinearSubOptions& options)
      : cycles_(enumerate_cycles(s, {.max_len = std::nullopt, .cap = options.cycle_cap})),
        cap_(options.sub_cap),
        used_(static_cast<std::size_t>(s.order()), 0) {}

  const std::vector<CycleRecord>& cycles() const noexcept { return cycles_; }

  void walk(int target, const Visitor& visit) {
    target_ = target;
    visit_ = &visit;
    visited_ = 0;
    chosen_.clear();
    descend(0, 0, 1);
  }

 private:
  void descend(std::size_t from, int order, int sign) {
    for (std::size_t k = from; k < cycles_.size(); ++k) {
      const CycleRecord& c = cycles_[k];
      const int len = static_cast<int>(c.length());
      // Cycles are sorted by length, so nothing further fits once one overshoots.
      if (target_ > 0 && order + len > target_) break;
      bool disjoint = true;
      for (int v : c.vertices) {
        if (used_[static_cast<std::size_t>(v)]) {
          disjoint = false;
          break;
        }
      }
      if (!disjoint) continue;
      for (int v : c.vertices) used_[static_cast<std::size_t>(v)] = 1;
      chosen_.push_back(k);
      const int new_order = order + len;
      const int new_sign = sign * c.sign;
      if (target_ <= 0 || new_order == target_) {
        if (++visited_ > cap_) {
          throw CycleBudgetExceeded("more than " + std::to_string(cap_) + " linear subsidigraphs");
        }
        (*visit_)(chosen_, new_order, new_sign);
      }
      if (target_ <= 0 || new_order < target_) descend(k + 1, new_order, new_sign);
      chosen_.pop_back();
      for (int v : c.vertices) used_[static_cast<std::size_t>(v)] = 0;
    }
  }

  std::vector<CycleRecord> cycles_;
  std::size_t cap_;
  std::vector<char> used_;
  std::vector<std::size_t> chosen_;
  int target_ = 0;
  const Visitor* visit_ = nullptr;
  std::size_t visited_ = 0;
};

void check_order(const Sidigraph& s, int j) {
  if (j < 1 || j > s.order()) {
    throw InvalidArgument("linear subsidigraph order " + std::to_string(j) + " outside [1," +
                          std::to_string(s.order()) + "]");
  }
}

void tally(TypeCensus& t, int components, int sign) {
  const bool odd = components % 2 == 1;
  if (odd && sign < 0) {
    ++t.count_a;
  } else if (!odd && sign > 0) {
    ++t.count_b;
  } else if (odd) {
    ++t.count_c;
  } else {
    ++t.count_d;
  }
}

// Census for every order 0..n in one enumeration pass.
std::vector<TypeCensus> census_all(const Sidigraph& s, const LinearSubOptions& options) {
  std::vector<TypeCensus> census(static_cast<std::size_t>(s.order()) + 1);
  for (int j = 0; j <= s.order(); ++j) census[static_cast<std::size_t>(j)].j = j;
  LinearSubWalker walker(s, options);
  walker.walk(0, [&](const std::vector<std::size_t>& chosen, int order, int sign) {
    tally(census[static_cast<std::size_t>(order)], static_cast<int>(chosen.size()), sign);
  });
  return census;
}

}  // namespace

IntPolynomial charpoly_from_linear_subs(const Sidigraph& s, const LinearSubOptions& options) {
  const int n = s.order();
  const auto census = census_all(s, options);
  std::vector<BigInt> coeffs(static_cast<std::size_t>(n) + 1);
  coeffs[static_cast<std::size_t>(n)] = 1;
  for (int j = 1; j <= n; ++j) {
    coeffs[static_cast<std::size_t>(n - j)] = census[static_cast<std::size_t>(j)].coefficient();
  }
  return IntPolynomial(std::move(coeffs));
}

std::vector<LinearSub> enumerate_linear_subs(const Sidigraph& s, int j, const LinearSubOptions& options) {
  check_order(s, j);
  std::vector<LinearSub> subs;
  LinearSubWalker walker(s, options);
  walker.walk(j, [&](const std::vector<std::size_t>& chosen, int order, int sign) {
    LinearSub sub;
    sub.order = order;
    sub.sign = sign;
    sub.components = static_cast<int>(chosen.size());
    for (std::size_t k : chosen) sub.cycles.push_back(walker.cycles()[k]);
    subs.push_back(std::move(sub));
  });
  return subs;
}

TypeCensus type_census(const Sidigraph& s, int j, const LinearSubOptions& options) {
  check_order(s, j);
  TypeCensus census;
  census.j = j;
  LinearSubWalker walker(s, options);
  walker.walk(j, [&](const std::vector<std::size_t>& chosen, int, int sign) {
    tally(census, static_cast<int>(chosen.size()), sign);
  });
  return census;
}

BigInt coefficient_via_theorem(const Sidigraph& s, int j, const LinearSubOptions& options) {
  BigInt b = 0;
  check_order(s, j);
  LinearSubWalker walker(s, options);
  walker.walk(j, [&](const std::vector<std::size_t>& chosen, int, int sign) {
    b += (chosen.size() % 2 == 0 ? 1 : -1) * sign;
  });
  return b;
}

NegationReport neg_invariance_equivalences(const Sidigraph& s, const LinearSubOptions& options) {
  const int n = s.order();
  const IntPolynomial p = charpoly_exact(s);
  const IntPolynomial mirrored = (n % 2 == 0) ? p.reflected() : -p.reflected();
  const auto census = census_all(s, options);

  NegationReport r;
  r.spec_invariant = (p == mirrored);
  r.odd_coeffs_zero = true;
  r.census_balanced = true;
  for (int j = 1; j <= n; j += 2) {
    if (p.b(j) != 0) r.odd_coeffs_zero = false;
    const TypeCensus& t = census[static_cast<std::size_t>(j)];
    if (t.count_a + t.count_b != t.count_c + t.count_d) r.census_balanced = false;
  }
  return r;
}

namespace {

bool has_even_form(const IntPolynomial& p, bool alternating) {
  if (!p.is_monic()) return false;
  const int n = p.degree();
  for (int k = 1; k <= n; ++k) {
    const BigInt b = p.b(k);
    if (k % 2 == 1) {
      if (b != 0) return false;
      continue;
    }
    const bool flip = alternating && (k / 2) % 2 == 1;
    if ((flip ? BigInt(-b) : b) < 0) return false;
  }
  return true;
}

}  // namespace

bool has_alternating_even_form(const IntPolynomial& p) { return has_even_form(p, true); }
bool has_nonnegative_even_form(const IntPolynomial& p) { return has_even_form(p, false); }

DeltaFormReport verify_delta_form(const Sidigraph& s, const LinearSubOptions& options) {
  const IntPolynomial p = charpoly_exact(s);
  const auto census = census_all(s, options);
  DeltaFormReport r;
  r.form1_holds = has_alternating_even_form(p);
  r.form2_holds = has_nonnegative_even_form(p);
  r.c_values_match_census = true;
  for (int j = 1; 2 * j <= s.order(); ++j) {
    BigInt c = abs(p.b(2 * j));
    if (c != census[static_cast<std::size_t>(2 * j)].total()) r.c_values_match_census = false;
    r.c.push_back(std::move(c));
  }
  return r;
}

}  // namespace sdg
