#include "sdg/constructions.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>

#include <boost/dynamic_bitset.hpp>

#include "detail/bareiss.hpp"
#include "sdg/charpoly.hpp"
#include "sdg/error.hpp"

namespace sdg {

Sidigraph signed_cycle(int n, int sign) {
  if (n < 2) throw InvalidArgument("signed_cycle needs length >= 2");
  if (sign != 1 && sign != -1) throw InvalidArgument("cycle sign must be +1 or -1");
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i) arcs.push_back({i, (i + 1) % n, i == 0 ? sign : 1});
  return Sidigraph(n, std::move(arcs));
}

void validate_family_spec(const FamilySpec& spec) {
  const auto fail = [&](const std::string& why) { throw InvalidFamilySpec(why); };
  switch (spec.kind) {
    case FamilyKind::kTheorem41Even:
      if (spec.n < 4 || spec.n % 2 != 0) fail("even family needs even n >= 4, got n = " + std::to_string(spec.n));
      if (spec.j < 3 || spec.j > spec.n - 1 || spec.j % 2 == 0) {
        fail("even family needs odd j with 3 <= j <= n-1, got j = " + std::to_string(spec.j));
      }
      break;
    case FamilyKind::kTheorem41Odd:
      if (spec.n < 5 || spec.n % 2 == 0) fail("odd family needs odd n >= 5, got n = " + std::to_string(spec.n));
      if (spec.j < 3 || spec.j > spec.n - 2 || spec.j % 2 == 0) {
        fail("odd family needs odd j with 3 <= j <= n-2, got j = " + std::to_string(spec.j));
      }
      break;
    case FamilyKind::kPowerFamily:
      if (spec.k < 1) fail("power family needs k >= 1");
      break;
  }
}

std::pair<Sidigraph, Sidigraph> family_theorem41(const FamilySpec& spec) {
  validate_family_spec(spec);
  if (spec.kind == FamilyKind::kPowerFamily) throw InvalidFamilySpec("power family is built by power_family()");
  const int n = spec.n, j = spec.j;
  // v_i is vertex i-1
  std::vector<Arc> base;
  const int cycle_len = spec.kind == FamilyKind::kTheorem41Even ? n : n - 1;
  for (int i = 1; i <= cycle_len; ++i) base.push_back({i - 1, i % cycle_len, 1});
  base.push_back({j - 1, 0, 1});
  if (spec.kind == FamilyKind::kTheorem41Odd) {
    base.push_back({1, n - 1, 1});
    base.push_back({n - 1, 0, 1});
  }
  auto with_negative = [&](int tail, int head) {
    std::vector<Arc> arcs = base;
    for (Arc& a : arcs) {
      if (a.tail == tail && a.head == head) a.sign = -1;
    }
    return Sidigraph(n, std::move(arcs));
  };
  return {with_negative(0, 1), with_negative(j - 1, j)};
}

std::pair<IntPolynomial, IntPolynomial> family_theorem41_polynomials(const FamilySpec& spec) {
  validate_family_spec(spec);
  const int n = spec.n, j = spec.j;
  using P = IntPolynomial;
  if (spec.kind == FamilyKind::kTheorem41Even) {
    return {P::monomial(n) + P::monomial(n - j) + P::monomial(0), P::monomial(n) - P::monomial(n - j) + P::monomial(0)};
  }
  if (spec.kind == FamilyKind::kTheorem41Odd) {
    const P mid = P::monomial(n - 3) + P::monomial(n - j);
    return {P::monomial(n) + mid + P::monomial(1), P::monomial(n) - mid + P::monomial(1)};
  }
  throw InvalidFamilySpec("power family has no fixed polynomial");
}

Sidigraph cartesian_product(const Sidigraph& s1, const Sidigraph& s2, int order_limit) {
  const long long n1 = s1.order(), n2 = s2.order();
  if (n1 * n2 > order_limit) {
    throw SizeOverflow("product order " + std::to_string(n1 * n2) + " exceeds limit " + std::to_string(order_limit));
  }
  const int m2 = static_cast<int>(n2);
  std::vector<Arc> arcs;
  arcs.reserve(s1.arc_count() * static_cast<std::size_t>(n2) + s2.arc_count() * static_cast<std::size_t>(n1));
  for (const Arc& a : s1.arcs()) {
    for (int j = 0; j < m2; ++j) arcs.push_back({a.tail * m2 + j, a.head * m2 + j, a.sign});
  }
  for (int i = 0; i < static_cast<int>(n1); ++i) {
    for (const Arc& b : s2.arcs()) arcs.push_back({i * m2 + b.tail, i * m2 + b.head, b.sign});
  }
  return Sidigraph(static_cast<int>(n1 * n2), std::move(arcs));
}

IntMatrix kronecker_sum(const IntMatrix& a1, const IntMatrix& a2) {
  const int n1 = a1.size(), n2 = a2.size();
  IntMatrix out(n1 * n2);
  for (int i = 0; i < n1; ++i) {
    for (int j = 0; j < n2; ++j) {
      for (int k = 0; k < n1; ++k) {
        for (int l = 0; l < n2; ++l) {
          out(i * n2 + j, k * n2 + l) = a1(i, k) * (j == l ? 1 : 0) + (i == k ? 1 : 0) * a2(j, l);
        }
      }
    }
  }
  return out;
}

std::vector<Sidigraph> power_family(const Sidigraph& s1, const Sidigraph& s2, int count, int order_limit) {
  if (s1.order() != s2.order()) throw OrderMismatch("power family factors must have equal order");
  if (count < 1) throw InvalidArgument("power family needs count >= 1");
  long long order = 1;
  for (int i = 0; i < count; ++i) {
    order *= std::max(1, s1.order());
    if (order > order_limit) {
      throw SizeOverflow("power family order exceeds limit " + std::to_string(order_limit));
    }
  }
  std::vector<Sidigraph> out;
  for (int k = 1; k <= count; ++k) {
    Sidigraph g = s1;
    for (int i = 1; i < count; ++i) g = cartesian_product(g, i < k ? s1 : s2, order_limit);
    out.push_back(std::move(g));
  }
  return out;
}

std::optional<Sidigraph> assign_signs_for_class(const Sidigraph& d, SignClass target, std::size_t cycle_cap) {
  if (!is_bipartite(d)) return std::nullopt;
  const std::size_t m = d.arc_count();
  std::map<std::pair<int, int>, std::size_t> index;
  for (std::size_t k = 0; k < m; ++k) index[{d.arcs()[k].tail, d.arcs()[k].head}] = k;

  // rows have m unknown bits plus the right-hand side in bit m; each stored
  // row's pivot is its lowest set bit
  using Row = boost::dynamic_bitset<>;
  std::map<std::size_t, Row> rows;
  for (const CycleRecord& c : enumerate_cycles(d, {.max_len = std::nullopt, .cap = cycle_cap})) {
    Row r(m + 1);
    const std::size_t len = c.vertices.size();
    for (std::size_t i = 0; i < len; ++i) r.set(index.at({c.vertices[i], c.vertices[(i + 1) % len]}));
    // odd number of negative arcs = negative cycle
    const bool negative = target == SignClass::kDelta2 || len % 4 == 0;
    r[m] = negative;
    for (auto& [pivot, row] : rows) {
      if (r[pivot]) r ^= row;
    }
    std::size_t p = r.find_first();
    if (p == m) return std::nullopt;  // 0 = 1
    if (p == Row::npos) continue;
    rows.emplace(p, std::move(r));
  }

  std::vector<int> neg(m, 0);
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
    const Row& r = it->second;
    int v = r[m] ? 1 : 0;
    for (std::size_t q = r.find_next(it->first); q != Row::npos && q < m; q = r.find_next(q)) v ^= neg[q];
    neg[it->first] = v;
  }
  std::vector<Arc> arcs(d.arcs().begin(), d.arcs().end());
  for (std::size_t k = 0; k < m; ++k) arcs[k].sign = neg[k] ? -1 : 1;
  return Sidigraph(d.order(), std::move(arcs));
}

bool is_isomorphic(const Sidigraph& s1, const Sidigraph& s2) {
  if (s1.order() != s2.order() || s1.arc_count() != s2.arc_count()) return false;
  const int n = s1.order();
  if (n > 9) throw InvalidArgument("is_isomorphic is brute force and limited to order 9");
  auto degree_profile = [n](const Sidigraph& s) {
    std::vector<std::array<int, 4>> deg(static_cast<std::size_t>(n), {0, 0, 0, 0});
    for (const Arc& a : s.arcs()) {
      ++deg[static_cast<std::size_t>(a.tail)][a.sign > 0 ? 0 : 1];
      ++deg[static_cast<std::size_t>(a.head)][a.sign > 0 ? 2 : 3];
    }
    std::sort(deg.begin(), deg.end());
    return deg;
  };
  if (degree_profile(s1) != degree_profile(s2)) return false;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (const Arc& a : s1.arcs()) {
      if (s2.sign(perm[static_cast<std::size_t>(a.tail)], perm[static_cast<std::size_t>(a.head)]) != a.sign) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

namespace {

// Constraint checks on a candidate, cheapest first.
bool satisfies(const Sidigraph& s, const SearchConstraints& c) {
  if (c.max_arcs && static_cast<int>(s.arc_count()) > *c.max_arcs) return false;
  if (c.symmetric && is_symmetric(s) != *c.symmetric) return false;
  if (c.bipartite && is_bipartite(s) != *c.bipartite) return false;
  if (c.strongly_connected && !is_strongly_connected(s)) return false;
  if (c.non_cycle_balanced && is_cycle_balanced(s)) return false;
  if (c.underlying_charpoly && charpoly_exact(underlying_digraph(s)) != *c.underlying_charpoly) return false;
  return true;
}

// Depth-first walk over unordered vertex pairs, nine sign states per pair.
// The z^{n-2} coefficient is minus the sum of digon signs, so a partial
// assignment is dropped once the remaining pairs cannot reach the target b_2;
// arc count is bounded the same way.
class ExhaustiveSearch {
 public:
  ExhaustiveSearch(int n, std::vector<long long> target, const SearchConstraints& c, std::size_t max_results)
      : n_(n), target_(std::move(target)), c_(c), max_results_(max_results), a_(n) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) pairs_.emplace_back(i, j);
    b2_target_ = target_.size() >= 3 ? target_[target_.size() - 3] : 0;
  }

  std::vector<Sidigraph> run() {
    walk(0, 0, 0);
    return std::move(found_);
  }

 private:
  void walk(std::size_t pair, long long b2, int arcs) {
    if (found_.size() >= max_results_) return;
    const long long remaining = static_cast<long long>(pairs_.size() - pair);
    if (b2 - remaining > b2_target_ || b2 + remaining < b2_target_) return;
    if (c_.max_arcs && arcs > *c_.max_arcs) return;
    if (pair == pairs_.size()) {
      leaf();
      return;
    }
    const auto [i, j] = pairs_[pair];
    static constexpr int kSigns[3] = {0, 1, -1};
    for (int x : kSigns) {
      for (int y : kSigns) {
        a_(i, j) = x;
        a_(j, i) = y;
        walk(pair + 1, b2 - x * y, arcs + (x != 0) + (y != 0));
      }
    }
    a_(i, j) = 0;
    a_(j, i) = 0;
  }

  void leaf() {
    if (detail::bareiss_charpoly<long long>(a_) != target_) return;
    std::vector<Arc> arcs;
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (a_(i, j) != 0) arcs.push_back({i, j, a_(i, j)});
    Sidigraph s(n_, std::move(arcs));
    if (satisfies(s, c_)) found_.push_back(std::move(s));
  }

  int n_;
  std::vector<long long> target_;
  const SearchConstraints& c_;
  std::size_t max_results_;
  IntMatrix a_;
  std::vector<std::pair<int, int>> pairs_;
  long long b2_target_ = 0;
  std::vector<Sidigraph> found_;
};

}  // namespace

std::vector<Sidigraph> search_by_charpoly(int n, const IntPolynomial& target, const SearchConstraints& constraints,
                                          const SearchOptions& options) {
  if (n < 1) throw InvalidArgument("search needs n >= 1");
  if (target.degree() != n || !target.is_monic() || target.b(1) != 0) return {};
  std::vector<long long> low;
  for (const BigInt& c : target.coeffs()) {
    // an n x n {0,+1,-1} matrix has every charpoly coefficient below 2^n * n^n
    if (abs(c) > BigInt(1) << 62) return {};
    low.push_back(c.convert_to<long long>());
  }

  const bool exhaustive = options.mode == SearchMode::kExhaustive || (options.mode == SearchMode::kAuto && n <= 4);
  if (exhaustive) {
    if (n > kExhaustiveSearchOrderLimit) {
      throw InvalidArgument("exhaustive search is limited to n <= " + std::to_string(kExhaustiveSearchOrderLimit));
    }
    std::vector<Sidigraph> out = ExhaustiveSearch(n, low, constraints, options.max_results).run();
    std::sort(out.begin(), out.end());
    return out;
  }

  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<int> state(0, 2);
  std::set<Sidigraph> found;
  IntMatrix a(n);
  for (std::size_t draw = 0; draw < options.budget && found.size() < options.max_results; ++draw) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = i == j ? 0 : std::array<int, 3>{0, 1, -1}[state(rng)];
    const std::vector<long long> p = n <= 10 ? detail::bareiss_charpoly<long long>(a) : std::vector<long long>{};
    if (n <= 10 ? p != low : IntPolynomial(detail::bareiss_charpoly<BigInt>(a)) != target) continue;
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (a(i, j) != 0) arcs.push_back({i, j, a(i, j)});
    Sidigraph s(n, std::move(arcs));
    if (satisfies(s, constraints)) found.insert(std::move(s));
  }
  if (found.empty()) {
    throw SearchBudgetExceeded("no match among " + std::to_string(options.budget) + " random graphs");
  }
  return {found.begin(), found.end()};
}

}  // namespace sdg
