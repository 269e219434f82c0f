#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "sdg/charpoly.hpp"
#include "sdg/constructions.hpp"
#include "sdg/error.hpp"
#include "sdg/io.hpp"
#include "sdg/spectra.hpp"
#include "test_util.hpp"

using namespace sdg;
using sdg::testing::random_sidigraph;
using P = IntPolynomial;

namespace {

Sidigraph digon(int sign) { return Sidigraph(2, {{0, 1, sign}, {1, 0, 1}}); }

// multiset equality of two root lists, greedy nearest matching
bool same_roots(std::vector<std::complex<double>> a, std::vector<std::complex<double>> b, double tol) {
  if (a.size() != b.size()) return false;
  for (const auto& z : a) {
    auto best = std::min_element(b.begin(), b.end(),
                                 [&](const auto& x, const auto& y) { return std::abs(x - z) < std::abs(y - z); });
    if (best == b.end() || std::abs(*best - z) > tol) return false;
    b.erase(best);
  }
  return true;
}

std::vector<std::complex<double>> values(const Spectrum& sp) {
  std::vector<std::complex<double>> out;
  for (const auto& z : sp.values()) out.emplace_back(static_cast<double>(z.real()), static_cast<double>(z.imag()));
  return out;
}

Sidigraph relabel(const Sidigraph& s, const std::vector<int>& perm) {
  std::vector<Arc> arcs;
  for (const Arc& a : s.arcs()) arcs.push_back({perm[a.tail], perm[a.head], a.sign});
  return Sidigraph(s.order(), std::move(arcs));
}

// all-positive digraph with arcs only between vertices of different parity class
Sidigraph random_bipartite_digraph(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<int> side(static_cast<std::size_t>(n));
  for (int& x : side) x = u(rng) < 0.5;
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (side[i] != side[j] && u(rng) < 0.6) arcs.push_back({i, j, 1});
  return Sidigraph(n, std::move(arcs));
}

}  // namespace

TEST_CASE("signed cycles") {
  CHECK(charpoly_exact(signed_cycle(5, 1)) == P::from_leading_first({1, 0, 0, 0, 0, -1}));
  CHECK(charpoly_exact(signed_cycle(5, -1)) == P::from_leading_first({1, 0, 0, 0, 0, 1}));
  CHECK(signed_cycle(3, -1).sign(0, 1) == -1);
  CHECK(signed_cycle(3, -1).sign(1, 2) == 1);
  CHECK_THROWS_AS(signed_cycle(1, 1), InvalidArgument);
  CHECK_THROWS_AS(signed_cycle(4, 0), InvalidArgument);
}

TEST_CASE("cycle families: polynomials, non-cospectral, equienergetic") {
  int pairs = 0;
  for (int n = 4; n <= 16; ++n) {
    const FamilyKind kind = n % 2 == 0 ? FamilyKind::kTheorem41Even : FamilyKind::kTheorem41Odd;
    const int jmax = n % 2 == 0 ? n - 1 : n - 2;
    for (int j = 3; j <= jmax; j += 2) {
      const FamilySpec spec{.kind = kind, .n = n, .j = j};
      CAPTURE(n);
      CAPTURE(j);
      const auto [s1, s2] = family_theorem41(spec);
      const auto [p1, p2] = family_theorem41_polynomials(spec);
      CHECK(charpoly_exact(s1) == p1);
      CHECK(charpoly_exact(s2) == p2);
      if (n <= 8) {
        CHECK(charpoly_minors(s1) == p1);
        CHECK(charpoly_minors(s2) == p2);
      }
      CHECK_FALSE(cospectral(s1, s2));
      CHECK(std::fabs(energy(s1) - energy(s2)) <= 1e-9);
      CHECK(equienergetic(s1, s2, 1e-9));
      CHECK(is_strongly_connected(s1));
      CHECK(underlying_digraph(s1) == underlying_digraph(s2));
      ++pairs;
    }
  }
  CHECK(pairs > 20);

  // j = 3 merges the two middle terms in the odd case
  const auto [q1, q2] = family_theorem41_polynomials({.kind = FamilyKind::kTheorem41Odd, .n = 7, .j = 3});
  CHECK(q1 == P::from_leading_first({1, 0, 0, 2, 0, 0, 1, 0}));
  CHECK(q2 == P::from_leading_first({1, 0, 0, -2, 0, 0, 1, 0}));

  const auto [e1, e2] = family_theorem41({.kind = FamilyKind::kTheorem41Even, .n = 6, .j = 3});
  CHECK(energy(e1) == doctest::Approx(energy(e2)));
  CHECK(energy(e1) == doctest::Approx(3.7588).epsilon(1e-4));
}

TEST_CASE("family spec validation") {
  using K = FamilyKind;
  CHECK_THROWS_AS(validate_family_spec({.kind = K::kTheorem41Even, .n = 5, .j = 3}), InvalidFamilySpec);
  CHECK_THROWS_AS(validate_family_spec({.kind = K::kTheorem41Even, .n = 6, .j = 4}), InvalidFamilySpec);
  CHECK_THROWS_AS(validate_family_spec({.kind = K::kTheorem41Even, .n = 6, .j = 7}), InvalidFamilySpec);
  CHECK_THROWS_AS(validate_family_spec({.kind = K::kTheorem41Even, .n = 2, .j = 1}), InvalidFamilySpec);
  CHECK_THROWS_AS(validate_family_spec({.kind = K::kTheorem41Odd, .n = 6, .j = 3}), InvalidFamilySpec);
  CHECK_THROWS_AS(validate_family_spec({.kind = K::kTheorem41Odd, .n = 7, .j = 6}), InvalidFamilySpec);
  CHECK_THROWS_AS(validate_family_spec({.kind = K::kTheorem41Odd, .n = 7, .j = 7}), InvalidFamilySpec);
  CHECK_THROWS_AS(validate_family_spec({.kind = K::kPowerFamily, .k = 0}), InvalidFamilySpec);
  CHECK_NOTHROW(validate_family_spec({.kind = K::kTheorem41Even, .n = 6, .j = 5}));
  CHECK_NOTHROW(validate_family_spec({.kind = K::kTheorem41Odd, .n = 5, .j = 3}));
  CHECK_THROWS_AS(family_theorem41({.kind = K::kPowerFamily, .k = 2}), InvalidFamilySpec);
}

TEST_CASE("cartesian product is the Kronecker sum") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const Sidigraph a = random_sidigraph(rng, 1 + trial % 3, 0.6);
    const Sidigraph b = random_sidigraph(rng, 2 + trial % 3, 0.6);
    const Sidigraph prod = cartesian_product(a, b);
    CHECK(prod.order() == a.order() * b.order());
    CHECK(adjacency_matrix(prod) == kronecker_sum(adjacency_matrix(a), adjacency_matrix(b)));
    // spectrum is every lambda + mu
    std::vector<std::complex<double>> sums;
    for (const auto& x : values(spectrum_of(a)))
      for (const auto& y : values(spectrum_of(b))) sums.push_back(x + y);
    CHECK(same_roots(values(spectrum_of(prod)), sums, 1e-6));
  }
  CHECK(same_roots(values(spectrum_of(cartesian_product(digon(1), digon(1)))), {2, 0, 0, -2}, 1e-9));
  CHECK(same_roots(values(spectrum_of(cartesian_product(digon(1), digon(-1)))),
                   {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}, 1e-9));
  CHECK_THROWS_AS(cartesian_product(signed_cycle(50, 1), signed_cycle(50, 1), 2000), SizeOverflow);
}

TEST_CASE("product is cycle-balanced iff both factors are") {
  std::mt19937_64 rng(4);
  int both = 0, not_both = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Sidigraph a = random_sidigraph(rng, 2 + trial % 2, 0.5);
    const Sidigraph b = random_sidigraph(rng, 2 + trial % 3, 0.5);
    const bool expect = is_cycle_balanced(a) && is_cycle_balanced(b);
    CHECK(is_cycle_balanced(cartesian_product(a, b)) == expect);
    (expect ? both : not_both)++;
  }
  CHECK(both > 10);
  CHECK(not_both > 10);
}

TEST_CASE("power family") {
  const Sidigraph a = digon(1), b = digon(-1);
  const std::vector<Sidigraph> fam = power_family(a, b, 3);
  REQUIRE(fam.size() == 3);
  for (const Sidigraph& g : fam) CHECK(g.order() == 8);
  CHECK(fam[2] == cartesian_product(cartesian_product(a, a), a));
  CHECK(fam[0] == cartesian_product(cartesian_product(a, b), b));
  CHECK(power_family(a, b, 1).front() == a);
  CHECK_THROWS_AS(power_family(a, b, 13), SizeOverflow);
  CHECK_THROWS_AS(power_family(a, signed_cycle(3, 1), 2), OrderMismatch);
  CHECK_THROWS_AS(power_family(a, b, 0), InvalidArgument);
}

TEST_CASE("sign assignment over GF(2)") {
  const Sidigraph c4 = underlying_digraph(signed_cycle(4, 1));
  const auto d1 = assign_signs_for_class(c4, SignClass::kDelta1);
  const auto d2 = assign_signs_for_class(c4, SignClass::kDelta2);
  REQUIRE(d1);
  REQUIRE(d2);
  CHECK(classify(*d1).in_delta1);
  CHECK(classify(*d2).in_delta2);
  CHECK(underlying_digraph(*d1) == c4);
  CHECK_FALSE(assign_signs_for_class(signed_cycle(3, 1), SignClass::kDelta1));

  std::mt19937_64 rng(12);
  int solved = 0;
  for (int trial = 0; trial < 400 && solved < 40; ++trial) {
    const Sidigraph d = random_bipartite_digraph(rng, 4 + trial % 4);
    if (!is_strongly_connected(d)) continue;
    const auto s1 = assign_signs_for_class(d, SignClass::kDelta1);
    const auto s2 = assign_signs_for_class(d, SignClass::kDelta2);
    if (!s1 || !s2) continue;
    ++solved;
    CHECK(classify(*s1).in_delta1);
    CHECK(classify(*s2).in_delta2);
    // spectra differ by a quarter turn
    std::vector<std::complex<double>> turned;
    for (const auto& z : values(spectrum_of(*s2))) turned.push_back(z * std::complex<double>(0, 1));
    CHECK(same_roots(values(spectrum_of(*s1)), turned, 1e-6));
  }
  CHECK(solved >= 10);
}

TEST_CASE("isomorphism") {
  const Sidigraph s = Sidigraph(4, {{0, 1, -1}, {1, 2, 1}, {2, 3, 1}, {3, 0, 1}, {2, 0, 1}});
  CHECK(is_isomorphic(s, relabel(s, {2, 0, 3, 1})));
  CHECK_FALSE(is_isomorphic(s, negate(s)));
  CHECK_FALSE(is_isomorphic(s, underlying_digraph(s)));
  CHECK_THROWS_AS(is_isomorphic(signed_cycle(10, 1), signed_cycle(10, 1)), InvalidArgument);
}

TEST_CASE("search by characteristic polynomial") {
  const P target = P::from_leading_first({1, 0, 0, -1});
  const auto found = search_by_charpoly(3, target);
  REQUIRE_FALSE(found.empty());
  CHECK(std::is_sorted(found.begin(), found.end()));
  CHECK(std::find(found.begin(), found.end(), signed_cycle(3, 1)) != found.end());
  for (const Sidigraph& s : found) CHECK(charpoly_exact(s) == target);

  // brute force count over all 3^6 graphs
  std::size_t want = 0;
  for (long long i = 0; i < sdg::testing::graph_count(3); ++i) {
    want += charpoly_exact(sdg::testing::sidigraph_from_index(3, i)) == target;
  }
  CHECK(found.size() == want);

  SearchConstraints c;
  c.strongly_connected = true;
  c.non_cycle_balanced = true;
  c.symmetric = false;
  c.max_arcs = 7;
  for (const Sidigraph& s : search_by_charpoly(4, P::from_leading_first({1, 0, -3, 2, 0}), c)) {
    CHECK(s.arc_count() <= 7);
    CHECK(is_strongly_connected(s));
    CHECK_FALSE(is_cycle_balanced(s));
  }

  CHECK(search_by_charpoly(3, P::from_leading_first({2, 0, 0, 1})).empty());
  CHECK(search_by_charpoly(3, P::from_leading_first({1, 1, 0, 1})).empty());
  CHECK(search_by_charpoly(4, target).empty());
  CHECK(search_by_charpoly(3, target, {}, {.max_results = 2}).size() == 2);
  CHECK_THROWS_AS(search_by_charpoly(6, P::monomial(6), {}, {.mode = SearchMode::kExhaustive}), InvalidArgument);

  const auto rnd = search_by_charpoly(5, P::from_leading_first({1, 0, 0, 0, 0, -1}), {},
                                      {.mode = SearchMode::kRandom, .budget = 200000, .seed = 3});
  CHECK_FALSE(rnd.empty());
  for (const Sidigraph& s : rnd) CHECK(charpoly_exact(s) == P::from_leading_first({1, 0, 0, 0, 0, -1}));
  CHECK_THROWS_AS(search_by_charpoly(5, P::from_leading_first({1, 0, 0, 0, 0, 100}), {},
                                     {.mode = SearchMode::kRandom, .budget = 1000}),
                  SearchBudgetExceeded);
}

TEST_CASE("shipped fixtures") {
  const auto fx = builtin_fixtures();
  REQUIRE(fx.size() == 8);
  for (const auto& [name, f] : fx) {
    CHECK(f.graph.order() == 4);
    CHECK(charpoly_exact(f.graph) == f.charpoly);
    CHECK(is_strongly_connected(f.graph));
    CHECK_FALSE(is_symmetric(f.graph));
    CHECK_FALSE(f.description.empty());
  }
  for (const auto& [n1, f1] : fx)
    for (const auto& [n2, f2] : fx)
      if (n1 < n2) CHECK_FALSE(is_isomorphic(f1.graph, f2.graph));

  const P p211 = P::from_leading_first({1, 0, -3, 2, 0});
  const P p212 = P::from_leading_first({1, 0, -3, 0, 2});
  const P und = P::from_leading_first({1, 0, -3, -2, 0});
  CHECK(fx.at("thm211_s1").charpoly == p211);
  CHECK(fx.at("thm211_s2").charpoly == p211);
  for (const char* n : {"thm212_s1", "thm212_s2", "thm212_s3"}) CHECK(fx.at(n).charpoly == p212);
  for (const char* n : {"thm211_s1", "thm211_s2", "thm212_s1", "thm212_s2"}) {
    CHECK(charpoly_exact(underlying_digraph(fx.at(n).graph)) == und);
  }
  CHECK(is_cycle_balanced(fx.at("thm213_s1").graph));
  CHECK_FALSE(is_cycle_balanced(fx.at("thm213_s2").graph));
  CHECK_FALSE(is_cycle_balanced(fx.at("thm213_s3").graph));
  CHECK(cospectral(fx.at("thm213_s1").graph, fx.at("thm213_s3").graph));

  // the two underlying digraphs are cospectral and admit non-balanced cospectral signings
  const auto q = quasi_cospectral_search(underlying_digraph(fx.at("thm211_s1").graph),
                                         underlying_digraph(fx.at("thm211_s2").graph));
  REQUIRE(q);
  CHECK(q->strong);
  CHECK_FALSE(q->strict);
  CHECK(q->exhaustive);

  // repo copies match the embedded text
  for (const auto& [name, f] : fx) {
    std::ifstream in(std::filesystem::path(SDG_SOURCE_DIR) / "fixtures" / (name + ".sdg"), std::ios::binary);
    REQUIRE(in);
    std::ostringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == fixture_text(name));
  }
  CHECK_THROWS_AS(fixture_text("nope"), InvalidArgument);
}

TEST_CASE("fixture directory override") {
  const auto dir = std::filesystem::temp_directory_path() / "sdg_fixture_override";
  std::filesystem::create_directories(dir);
  for (const auto& [name, f] : builtin_fixtures()) write_sidigraph_file(dir / (name + ".sdg"), f.graph);
  ::setenv("SDG_FIXTURES_DIR", dir.c_str(), 1);
  CHECK_NOTHROW(builtin_fixtures());

  // break one: drop an arc
  const Sidigraph g = parse_sidigraph(fixture_text("thm212_s3"));
  write_sidigraph_file(dir / "thm212_s3.sdg", delete_arc(g, g.arcs()[0].tail, g.arcs()[0].head));
  CHECK_THROWS_AS(builtin_fixtures(), FixtureValidationFailure);
  std::filesystem::remove(dir / "thm212_s3.sdg");
  CHECK_THROWS_AS(builtin_fixtures(), FixtureValidationFailure);

  ::unsetenv("SDG_FIXTURES_DIR");
  std::filesystem::remove_all(dir);
  CHECK_NOTHROW(builtin_fixtures());
}

TEST_CASE("family members are negatives of each other") {
  for (int n = 4; n <= 16; ++n) {
    const bool even = n % 2 == 0;
    for (int j = 3; j <= (even ? n - 1 : n - 2); j += 2) {
      const auto [s1, s2] =
          family_theorem41({.kind = even ? FamilyKind::kTheorem41Even : FamilyKind::kTheorem41Odd, .n = n, .j = j});
      const P p1 = charpoly_exact(s1), p2 = charpoly_exact(s2);
      // phi(-z): flip the sign of odd-degree coefficients
      std::vector<BigInt> c = p1.coeffs();
      for (std::size_t k = 1; k < c.size(); k += 2) c[k] = -c[k];
      CHECK(P(c) == (even ? p2 : -p2));
    }
  }
}

TEST_CASE("products of strongly connected graphs are strongly connected") {
  std::mt19937_64 rng(99);
  int tested = 0;
  while (tested < 120) {
    const int n1 = 2 + static_cast<int>(rng() % 4), n2 = 2 + static_cast<int>(rng() % 4);
    const Sidigraph a = random_sidigraph(rng, n1, 0.5), b = random_sidigraph(rng, n2, 0.5);
    if (!is_strongly_connected(a) || !is_strongly_connected(b)) continue;
    CHECK(is_strongly_connected(cartesian_product(a, b)));
    ++tested;
  }
}

TEST_CASE("product balance on every pair of small factors") {
  // every graph on 2 vertices against every graph on 3
  for (long long i = 0; i < sdg::testing::graph_count(2); ++i) {
    const Sidigraph a = sdg::testing::sidigraph_from_index(2, i);
    for (long long k = 0; k < sdg::testing::graph_count(3); ++k) {
      const Sidigraph b = sdg::testing::sidigraph_from_index(3, k);
      const bool expect = is_cycle_balanced(a) && is_cycle_balanced(b);
      if (is_cycle_balanced(cartesian_product(a, b)) != expect) {
        FAIL_CHECK("mismatch at " << i << ", " << k);
      }
    }
  }
}

TEST_CASE("worked examples") {
  const auto two = search_by_charpoly(2, P::from_leading_first({1, 0, 1}));
  REQUIRE(two.size() == 2);
  CHECK(two[0] == Sidigraph(2, {{0, 1, -1}, {1, 0, 1}}));
  CHECK(two[1] == Sidigraph(2, {{0, 1, 1}, {1, 0, -1}}));
  CHECK(search_by_charpoly(2, P::from_leading_first({1, 0, 5})).empty());

  const auto d = assign_signs_for_class(digon(1), SignClass::kDelta2);
  REQUIRE(d);
  CHECK(d->sign(0, 1) * d->sign(1, 0) == -1);
  const Sidigraph pair(4, {{0, 1, 1}, {1, 0, 1}, {2, 3, 1}, {3, 2, 1}});
  CHECK(assign_signs_for_class(pair, SignClass::kDelta1) == pair);

  const auto fx = builtin_fixtures();
  for (const char* base : {"thm211", "thm213"}) {
    const auto fam = power_family(fx.at(std::string(base) + "_s1").graph, fx.at(std::string(base) + "_s2").graph, 2);
    REQUIRE(fam.size() == 2);
    CHECK(fam[0].order() == 16);
    CHECK(charpoly_exact(fam[0]) == charpoly_exact(fam[1]));
  }
}
