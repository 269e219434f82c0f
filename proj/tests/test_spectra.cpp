#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "sdg/charpoly.hpp"
#include "sdg/error.hpp"
#include "sdg/spectra.hpp"
#include "test_util.hpp"

using namespace sdg;
using sdg::testing::directed_cycle;
using sdg::testing::random_sidigraph;
using P = IntPolynomial;
using cd = std::complex<double>;

namespace {

// Every expected root matched to a distinct computed root within tol.
bool same_multiset(std::vector<cd> got, std::vector<cd> want, double tol) {
  if (got.size() != want.size()) return false;
  std::vector<char> used(got.size(), 0);
  for (const cd& w : want) {
    bool hit = false;
    for (std::size_t i = 0; i < got.size() && !hit; ++i) {
      if (!used[i] && std::abs(got[i] - w) <= tol) used[i] = hit = true;
    }
    if (!hit) return false;
  }
  return true;
}

P linear(long long r) { return P::from_leading_first({1, -r}); }

}  // namespace

TEST_CASE("roots of small polynomials") {
  const Spectrum a = roots(P::from_leading_first({1, 0, -3, 2, 0}));
  REQUIRE(a.size() == 4);
  CHECK(same_multiset(a.values(), {-2, 0, 1, 1}, 1e-8));
  CHECK(a.values()[0].real() == doctest::Approx(-2.0));
  CHECK(a.values()[1] == cd(0, 0));
  const auto cl = a.clusters();
  REQUIRE(cl.size() == 3);
  CHECK(cl[2].multiplicity == 2);

  const Spectrum b = roots(P::from_leading_first({1, 0, 0, 0, -1}));
  CHECK(same_multiset(b.values(), {-1, 1, cd(0, -1), cd(0, 1)}, 1e-12));
  // ordered by real part, then imaginary part
  CHECK(b.values()[0].real() < -0.5);
  CHECK(b.values()[1].imag() < 0);
  CHECK(b.values()[2].imag() > 0);

  const Spectrum c = roots(P::from_leading_first({1, 0, 1}));
  CHECK(same_multiset(c.values(), {cd(0, 1), cd(0, -1)}, 1e-12));

  CHECK(roots(P::monomial(5)).values() == std::vector<cd>(5, cd(0, 0)));
  CHECK_THROWS_AS(roots(P::from_leading_first({7})), InvalidArgument);
}

TEST_CASE("roots against polynomials with known factors") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> small(-3, 3);
  for (int trial = 0; trial < 150; ++trial) {
    P p = P::from_leading_first({1});
    std::vector<cd> want;
    const int linear_count = 1 + trial % 5;
    for (int k = 0; k < linear_count; ++k) {
      const int r = small(rng);
      p = p * linear(r);
      want.emplace_back(r, 0);
    }
    // (z - a)^2 + b^2 with b != 0
    const int quad_count = trial % 3;
    for (int k = 0; k < quad_count; ++k) {
      const int re = small(rng);
      const int im = 1 + std::abs(small(rng));
      p = p * P::from_leading_first({1, -2 * re, re * re + im * im});
      want.emplace_back(re, im);
      want.emplace_back(re, -im);
    }
    const Spectrum sp = roots(p);
    CHECK(same_multiset(sp.values(), want, 1e-9));
    CHECK(sp.max_residual() <= 1e-10);
    const Spectrum comp = roots(p, {.method = RootMethod::kCompanion});
    CHECK(same_multiset(comp.values(), sp.values(), 1e-9));
  }
}

TEST_CASE("root residuals on the regression polynomials") {
  const std::vector<P> suite{
      P::from_leading_first({1, 0, -3, 2, 0}),
      P::from_leading_first({1, 0, -3, 0, 2}),
      P::from_leading_first({1, 0, 0, 0, -1}),
      P::from_leading_first({1, 0, 2, 0, 0, 0, 1}),
      P::from_leading_first({1, 0, 1, 0, 0, 0, 1}),
      P::from_leading_first({1, 0, 1, 0, -1, 0, -1}),
      P::monomial(17) + P::monomial(11, 3) + P::monomial(5),
      P::monomial(17) + P::monomial(11) + P::monomial(5),
      P::monomial(12) + P::monomial(9) + P::from_leading_first({1}),
  };
  for (const P& p : suite) {
    const Spectrum sp = roots(p);
    CAPTURE(p.to_string());
    CHECK(sp.size() == static_cast<std::size_t>(p.degree()));
    CHECK(sp.max_residual() <= 1e-10);
    // conjugate closure
    for (const cd& z : sp.values()) {
      CHECK(std::any_of(sp.values().begin(), sp.values().end(),
                        [&](const cd& w) { return std::abs(w - std::conj(z)) <= sp.cluster_tol(); }));
    }
  }
  const Spectrum r17 = roots(P::monomial(17) + P::monomial(11, 3) + P::monomial(5));
  CHECK(std::count(r17.values().begin(), r17.values().end(), cd(0, 0)) == 5);
}

TEST_CASE("energy from spectrum") {
  CHECK(energy_from_spectrum(roots(P::from_leading_first({1, 0, -3, 2, 0}))) == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(std::fabs(energy_from_spectrum(roots(P::from_leading_first({1, 0, 1, 0, -1, 0, -1}))) - 2.0) <= 1e-9);
  CHECK(std::fabs(energy_from_spectrum(roots(P::from_leading_first({1, 0, 2, 0, 0, 0, 1}))) - 2.4916) <= 5e-4);
  CHECK(std::fabs(energy_from_spectrum(roots(P::from_leading_first({1, 0, 1, 0, 0, 0, 1}))) - 2.9104) <= 5e-4);
  CHECK(std::fabs(energy_from_spectrum(roots(P::from_leading_first({1, 0, 0, 0, 1}))) - 2 * std::numbers::sqrt2) <= 1e-12);
  CHECK(std::fabs(energy_from_spectrum(roots(P::from_leading_first({1, 0, -1, 0, 1}))) - 2 * std::sqrt(3.0)) <= 1e-12);

  // z^6 + z^3 + 1: the primitive ninth roots of unity
  double ninth = 0;
  for (int k : {1, 2, 4, 5, 7, 8}) ninth += std::fabs(std::cos(2 * std::numbers::pi * k / 9));
  CHECK(std::fabs(energy_from_spectrum(roots(P::from_leading_first({1, 0, 0, 1, 0, 0, 1}))) - ninth) <= 1e-12);

  CHECK(energy(Sidigraph(4)) == 0.0);
  CHECK(energy(Sidigraph(0)) == 0.0);
  CHECK(energy(directed_cycle(4)) == doctest::Approx(2.0));
}

TEST_CASE("classify_spectrum") {
  const SpectrumClass integral = classify_spectrum(roots(P::from_leading_first({1, 0, -3, 2, 0})));
  CHECK(integral.integral);
  CHECK(integral.real);
  CHECK(integral.gaussian);
  CHECK(integral.tol == kDefaultClassTol);

  const SpectrumClass real = classify_spectrum(roots(P::from_leading_first({1, 0, -3, 0, 2})));
  CHECK(real.real);
  CHECK_FALSE(real.integral);
  CHECK_FALSE(real.gaussian);

  const SpectrumClass gaussian = classify_spectrum(roots(P::from_leading_first({1, 0, 0, 0, -1})));
  CHECK(gaussian.gaussian);
  CHECK_FALSE(gaussian.real);
  CHECK_FALSE(gaussian.integral);

  CHECK_THROWS_AS(classify_spectrum(roots(P::from_leading_first({1, 0, 1})), 0.0), InvalidArgument);

  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const SpectrumClass sc = classify_spectrum(spectrum_of(random_sidigraph(rng, 2 + trial % 5)));
    if (sc.integral) CHECK(sc.real);
    if (sc.integral) CHECK(sc.gaussian);
  }
}

TEST_CASE("cospectral and equienergetic") {
  const Sidigraph c4 = directed_cycle(4);
  CHECK(cospectral(c4, c4));
  CHECK_FALSE(equienergetic(c4, c4, 1e-9));
  CHECK_FALSE(cospectral(c4, directed_cycle(4, -1)));
  CHECK_THROWS_AS(cospectral(c4, directed_cycle(3)), OrderMismatch);
  CHECK_THROWS_AS(equienergetic(c4, directed_cycle(3), 1.0), OrderMismatch);

  // z^4 - 1 vs z^4 + 1: energies 2 and 2*sqrt(2)
  CHECK_FALSE(equienergetic(c4, directed_cycle(4, -1), 1e-6));
  // a digon plus isolated vertices vs a 4-cycle: both have energy 2
  const Sidigraph digon_pad(4, {{0, 1, 1}, {1, 0, 1}});
  CHECK(equienergetic(c4, digon_pad, 1e-9));
}

TEST_CASE("random spectra are conjugate closed with small residuals") {
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 200; ++trial) {
    const Sidigraph s = random_sidigraph(rng, 2 + trial % 8);
    const Spectrum sp = spectrum_of(s);
    CHECK(sp.size() == static_cast<std::size_t>(s.order()));
    CHECK(sp.max_residual() <= 1e-10);
    const auto cl = sp.clusters();
    for (const RootCluster& c : cl) {
      const auto partner = std::find_if(cl.begin(), cl.end(), [&](const RootCluster& d) {
        return std::abs(d.value - std::conj(c.value)) <= sp.cluster_tol();
      });
      REQUIRE(partner != cl.end());
      CHECK(partner->multiplicity == c.multiplicity);
    }
    CHECK(energy_from_spectrum(sp) >= 0.0);
  }
}

TEST_CASE("energy agrees for S and -S when the negation report holds") {
  std::mt19937_64 rng(12);
  int hits = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const Sidigraph s = random_sidigraph(rng, 2 + trial % 5, 0.4);
    if (!neg_invariance_equivalences(s).spec_invariant) continue;
    ++hits;
    CHECK(std::fabs(energy(s) - energy(negate(s))) <= 1e-9);
  }
  CHECK(hits >= 30);
}

TEST_CASE("strongly connected digraphs: bipartite iff spectrum symmetric under negation") {
  std::mt19937_64 rng(21);
  int bip = 0, nonbip = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = 2 + trial % 4;
    const Sidigraph d = underlying_digraph(random_sidigraph(rng, n, 0.45));
    if (!is_strongly_connected(d)) continue;
    const bool symmetric = neg_invariance_equivalences(d).odd_coeffs_zero;
    CHECK(is_bipartite(d) == symmetric);
    (is_bipartite(d) ? bip : nonbip) += 1;
    const Spectrum sp = spectrum_of(d);
    std::vector<cd> flipped;
    for (const cd& z : sp.values()) flipped.push_back(-z);
    CHECK(same_multiset(flipped, sp.values(), 1e-6) == symmetric);
  }
  CHECK(bip >= 10);
  CHECK(nonbip >= 10);
}

TEST_CASE("quasi_cospectral_search") {
  SUBCASE("identical digraphs match on the all-positive signing") {
    const Sidigraph d = directed_cycle(4);
    const auto r = quasi_cospectral_search(d, d);
    REQUIRE(r.has_value());
    CHECK(r->signing1 == d);
    CHECK(r->signing2 == d);
    CHECK(r->charpoly == charpoly_exact(d));
    CHECK_FALSE(r->strict);
    CHECK(r->exhaustive);
    // a negative 4-cycle matched with itself
    CHECK(r->strong);
    REQUIRE(r->strong_witness.has_value());
    CHECK_FALSE(is_cycle_balanced(r->strong_witness->first));
    CHECK_FALSE(is_cycle_balanced(r->strong_witness->second));
    CHECK(charpoly_exact(r->strong_witness->first) == charpoly_exact(r->strong_witness->second));
  }

  SUBCASE("digon against a single arc has no cospectral signings") {
    const Sidigraph digon(2, {{0, 1, 1}, {1, 0, 1}});
    CHECK_FALSE(quasi_cospectral_search(digon, Sidigraph(2, {{0, 1, 1}})).has_value());
    CHECK_FALSE(quasi_cospectral_search(digon, Sidigraph(3, {{0, 1, 1}, {1, 2, 1}})).has_value());
  }

  SUBCASE("strict witness between non-cospectral digraphs") {
    // two digons (z^4 - 2z^2 + 1) vs a 4-cycle (z^4 - 1); one negative digon
    // gives z^4 - 1
    const Sidigraph two_digons(4, {{0, 1, 1}, {1, 0, 1}, {2, 3, 1}, {3, 2, 1}});
    const Sidigraph c4 = directed_cycle(4);
    CHECK_FALSE(cospectral(two_digons, c4));
    const auto r = quasi_cospectral_search(two_digons, c4);
    REQUIRE(r.has_value());
    CHECK(r->strict);
    CHECK_FALSE(r->strong);
    CHECK(r->charpoly == P::from_leading_first({1, 0, 0, 0, -1}));
    CHECK(charpoly_exact(r->signing1) == r->charpoly);
    CHECK(r->signing2 == c4);

    CHECK_FALSE(quasi_cospectral_search(Sidigraph(3, {{0, 1, 1}, {1, 0, 1}}), directed_cycle(3)).has_value());
  }

  SUBCASE("random search mode") {
    const Sidigraph d = directed_cycle(5);
    const auto r = quasi_cospectral_search(d, d, 8, 99);
    REQUIRE(r.has_value());
    CHECK_FALSE(r->exhaustive);
    CHECK(charpoly_exact(r->signing1) == charpoly_exact(r->signing2));
  }
}
