#include "sdg/checks.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <numbers>
#include <optional>
#include <random>

#include <fmt/format.h>

#include "sdg/charpoly.hpp"
#include "sdg/constructions.hpp"
#include "sdg/coulson.hpp"
#include "sdg/error.hpp"

namespace sdg {

bool SuiteReport::passed() const {
  return std::all_of(rows.begin(), rows.end(), [](const CheckRow& r) { return r.passed; });
}

const std::vector<std::string>& check_suite_names() {
  static const std::vector<std::string> names{"oracle", "delta-forms", "coulson", "theorem41", "products",
                                              "paper-values"};
  return names;
}

namespace {

using P = IntPolynomial;
using Rng = std::mt19937_64;

Sidigraph graph_from_index(int n, long long index) {
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const int digit = static_cast<int>(index % 3);
      index /= 3;
      if (digit != 0) arcs.push_back({i, j, digit == 1 ? 1 : -1});
    }
  }
  return Sidigraph(n, std::move(arcs));
}

long long graph_count(int n) {
  long long c = 1;
  for (int k = 0; k < n * (n - 1); ++k) c *= 3;
  return c;
}

Sidigraph random_graph(Rng& rng, int n, double p, bool signed_arcs = true) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && u(rng) < p) arcs.push_back({i, j, signed_arcs && u(rng) < 0.5 ? -1 : 1});
  return Sidigraph(n, std::move(arcs));
}

// all-positive, arcs only across a random two-colouring
Sidigraph random_bipartite(Rng& rng, int n, double p) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<int> side(static_cast<std::size_t>(n));
  for (int& s : side) s = u(rng) < 0.5;
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (side[i] != side[j] && u(rng) < p) arcs.push_back({i, j, 1});
  return Sidigraph(n, std::move(arcs));
}

// A member of the requested class on 2..max_n vertices, with at least one cycle.
std::optional<Sidigraph> random_member(Rng& rng, SignClass cls, int max_n) {
  const int n = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n - 1));
  const Sidigraph d = random_bipartite(rng, n, n <= 6 ? 0.5 : 0.3);
  if (enumerate_cycles(d).empty()) return std::nullopt;
  return assign_signs_for_class(d, cls);
}

// multiset match of computed roots against expected ones
bool roots_match(const Spectrum& sp, std::vector<std::complex<double>> want, double tol, double& worst) {
  worst = 0;
  if (sp.size() != want.size()) return false;
  for (const auto& z : sp.values()) {
    auto best = std::min_element(want.begin(), want.end(), [&](const auto& x, const auto& y) {
      return std::abs(x - z) < std::abs(y - z);
    });
    worst = std::max(worst, std::abs(*best - z));
    want.erase(best);
  }
  return worst <= tol;
}

class Suite {
 public:
  Suite(std::string name, const CheckTolerances& tol, std::uint64_t seed) : tol_(tol), rng_(seed) {
    report_.suite = std::move(name);
  }

  // body returns (passed, measured)
  void row(int criterion, std::string name, const std::function<std::pair<bool, std::string>()>& body) {
    CheckRow r{std::move(name), false, {}, criterion};
    try {
      std::tie(r.passed, r.measured) = body();
    } catch (const std::exception& e) {
      r.passed = false;
      r.measured = std::string("exception: ") + e.what();
    }
    report_.rows.push_back(std::move(r));
  }

  QuadratureSpec quad() const { return {.abs_tol = tol_.quad_tol}; }

  SuiteReport finish() { return std::move(report_); }

  const CheckTolerances& tol_;
  Rng rng_;

 private:
  SuiteReport report_;
};

std::pair<bool, std::string> three_way(const std::vector<Sidigraph>& graphs) {
  std::size_t bad = 0;
  for (const Sidigraph& s : graphs) {
    const P a = charpoly_exact(s);
    if (a != charpoly_minors(s) || a != charpoly_from_linear_subs(s)) ++bad;
  }
  return {bad == 0, fmt::format("{} graphs, {} mismatches", graphs.size(), bad)};
}

void oracle_suite(Suite& s) {
  s.row(1, "three methods agree on every graph with n <= 3", [] {
    std::vector<Sidigraph> all;
    for (int n = 1; n <= 3; ++n)
      for (long long i = 0; i < graph_count(n); ++i) all.push_back(graph_from_index(n, i));
    return three_way(all);
  });
  for (int n = 4; n <= 8; ++n) {
    s.row(1, fmt::format("three methods agree on 1000 random graphs, n = {}", n), [&s, n] {
      std::uniform_real_distribution<double> density(0.15, 0.6);
      std::vector<Sidigraph> graphs;
      for (int k = 0; k < 1000; ++k) graphs.push_back(random_graph(s.rng_, n, density(s.rng_)));
      return three_way(graphs);
    });
  }
  s.row(10, "negation equivalences agree on every graph with n <= 3", [] {
    long long count = 0, bad = 0;
    for (int n = 1; n <= 3; ++n) {
      for (long long i = 0; i < graph_count(n); ++i) {
        const NegationReport r = neg_invariance_equivalences(graph_from_index(n, i));
        ++count;
        bad += !(r.spec_invariant == r.odd_coeffs_zero && r.odd_coeffs_zero == r.census_balanced);
      }
    }
    return std::pair{bad == 0, fmt::format("{} graphs, {} disagreements", count, bad)};
  });
  s.row(10, "positive strongly connected digraphs: bipartite iff negation-invariant, n <= 5", [&s] {
    int tested = 0, bad = 0, bipartite = 0;
    std::uniform_real_distribution<double> density(0.2, 0.7);
    for (int draw = 0; draw < 200000 && tested < 1000; ++draw) {
      const int n = 2 + draw % 4;
      const Sidigraph d = random_graph(s.rng_, n, density(s.rng_), false);
      if (!is_strongly_connected(d)) continue;
      ++tested;
      bipartite += is_bipartite(d);
      bad += is_bipartite(d) != neg_invariance_equivalences(d).spec_invariant;
    }
    return std::pair{bad == 0 && tested == 1000 && bipartite > 0,
                     fmt::format("{} digraphs ({} bipartite), {} violations", tested, bipartite, bad)};
  });
}

struct FamilyCase {
  FamilySpec spec;
  Sidigraph s1, s2;
  P p1, p2;
};

std::vector<FamilyCase> family_cases(int max_even, int max_odd) {
  std::vector<FamilyCase> out;
  for (int n = 4; n <= std::max(max_even, max_odd); ++n) {
    const bool even = n % 2 == 0;
    if (n > (even ? max_even : max_odd)) continue;
    for (int j = 3; j <= (even ? n - 1 : n - 2); j += 2) {
      const FamilySpec spec{.kind = even ? FamilyKind::kTheorem41Even : FamilyKind::kTheorem41Odd, .n = n, .j = j};
      auto [s1, s2] = family_theorem41(spec);
      auto [p1, p2] = family_theorem41_polynomials(spec);
      out.push_back({spec, std::move(s1), std::move(s2), std::move(p1), std::move(p2)});
    }
  }
  return out;
}

void theorem41_suite(Suite& s) {
  for (const bool even : {true, false}) {
    s.row(2, even ? "even cycle family: exact polynomials, n = 4..12" : "odd cycle family: exact polynomials, n = 5..11",
          [even] {
            int count = 0, bad = 0;
            for (const FamilyCase& c : family_cases(12, 11)) {
              if ((c.spec.kind == FamilyKind::kTheorem41Even) != even) continue;
              ++count;
              bad += charpoly_exact(c.s1) != c.p1 || charpoly_exact(c.s2) != c.p2;
            }
            return std::pair{bad == 0 && count > 0, fmt::format("{} pairs, {} mismatches", count, bad)};
          });
  }
  s.row(2, "odd family j = 3 merges to z^n +- 2z^(n-3) + z", [] {
    const auto [p1, p2] = family_theorem41_polynomials({.kind = FamilyKind::kTheorem41Odd, .n = 7, .j = 3});
    const auto [s1, s2] = family_theorem41({.kind = FamilyKind::kTheorem41Odd, .n = 7, .j = 3});
    const bool ok = p1 == P::from_leading_first({1, 0, 0, 2, 0, 0, 1, 0}) &&
                    p2 == P::from_leading_first({1, 0, 0, -2, 0, 0, 1, 0}) && charpoly_exact(s1) == p1 &&
                    charpoly_exact(s2) == p2;
    return std::pair{ok, charpoly_exact(s1).to_string() + " / " + charpoly_exact(s2).to_string()};
  });
  s.row(3, "family pairs are not cospectral", [] {
    int count = 0, bad = 0;
    for (const FamilyCase& c : family_cases(12, 11)) {
      ++count;
      bad += cospectral(c.s1, c.s2);
    }
    return std::pair{bad == 0, fmt::format("{} pairs, {} cospectral", count, bad)};
  });
  s.row(3, "family pairs are equienergetic, |E1 - E2| <= 1e-9", [] {
    double worst = 0;
    int count = 0;
    for (const FamilyCase& c : family_cases(12, 11)) {
      ++count;
      worst = std::max(worst, std::fabs(energy(c.s1) - energy(c.s2)));
    }
    return std::pair{worst <= 1e-9, fmt::format("{} pairs, max |E1 - E2| = {:.3g}", count, worst)};
  });
  s.row(0, "family members strongly connected and not cycle-balanced", [] {
    int count = 0, bad = 0;
    for (const FamilyCase& c : family_cases(12, 11)) {
      for (const Sidigraph* g : {&c.s1, &c.s2}) {
        ++count;
        bad += !is_strongly_connected(*g) || is_cycle_balanced(*g);
      }
    }
    return std::pair{bad == 0, fmt::format("{} graphs, {} failing", count, bad)};
  });
  s.row(0, "exact polynomials up to n = 16", [] {
    int count = 0, bad = 0;
    for (const FamilyCase& c : family_cases(16, 15)) {
      ++count;
      bad += charpoly_exact(c.s1) != c.p1 || charpoly_exact(c.s2) != c.p2;
    }
    return std::pair{bad == 0, fmt::format("{} pairs, {} mismatches", count, bad)};
  });
}

void paper_values_suite(Suite& s) {
  struct Target {
    std::initializer_list<long long> coeffs;
    double value, tol;
  };
  for (const Target& t : {Target{{1, 0, 2, 0, 0, 0, 1}, 2.4916, 5e-4}, Target{{1, 0, 1, 0, 0, 0, 1}, 2.9104, 5e-4},
                          Target{{1, 0, 1, 0, -1, 0, -1}, 2.0, 1e-9}}) {
    const P p = P::from_leading_first(t.coeffs);
    s.row(4, fmt::format("energy({}) = {}", p.to_string(), t.value), [p, t] {
      const double e = energy_from_spectrum(roots(p));
      return std::pair{std::fabs(e - t.value) <= t.tol, fmt::format("{:.10f} (tol {:.0e})", e, t.tol)};
    });
  }
  for (const auto& c : {std::initializer_list<long long>{1, 0, 0, 0, 0, 0, 3, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0},
                        std::initializer_list<long long>{1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0}}) {
    const P p = P::from_leading_first(c);
    s.row(4, fmt::format("roots of {} with residual <= 1e-10", p.to_string()), [p] {
      const Spectrum sp = roots(p);
      const double r = sp.max_residual();
      return std::pair{sp.size() == 17 && r <= 1e-10, fmt::format("{} roots, max residual {:.3g}", sp.size(), r)};
    });
  }

  std::map<std::string, Fixture> fx;
  s.row(5, "shipped fixtures validate", [&fx] {
    fx = builtin_fixtures();
    return std::pair{fx.size() == 8, fmt::format("{} fixtures", fx.size())};
  });
  if (fx.empty()) return;

  const double r2 = std::numbers::sqrt2;
  struct Expect {
    std::vector<std::string> names;
    std::vector<std::complex<double>> spectrum;
    bool integral, real, gaussian;
  };
  const std::vector<Expect> expect{
      {{"thm211_s1", "thm211_s2"}, {-2, 0, 1, 1}, true, true, true},
      {{"thm212_s1", "thm212_s2", "thm212_s3"}, {-1, 1, -r2, r2}, false, true, false},
      {{"thm213_s1", "thm213_s2", "thm213_s3"}, {-1, 1, {0, -1}, {0, 1}}, false, false, true},
  };
  for (const Expect& e : expect) {
    for (const std::string& name : e.names) {
      s.row(5, name + " spectrum within 1e-8", [&fx, &e, name] {
        double worst = 0;
        const bool ok = roots_match(spectrum_of(fx.at(name).graph), e.spectrum, 1e-8, worst);
        return std::pair{ok, fmt::format("{}, max deviation {:.3g}", fx.at(name).charpoly.to_string(), worst)};
      });
      s.row(5, name + " spectrum class", [&s, &fx, &e, name] {
        const SpectrumClass c = classify_spectrum(spectrum_of(fx.at(name).graph), s.tol_.class_tol);
        const bool ok = c.integral == e.integral && c.real == e.real && c.gaussian == e.gaussian;
        return std::pair{ok, fmt::format("integral={} real={} gaussian={}", c.integral, c.real, c.gaussian)};
      });
    }
  }
  s.row(5, "cycle balance flags of the z^4 - 1 fixtures", [&fx] {
    const bool b1 = is_cycle_balanced(fx.at("thm213_s1").graph), b2 = is_cycle_balanced(fx.at("thm213_s2").graph),
               b3 = is_cycle_balanced(fx.at("thm213_s3").graph);
    return std::pair{b1 && !b2 && !b3, fmt::format("s1={} s2={} s3={}", b1, b2, b3)};
  });
  s.row(0, "underlying digraphs of the z^4 - 3z^2 + 2z pair are strongly quasi-cospectral", [&fx] {
    const auto q = quasi_cospectral_search(underlying_digraph(fx.at("thm211_s1").graph),
                                           underlying_digraph(fx.at("thm211_s2").graph));
    const bool ok = q && q->strong && !q->strict;
    return std::pair{ok, q ? fmt::format("strong={} strict={} common {}", q->strong, q->strict,
                                         q->charpoly.to_string())
                           : std::string("no cospectral signings")};
  });
}

void coulson_suite(Suite& s) {
  const double r2 = std::numbers::sqrt2, r3 = std::numbers::sqrt3;
  struct Closed {
    std::initializer_list<long long> coeffs;
    double value;
  };
  for (const Closed& c : {Closed{{1, 0, -1}, 2.0}, Closed{{1, 0, 1}, 0.0}, Closed{{1, 0, 0, 0, 1}, 2 * r2},
                          Closed{{1, 0, -1, 0, 1}, 2 * r3}}) {
    const P p = P::from_leading_first(c.coeffs);
    s.row(6, fmt::format("integral for {} = {:.6f}", p.to_string(), c.value), [&s, p, c] {
      const double e = energy_coulson_general(p, s.quad());
      const double sp = energy_from_spectrum(roots(p));
      const bool ok = std::fabs(e - sp) <= s.tol_.energy_tol && std::fabs(e - c.value) <= s.tol_.energy_tol;
      return std::pair{ok, fmt::format("integral {:.10f}, root sum {:.10f}", e, sp)};
    });
  }
  s.row(6, "integral vs root sum on cycle family polynomials, n <= 12", [&s] {
    double worst = 0;
    int count = 0;
    for (const FamilyCase& c : family_cases(12, 11)) {
      for (const P* p : {&c.p1, &c.p2}) {
        ++count;
        worst = std::max(worst, std::fabs(energy_coulson_general(*p, s.quad()) - energy_from_spectrum(roots(*p))));
      }
    }
    return std::pair{worst <= s.tol_.energy_tol, fmt::format("{} polynomials, max deviation {:.3g}", count, worst)};
  });
  s.row(6, "integral vs root sum on 100 random class members, both delta integrals", [&s] {
    double worst_general = 0, worst_delta = 0;
    int members = 0;
    for (int draw = 0; draw < 20000 && members < 100; ++draw) {
      const SignClass cls = members % 2 == 0 ? SignClass::kDelta1 : SignClass::kDelta2;
      const auto m = random_member(s.rng_, cls, 10);
      if (!m) continue;
      ++members;
      const P p = charpoly_exact(*m);
      const double want = energy_from_spectrum(roots(p));
      worst_general = std::max(worst_general, std::fabs(energy_coulson_general(p, s.quad()) - want));
      const std::vector<BigInt> c = even_coefficient_magnitudes(p);
      const double d = cls == SignClass::kDelta1 ? energy_delta1(c, p.degree(), s.quad())
                                                 : energy_delta2(c, p.degree(), s.quad());
      worst_delta = std::max(worst_delta, std::fabs(d - want));
    }
    const bool ok = members == 100 && worst_general <= s.tol_.energy_tol && worst_delta <= s.tol_.energy_tol;
    return std::pair{ok, fmt::format("{} members, max deviation general {:.3g}, delta {:.3g}", members,
                                     worst_general, worst_delta)};
  });
  s.row(8, "arc addition inside the first class: strict precedence gives strictly larger energy", [&s] {
    int pairs = 0, strict = 0, bad = 0;
    for (int draw = 0; draw < 50000 && pairs < 150; ++draw) {
      const auto big = random_member(s.rng_, SignClass::kDelta1, 10);
      if (!big || big->arc_count() < 2) continue;
      const Arc a = big->arcs()[s.rng_() % big->arc_count()];
      const Sidigraph small = delete_arc(*big, a.tail, a.head);
      ++pairs;
      const QuasiOrderResult r = quasi_order_compare(small, *big);
      if (r.relation == QuasiOrder::kPrecedesStrictly) {
        ++strict;
        bad += !(energy(small) < energy(*big));
      } else if (r.relation != QuasiOrder::kEqual) {
        ++bad;  // a subgraph can never come after its supergraph
      }
    }
    return std::pair{pairs >= 100 && strict > 0 && bad == 0,
                     fmt::format("{} pairs, {} strictly ordered, {} violations", pairs, strict, bad)};
  });
  s.row(8, "deleting a digon arc inside the first class lowers energy", [&s] {
    int count = 0, bad = 0;
    for (int draw = 0; draw < 50000 && count < 60; ++draw) {
      const auto m = random_member(s.rng_, SignClass::kDelta1, 10);
      if (!m) continue;
      std::vector<Arc> digon_arcs;
      for (const Arc& a : m->arcs())
        if (m->has_arc(a.head, a.tail)) digon_arcs.push_back(a);
      if (digon_arcs.empty()) continue;
      const Arc a = digon_arcs[s.rng_() % digon_arcs.size()];
      ++count;
      bad += !arc_deletion_energy_delta(*m, a.tail, a.head).decreased;
    }
    return std::pair{count >= 50 && bad == 0, fmt::format("{} instances, {} without a decrease", count, bad)};
  });
}

void delta_forms_suite(Suite& s) {
  for (const SignClass cls : {SignClass::kDelta1, SignClass::kDelta2}) {
    const bool first = cls == SignClass::kDelta1;
    s.row(7, first ? "first class: alternating even form and c = census sizes, 200+ members"
                   : "second class: nonnegative even form and c = census sizes, 200+ members",
          [&s, cls, first] {
            int members = 0, bad = 0;
            for (int draw = 0; draw < 50000 && members < 220; ++draw) {
              const auto m = random_member(s.rng_, cls, 10);
              if (!m) continue;
              ++members;
              const DeltaClass dc = classify(*m);
              const DeltaFormReport r = verify_delta_form(*m);
              const bool ok = (first ? dc.in_delta1 && r.form1_holds : dc.in_delta2 && r.form2_holds) &&
                              r.c_values_match_census;
              bad += !ok;
            }
            return std::pair{members >= 200 && bad == 0, fmt::format("{} members, {} failing", members, bad)};
          });
  }
}

void products_suite(Suite& s) {
  std::vector<std::pair<Sidigraph, Sidigraph>> pairs;
  for (int draw = 0; draw < 200000 && pairs.size() < 120; ++draw) {
    const int n1 = 1 + static_cast<int>(s.rng_() % 8), n2 = 1 + static_cast<int>(s.rng_() % 8);
    if (n1 * n2 > 64) continue;
    Sidigraph a = random_graph(s.rng_, n1, 0.4), b = random_graph(s.rng_, n2, 0.4);
    if (is_strongly_connected(a) && is_strongly_connected(b)) pairs.emplace_back(std::move(a), std::move(b));
  }
  s.row(9, "product of strongly connected factors is strongly connected", [&pairs] {
    int bad = 0;
    for (const auto& [a, b] : pairs) bad += !is_strongly_connected(cartesian_product(a, b));
    return std::pair{pairs.size() >= 100 && bad == 0, fmt::format("{} pairs, {} failing", pairs.size(), bad)};
  });
  s.row(9, "product adjacency equals the Kronecker sum", [&pairs] {
    int bad = 0;
    for (const auto& [a, b] : pairs) {
      bad += adjacency_matrix(cartesian_product(a, b)) != kronecker_sum(adjacency_matrix(a), adjacency_matrix(b));
    }
    return std::pair{bad == 0, fmt::format("{} pairs, {} mismatches", pairs.size(), bad)};
  });
  s.row(9, "product is cycle-balanced iff both factors are (all 2 x 3 pairs)", [] {
    long long count = 0, bad = 0;
    for (long long i = 0; i < graph_count(2); ++i) {
      const Sidigraph a = graph_from_index(2, i);
      for (long long k = 0; k < graph_count(3); ++k) {
        const Sidigraph b = graph_from_index(3, k);
        ++count;
        bad += is_cycle_balanced(cartesian_product(a, b)) != (is_cycle_balanced(a) && is_cycle_balanced(b));
      }
    }
    return std::pair{bad == 0, fmt::format("{} pairs, {} mismatches", count, bad)};
  });
  const auto fx = builtin_fixtures();
  for (const char* base : {"thm211", "thm212", "thm213"}) {
    s.row(9, fmt::format("power family of the {} fixtures, count 2: order 16, cospectral", base), [&fx, base] {
      const auto fam =
          power_family(fx.at(std::string(base) + "_s1").graph, fx.at(std::string(base) + "_s2").graph, 2);
      const P p = charpoly_exact(fam.front());
      bool ok = fam.size() == 2;
      for (const Sidigraph& g : fam) ok = ok && g.order() == 16 && charpoly_exact(g) == p;
      return std::pair{ok, fmt::format("{} graphs, common charpoly {}", fam.size(), p.to_string())};
    });
  }
}

}  // namespace

SuiteReport run_check_suite(const std::string& name, const CheckTolerances& tol, std::uint64_t seed) {
  Suite s(name, tol, seed);
  if (name == "oracle") {
    oracle_suite(s);
  } else if (name == "delta-forms") {
    delta_forms_suite(s);
  } else if (name == "coulson") {
    coulson_suite(s);
  } else if (name == "theorem41") {
    theorem41_suite(s);
  } else if (name == "products") {
    products_suite(s);
  } else if (name == "paper-values") {
    paper_values_suite(s);
  } else {
    throw InvalidArgument("unknown check suite '" + name + "'");
  }
  return s.finish();
}

}  // namespace sdg
