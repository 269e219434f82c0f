#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sdg/polynomial.hpp"
#include "sdg/sidigraph.hpp"

namespace sdg {

/// Directed n-cycle 0 -> 1 -> ... -> n-1 -> 0; with sign = -1 the arc (0, 1)
/// is the only negative one.
Sidigraph signed_cycle(int n, int sign);

enum class FamilyKind { kTheorem41Even, kTheorem41Odd, kPowerFamily };

struct FamilySpec {
  FamilyKind kind = FamilyKind::kTheorem41Even;
  int n = 0;
  int j = 0;  // chord parameter for the two cycle families
  int k = 0;  // copy count for the power family
};

/// Throws InvalidFamilySpec unless the parameters fit the kind.
void validate_family_spec(const FamilySpec& spec);

/// The equienergetic pair on n vertices. Even n (odd 3 <= j <= n-1): an
/// n-cycle with one negative arc plus the chord v_j -> v_1; the two members
/// differ in which arc is negative, (v_1,v_2) or (v_j,v_{j+1}). Odd n >= 5
/// (odd 3 <= j <= n-2): an (n-1)-cycle with the chord v_j -> v_1 and the
/// extra 2-path v_2 -> v_n -> v_1, negative arc placed the same way.
/// Characteristic polynomials: even z^n +- z^{n-j} + 1,
/// odd z^n +- (z^{n-3} + z^{n-j}) + z.
std::pair<Sidigraph, Sidigraph> family_theorem41(const FamilySpec& spec);

/// Expected characteristic polynomials of family_theorem41(spec).
std::pair<IntPolynomial, IntPolynomial> family_theorem41_polynomials(const FamilySpec& spec);

inline constexpr int kDefaultProductOrderLimit = 4096;

/// Vertex (i, j) becomes i * n2 + j; arcs (i,j)->(k,j) carry the sign of
/// i->k in s1 and (i,j)->(i,l) the sign of j->l in s2. The adjacency matrix
/// is the Kronecker sum A1 (x) I + I (x) A2. Throws SizeOverflow when
/// n1 * n2 exceeds `order_limit`.
Sidigraph cartesian_product(const Sidigraph& s1, const Sidigraph& s2, int order_limit = kDefaultProductOrderLimit);

/// A1 (x) I + I (x) A2 computed directly from the matrices.
IntMatrix kronecker_sum(const IntMatrix& a1, const IntMatrix& a2);

/// S^(k) for k = 1..count: k copies of s1 followed by count-k copies of s2,
/// multiplied left to right.
std::vector<Sidigraph> power_family(const Sidigraph& s1, const Sidigraph& s2, int count,
                                    int order_limit = kDefaultProductOrderLimit);

enum class SignClass { kDelta1, kDelta2 };

/// A signing of d's arcs that puts it in the requested class, found by
/// solving one parity equation per directed cycle over GF(2) (free arcs stay
/// positive). Empty when d is not bipartite or the system is inconsistent.
/// Throws CycleBudgetExceeded past `cycle_cap` cycles.
std::optional<Sidigraph> assign_signs_for_class(const Sidigraph& d, SignClass target,
                                                std::size_t cycle_cap = CycleOptions{}.cap);

struct SearchConstraints {
  bool strongly_connected = false;
  bool non_cycle_balanced = false;
  std::optional<bool> bipartite;
  std::optional<bool> symmetric;
  std::optional<int> max_arcs;
  /// characteristic polynomial the underlying digraph must have
  std::optional<IntPolynomial> underlying_charpoly;
};

enum class SearchMode { kAuto, kExhaustive, kRandom };

struct SearchOptions {
  SearchMode mode = SearchMode::kAuto;  // auto: exhaustive for n <= 4
  std::size_t budget = 2'000'000;       // random mode: graphs drawn
  std::uint64_t seed = 1;
  std::size_t max_results = static_cast<std::size_t>(-1);
};

inline constexpr int kExhaustiveSearchOrderLimit = 5;

/// Sidigraphs of order n whose characteristic polynomial equals `target`
/// and which satisfy `constraints`, in canonical order. Exhaustive mode is
/// complete (n <= 5); random mode returns what it finds and throws
/// SearchBudgetExceeded if that is nothing.
std::vector<Sidigraph> search_by_charpoly(int n, const IntPolynomial& target, const SearchConstraints& constraints = {},
                                          const SearchOptions& options = {});

/// Brute-force isomorphism test (relabelings preserving arcs and signs);
/// meant for the small graphs produced by search. Throws InvalidArgument
/// above order 9.
bool is_isomorphic(const Sidigraph& s1, const Sidigraph& s2);

struct Fixture {
  std::string name;
  std::string description;
  Sidigraph graph;
  IntPolynomial charpoly;
};

/// The shipped 4-vertex fixtures thm211_s1/s2, thm212_s1..s3, thm213_s1..s3,
/// validated on every call (polynomial, strong connectivity, cycle balance,
/// symmetry). Throws FixtureValidationFailure on any mismatch.
std::map<std::string, Fixture> builtin_fixtures();

/// Text of a fixture in file format; the SDG_FIXTURES_DIR environment
/// variable, when set, points at a directory of <name>.sdg files that
/// replace the embedded copies.
std::string fixture_text(const std::string& name);

}  // namespace sdg
