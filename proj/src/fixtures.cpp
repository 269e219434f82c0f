#include <cstdlib>
#include <initializer_list>
#include <optional>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "sdg/charpoly.hpp"
#include "sdg/constructions.hpp"
#include "sdg/error.hpp"
#include "sdg/io.hpp"

namespace sdg {

namespace {

// Found by exhaustive search over 4-vertex sidigraphs (fewest arcs, then
// fewest negative arcs, pairwise non-isomorphic underlying digraphs) and
// frozen here. fixtures/*.sdg holds the same text.
struct Embedded {
  const char* name;
  const char* description;
  std::initializer_list<long long> charpoly;
  std::optional<bool> balanced;  // nullopt: no requirement
  std::initializer_list<long long> underlying;  // empty: no requirement
  const char* text;
};

const Embedded kEmbedded[] = {
    {"thm211_s1", "non-balanced, cospectral with its partner while their underlying digraphs are cospectral too", {1, 0, -3, 2, 0}, false, {1, 0, -3, -2, 0},
     R"(# thm211_s1
# charpoly z^4 - 3z^2 + 2z
sidigraph 4
1 2 -
1 3 +
1 4 +
2 3 +
2 4 +
3 1 +
3 2 +
4 1 +
)"},
    {"thm211_s2", "non-balanced, cospectral with its partner while their underlying digraphs are cospectral too", {1, 0, -3, 2, 0}, false, {1, 0, -3, -2, 0},
     R"(# thm211_s2
# charpoly z^4 - 3z^2 + 2z
sidigraph 4
1 2 -
1 3 +
2 3 +
2 4 +
3 1 +
3 2 +
4 1 +
4 2 +
)"},
    {"thm212_s1", "non-balanced, z^4 - 3z^2 + 2, underlying digraph has z^4 - 3z^2 - 2z", {1, 0, -3, 0, 2}, false, {1, 0, -3, -2, 0},
     R"(# thm212_s1
# charpoly z^4 - 3z^2 + 2
sidigraph 4
1 2 -
1 3 +
1 4 +
2 3 +
3 1 +
3 2 +
3 4 +
4 1 +
)"},
    {"thm212_s2", "non-balanced, z^4 - 3z^2 + 2, underlying digraph has z^4 - 3z^2 - 2z", {1, 0, -3, 0, 2}, false, {1, 0, -3, -2, 0},
     R"(# thm212_s2
# charpoly z^4 - 3z^2 + 2
sidigraph 4
1 2 -
1 3 +
2 3 +
2 4 +
3 1 +
3 2 +
4 2 +
4 3 +
)"},
    {"thm212_s3", "non-balanced, z^4 - 3z^2 + 2, third member of the cospectral triple", {1, 0, -3, 0, 2}, false, {},
     R"(# thm212_s3
# charpoly z^4 - 3z^2 + 2
sidigraph 4
1 2 -
1 3 +
2 4 +
3 1 +
3 4 +
4 2 +
4 3 +
)"},
    {"thm213_s1", "cycle-balanced, z^4 - 1", {1, 0, 0, 0, -1}, true, {},
     R"(# thm213_s1
# charpoly z^4 - 1
sidigraph 4
1 2 +
2 3 +
3 4 +
4 1 +
)"},
    {"thm213_s2", "non-balanced, cospectral with the balanced 4-cycle", {1, 0, 0, 0, -1}, false, {},
     R"(# thm213_s2
# charpoly z^4 - 1
sidigraph 4
1 2 -
1 3 +
2 1 +
2 4 +
3 4 +
4 2 +
)"},
    {"thm213_s3", "non-balanced, cospectral with the balanced 4-cycle", {1, 0, 0, 0, -1}, false, {},
     R"(# thm213_s3
# charpoly z^4 - 1
sidigraph 4
1 2 -
1 3 +
2 4 +
3 2 +
3 4 +
4 1 +
)"},
};

const Embedded& lookup(const std::string& name) {
  for (const Embedded& e : kEmbedded) {
    if (name == e.name) return e;
  }
  throw InvalidArgument("unknown fixture '" + name + "'");
}

}  // namespace

std::string fixture_text(const std::string& name) {
  const Embedded& e = lookup(name);
  if (const char* dir = std::getenv("SDG_FIXTURES_DIR"); dir != nullptr && *dir != '\0') {
    const std::filesystem::path path = std::filesystem::path(dir) / (name + ".sdg");
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FixtureValidationFailure("fixture file missing: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  return e.text;
}

std::map<std::string, Fixture> builtin_fixtures() {
  std::map<std::string, Fixture> out;
  for (const Embedded& e : kEmbedded) {
    const std::string name = e.name;
    auto fail = [&](const std::string& why) { throw FixtureValidationFailure(name + ": " + why); };
    Sidigraph g;
    try {
      g = parse_sidigraph(fixture_text(name));
    } catch (const Error& err) {
      fail(err.what());
    }
    const IntPolynomial want = IntPolynomial::from_leading_first(e.charpoly);
    const IntPolynomial got = charpoly_exact(g);
    if (got != want) fail("charpoly is " + got.to_string() + ", expected " + want.to_string());
    if (!is_strongly_connected(g)) fail("not strongly connected");
    if (is_symmetric(g)) fail("symmetric");
    if (e.balanced && is_cycle_balanced(g) != *e.balanced) fail(*e.balanced ? "not cycle-balanced" : "cycle-balanced");
    if (e.underlying.size() != 0) {
      const IntPolynomial u = charpoly_exact(underlying_digraph(g));
      if (u != IntPolynomial::from_leading_first(e.underlying)) fail("underlying digraph has " + u.to_string());
    }
    out.emplace(name, Fixture{name, e.description, std::move(g), got});
  }
  return out;
}

}  // namespace sdg
