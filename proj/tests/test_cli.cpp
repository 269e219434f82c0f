#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"
#include "sdg/io.hpp"

namespace fs = std::filesystem;
using Json = nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = sdg::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch() {
  const fs::path dir = fs::temp_directory_path() / "sdg_cli_test";
  fs::create_directories(dir);
  return dir;
}

std::string write(const std::string& name, const std::string& text) {
  const fs::path p = scratch() / name;
  std::ofstream(p, std::ios::binary) << text;
  return p.string();
}

}  // namespace

TEST_CASE("analyze") {
  const Result r = run({"analyze", "fixture:thm211_s1", "--json"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["charpoly"] == Json::array({"1", "0", "-3", "2", "0"}));
  CHECK(j["energy"].get<double>() == doctest::Approx(4.0));
  CHECK(j["n"] == 4);
  CHECK(j["spectrum"].size() == 4);
  for (const char* key : {"bipartite", "strongly_connected", "symmetric", "cycle_balanced", "in_delta1", "in_delta2"}) {
    CHECK(j["flags"].contains(key));
  }
  CHECK(j["spectrum_class"]["integral"] == true);

  // heterogeneous digon
  const Result d = run({"analyze", write("digon.sdg", "sidigraph 2\n1 2 +\n2 1 -\n"), "--json"});
  REQUIRE(d.code == 0);
  CHECK(Json::parse(d.out)["energy"] == 0.0);
  CHECK(Json::parse(d.out)["flags"]["in_delta2"] == true);

  // (z^2 + 1)(z^4 - 1) from a disjoint digon and 4-cycle
  const Result u =
      run({"analyze", write("u.sdg", "sidigraph 6\n1 2 +\n2 1 -\n3 4 +\n4 5 +\n5 6 +\n6 3 +\n"), "--json", "--coulson"});
  REQUIRE(u.code == 0);
  CHECK(Json::parse(u.out)["charpoly"] == Json::array({"1", "0", "1", "0", "-1", "0", "-1"}));
  CHECK(Json::parse(u.out)["energy"].get<double>() == doctest::Approx(2.0).epsilon(1e-12));

  CHECK(run({"analyze", write("bad.sdg", "sidigraph 2\n1 1 +\n")}).code == 2);
  CHECK(run({"analyze", (scratch() / "missing.sdg").string()}).code == 2);
  CHECK(run({"analyze"}).code == 2);
}

TEST_CASE("floats carry 12 significant digits") {
  const Result r = run({"family", "theorem41_even", "--n", "6", "--j", "3", "--json"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("3.75877048314") != std::string::npos);
  CHECK(r.out.find("3.758770483143") == std::string::npos);
}

TEST_CASE("family") {
  const Result r = run({"family", "theorem41_even", "--n", "6", "--j", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("3.758770483") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);

  const Result odd = run({"family", "theorem41_odd", "--n", "9", "--j", "5", "--json"});
  REQUIRE(odd.code == 0);
  const Json j = Json::parse(odd.out);
  CHECK(j["members"][0]["charpoly"] == Json::array({"1", "0", "0", "1", "0", "1", "0", "0", "1", "0"}));
  CHECK(j["members"][1]["charpoly"] == Json::array({"1", "0", "0", "-1", "0", "-1", "0", "0", "1", "0"}));
  CHECK(j["passed"] == true);

  CHECK(run({"family", "theorem41_even", "--n", "5", "--j", "3"}).code == 2);
  CHECK(run({"family", "nonsense", "--n", "6", "--j", "3"}).code == 2);

  const fs::path dir = scratch() / "fam";
  fs::remove_all(dir);
  CHECK(run({"family", "theorem41_even", "--n", "8", "--j", "5", "--out-dir", dir.string()}).code == 0);
  CHECK(fs::exists(dir / "theorem41_even_n8_j5_s1.sdg"));
  CHECK(sdg::read_sidigraph_file(dir / "theorem41_even_n8_j5_s2.sdg").order() == 8);

  const Result p = run({"family", "power", "--k", "2", "--s1", "fixture:thm213_s1", "--s2", "fixture:thm213_s2",
                        "--json"});
  REQUIRE(p.code == 0);
  CHECK(Json::parse(p.out)["members"].size() == 2);
  CHECK(Json::parse(p.out)["members"][0]["order"] == 16);
}

TEST_CASE("check") {
  CHECK(run({"check", "theorem41"}).code == 0);
  const Result r = run({"check", "paper-values", "--json"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("2.4916") != std::string::npos);
  CHECK(run({"check", "nope"}).code == 2);
  // an unreachable agreement tolerance fails the integral rows
  CHECK(run({"check", "coulson", "--tol-energy", "1e-30"}).code == 1);
}

TEST_CASE("search, product, compare, poly, fixtures") {
  const Result s = run({"search", "--n", "2", "--target", "1 0 1", "--json"});
  REQUIRE(s.code == 0);
  CHECK(Json::parse(s.out)["count"] == 2);

  const std::string a = write("a.sdg", "sidigraph 2\n1 2 +\n2 1 +\n");
  const std::string b = write("b.sdg", "sidigraph 2\n1 2 -\n2 1 +\n");
  const std::string out = (scratch() / "prod.sdg").string();
  CHECK(run({"product", a, b, "-o", out}).code == 0);
  CHECK(sdg::read_sidigraph_file(out).order() == 4);

  const std::string c1 = write("c1.sdg", "sidigraph 4\n1 2 -\n2 3 +\n3 4 +\n4 1 +\n");
  const std::string c2 = write("c2.sdg", "sidigraph 4\n1 2 -\n2 3 +\n3 4 +\n4 1 +\n3 2 +\n");
  const Result c = run({"compare", c1, c2});
  CHECK(c.code == 0);
  CHECK(c.out.find("precedes_strictly; E: 2.8284 < 3.4641") != std::string::npos);
  CHECK(run({"compare", c1, a}).code == 2);

  const Result p = run({"poly", "1 0 2 0 0 0 1", "--json", "--coulson"});
  REQUIRE(p.code == 0);
  CHECK(Json::parse(p.out)["energy"].get<double>() == doctest::Approx(2.4916).epsilon(5e-4 / 2.4916));
  CHECK(run({"poly", "1 x"}).code == 2);

  const Result f = run({"fixtures", "--json"});
  REQUIRE(f.code == 0);
  CHECK(Json::parse(f.out).size() == 8);
  const fs::path dir = scratch() / "fx";
  CHECK(run({"fixtures", "--out-dir", dir.string()}).code == 0);
  CHECK(fs::exists(dir / "thm212_s3.sdg"));

  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
}
