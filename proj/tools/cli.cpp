#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>
#include <json.hpp>

#include "sdg/charpoly.hpp"
#include "sdg/checks.hpp"
#include "sdg/constructions.hpp"
#include "sdg/coulson.hpp"
#include "sdg/error.hpp"
#include "sdg/io.hpp"
#include "sdg/spectra.hpp"

namespace sdg::cli {

namespace {

using Json = nlohmann::ordered_json;
namespace fs = std::filesystem;

struct Tolerances {
  double cls = kDefaultClassTol;
  double energy = 1e-4;
  double quad = 1e-6;
};

void add_tolerance_flags(CLI::App* cmd, Tolerances& tol) {
  cmd->add_option("--tol-class", tol.cls, "tolerance for integral/real/gaussian spectrum flags")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd->add_option("--tol-energy", tol.energy, "tolerance for energy comparisons")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd->add_option("--tol-quad", tol.quad, "absolute tolerance of the Coulson quadrature")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
}

// 12 significant digits, and no negative zero
double num(double v) {
  const double r = std::stod(fmt::format("{:.12g}", v));
  return r == 0 ? 0.0 : r;
}

std::string show(double v) {
  if (std::fabs(v) < 5e-13) v = 0;
  return fmt::format("{:.10g}", v);
}

std::string show(std::complex<double> z) {
  const double im = std::fabs(z.imag()) < 5e-13 ? 0 : z.imag();
  if (im == 0) return show(z.real());
  return fmt::format("{}{}{}i", show(z.real()), im < 0 ? "-" : "+", show(std::fabs(im)));
}

Json coeff_json(const IntPolynomial& p) {
  Json a = Json::array();
  for (const BigInt& c : p.leading_first()) a.push_back(c.str());
  return a;
}

Json spectrum_json(const Spectrum& sp) {
  Json a = Json::array();
  for (const auto& z : sp.values()) a.push_back(Json::array({num(z.real()), num(z.imag())}));
  return a;
}

std::string yes(bool b) { return b ? "yes" : "no"; }

// "fixture:NAME" or a file path
Sidigraph load_graph(const std::string& source) {
  constexpr std::string_view kPrefix = "fixture:";
  if (source.rfind(kPrefix, 0) == 0) return parse_sidigraph(fixture_text(source.substr(kPrefix.size())));
  if (!fs::exists(source)) throw InvalidArgument("no such file: " + source);
  return read_sidigraph_file(source);
}

struct Analysis {
  std::string name;
  Sidigraph graph;
  IntPolynomial charpoly;
  std::optional<Spectrum> spectrum;
  double energy = 0;
  DeltaClass cls;
  bool strongly_connected = false, symmetric = false;
  SpectrumClass spectrum_class;
};

Analysis analyze(const std::string& name, const Sidigraph& s, const Tolerances& tol) {
  Analysis a{name, s, charpoly_exact(s), std::nullopt, 0.0, {}, false, false, {}};
  if (s.order() > 0) {
    a.spectrum = roots(a.charpoly);
    a.energy = energy_from_spectrum(*a.spectrum);
    a.spectrum_class = classify_spectrum(*a.spectrum, tol.cls);
  } else {
    a.spectrum_class = {true, true, true, tol.cls};
  }
  a.cls = classify(s);
  a.strongly_connected = is_strongly_connected(s);
  a.symmetric = is_symmetric(s);
  return a;
}

Json analysis_json(const Analysis& a) {
  Json j;
  j["input_name"] = a.name;
  j["n"] = a.graph.order();
  j["arc_count"] = a.graph.arc_count();
  j["charpoly"] = coeff_json(a.charpoly);
  j["spectrum"] = a.spectrum ? spectrum_json(*a.spectrum) : Json::array();
  j["energy"] = num(a.energy);
  j["flags"] = {{"bipartite", a.cls.is_bipartite},
                {"strongly_connected", a.strongly_connected},
                {"symmetric", a.symmetric},
                {"cycle_balanced", a.cls.is_cycle_balanced},
                {"in_delta1", a.cls.in_delta1},
                {"in_delta2", a.cls.in_delta2}};
  j["spectrum_class"] = {{"integral", a.spectrum_class.integral},
                         {"real", a.spectrum_class.real},
                         {"gaussian", a.spectrum_class.gaussian}};
  return j;
}

std::string spectrum_text(const std::optional<Spectrum>& sp) {
  if (!sp) return "(empty)";
  std::string out;
  for (const auto& z : sp->values()) out += (out.empty() ? "" : ", ") + show(z);
  return out;
}

std::string class_text(const SpectrumClass& c) {
  std::string out;
  if (c.integral) out += "integral ";
  if (c.real) out += "real ";
  if (c.gaussian) out += "gaussian ";
  return out.empty() ? "none" : out.substr(0, out.size() - 1);
}

void print_analysis(std::ostream& out, const Analysis& a) {
  fmt::print(out, "input               {}\n", a.name);
  fmt::print(out, "order               {}\n", a.graph.order());
  fmt::print(out, "arcs                {}\n", a.graph.arc_count());
  fmt::print(out, "charpoly            {}\n", a.charpoly.to_string());
  fmt::print(out, "coefficients        {}\n", format_polynomial_list(a.charpoly));
  fmt::print(out, "spectrum            {}\n", spectrum_text(a.spectrum));
  fmt::print(out, "energy              {}\n", show(a.energy));
  fmt::print(out, "spectrum class      {}\n", class_text(a.spectrum_class));
  fmt::print(out, "strongly connected  {}\n", yes(a.strongly_connected));
  fmt::print(out, "bipartite           {}\n", yes(a.cls.is_bipartite));
  fmt::print(out, "symmetric           {}\n", yes(a.symmetric));
  fmt::print(out, "cycle balanced      {}\n", yes(a.cls.is_cycle_balanced));
  fmt::print(out, "in delta1           {}\n", yes(a.cls.in_delta1));
  fmt::print(out, "in delta2           {}\n", yes(a.cls.in_delta2));
}

struct SummaryRow {
  std::string name;
  bool ok;
  std::string detail;
};

void print_rows(std::ostream& out, const std::vector<SummaryRow>& rows) {
  for (const SummaryRow& r : rows) fmt::print(out, "  [{}] {}{}\n", r.ok ? "PASS" : "FAIL", r.name, r.detail.empty() ? "" : "  (" + r.detail + ")");
}

Json rows_json(const std::vector<SummaryRow>& rows) {
  Json a = Json::array();
  for (const SummaryRow& r : rows) a.push_back({{"name", r.name}, {"passed", r.ok}, {"measured", r.detail}});
  return a;
}

bool all_ok(const std::vector<SummaryRow>& rows) {
  return std::all_of(rows.begin(), rows.end(), [](const SummaryRow& r) { return r.ok; });
}

void emit_graphs(std::ostream& out, const std::optional<std::string>& out_dir,
                 const std::vector<std::pair<std::string, Sidigraph>>& graphs, Json* files) {
  for (const auto& [name, g] : graphs) {
    if (out_dir) {
      fs::create_directories(*out_dir);
      const fs::path path = fs::path(*out_dir) / (name + ".sdg");
      write_sidigraph_file(path, g, name);
      if (files) files->push_back(path.string());
      else fmt::print(out, "wrote {}\n", path.string());
    } else if (!files) {
      out << format_sidigraph(g, name) << '\n';
    }
  }
}

// ---- subcommands ----

struct AnalyzeArgs {
  std::string input;
  bool json = false, coulson = false;
  Tolerances tol;
};

int cmd_analyze(const AnalyzeArgs& a, std::ostream& out) {
  const Sidigraph s = load_graph(a.input);
  const Analysis an = analyze(a.input, s, a.tol);
  std::optional<double> integral;
  if (a.coulson && s.order() > 0) integral = energy_coulson_general(an.charpoly, {.abs_tol = a.tol.quad});
  const bool agree = !integral || std::fabs(*integral - an.energy) <= a.tol.energy;
  if (a.json) {
    Json j = analysis_json(an);
    if (integral) j["energy_coulson"] = num(*integral);
    out << j.dump(2) << '\n';
  } else {
    print_analysis(out, an);
    if (integral) fmt::print(out, "energy (integral)   {}  {}\n", show(*integral), agree ? "agrees" : "DISAGREES");
  }
  return agree ? kExitOk : kExitCheckFailed;
}

struct FamilyArgs {
  std::string kind;
  int n = 0, j = 0, k = 0;
  std::string s1, s2;
  std::optional<std::string> out_dir;
  bool json = false;
  Tolerances tol;
};

int cmd_family(const FamilyArgs& a, std::ostream& out) {
  std::vector<SummaryRow> rows;
  std::vector<std::pair<std::string, Sidigraph>> graphs;
  Json j;
  j["kind"] = a.kind;

  if (a.kind == "theorem41_even" || a.kind == "theorem41_odd") {
    const FamilySpec spec{.kind = a.kind == "theorem41_even" ? FamilyKind::kTheorem41Even : FamilyKind::kTheorem41Odd,
                          .n = a.n,
                          .j = a.j};
    const auto [s1, s2] = family_theorem41(spec);
    const auto [p1, p2] = family_theorem41_polynomials(spec);
    const IntPolynomial c1 = charpoly_exact(s1), c2 = charpoly_exact(s2);
    const double e1 = energy(s1), e2 = energy(s2);
    rows.push_back({"S1 charpoly " + p1.to_string(), c1 == p1, c1.to_string()});
    rows.push_back({"S2 charpoly " + p2.to_string(), c2 == p2, c2.to_string()});
    rows.push_back({"not cospectral", c1 != c2, ""});
    rows.push_back({"equienergetic within 1e-9", std::fabs(e1 - e2) <= 1e-9,
                    fmt::format("E(S1) = {}, E(S2) = {}", show(e1), show(e2))});
    rows.push_back({"both strongly connected", is_strongly_connected(s1) && is_strongly_connected(s2), ""});
    rows.push_back({"neither cycle-balanced", !is_cycle_balanced(s1) && !is_cycle_balanced(s2), ""});
    const std::string stem = fmt::format("{}_n{}_j{}", a.kind, a.n, a.j);
    graphs = {{stem + "_s1", s1}, {stem + "_s2", s2}};
    j["n"] = a.n;
    j["j"] = a.j;
    j["members"] = Json::array({{{"name", stem + "_s1"}, {"charpoly", coeff_json(c1)}, {"energy", num(e1)}},
                                {{"name", stem + "_s2"}, {"charpoly", coeff_json(c2)}, {"energy", num(e2)}}});
  } else if (a.kind == "power") {
    validate_family_spec({.kind = FamilyKind::kPowerFamily, .k = a.k});
    if (a.s1.empty() || a.s2.empty()) throw InvalidFamilySpec("power family needs --s1 and --s2");
    const Sidigraph g1 = load_graph(a.s1), g2 = load_graph(a.s2);
    const std::vector<Sidigraph> fam = power_family(g1, g2, a.k);
    const bool inputs_cospectral = cospectral(g1, g2);
    const IntPolynomial first = charpoly_exact(fam.front());
    bool same = true;
    Json members = Json::array();
    for (std::size_t i = 0; i < fam.size(); ++i) {
      const IntPolynomial p = i == 0 ? first : charpoly_exact(fam[i]);
      same = same && p == first;
      const std::string name = fmt::format("power_k{}_of{}", i + 1, a.k);
      graphs.emplace_back(name, fam[i]);
      members.push_back({{"name", name}, {"order", fam[i].order()}, {"charpoly", coeff_json(p)}});
    }
    rows.push_back({fmt::format("{} products of order {}", fam.size(), fam.front().order()), true, ""});
    // cospectral outputs are only promised for cospectral factors
    rows.push_back({"outputs pairwise cospectral", same || !inputs_cospectral,
                    inputs_cospectral ? (same ? "yes" : "no") : "factors not cospectral; informational"});
    j["k"] = a.k;
    j["members"] = members;
  } else {
    throw InvalidFamilySpec("unknown family kind '" + a.kind + "' (theorem41_even, theorem41_odd, power)");
  }

  if (a.json) {
    Json files = Json::array();
    emit_graphs(out, a.out_dir, graphs, &files);
    j["summary"] = rows_json(rows);
    j["passed"] = all_ok(rows);
    if (a.out_dir) j["files"] = files;
    out << j.dump(2) << '\n';
  } else {
    emit_graphs(out, a.out_dir, graphs, nullptr);
    fmt::print(out, "summary\n");
    print_rows(out, rows);
  }
  return all_ok(rows) ? kExitOk : kExitCheckFailed;
}

struct CheckArgs {
  std::string suite;
  bool json = false;
  std::uint64_t seed = 20240;
  Tolerances tol;
};

int cmd_check(const CheckArgs& a, std::ostream& out, std::ostream& err) {
  std::vector<std::string> suites;
  if (a.suite == "all") {
    suites = check_suite_names();
  } else if (std::find(check_suite_names().begin(), check_suite_names().end(), a.suite) !=
             check_suite_names().end()) {
    suites = {a.suite};
  } else {
    fmt::print(err, "unknown suite '{}'; choose one of: all", a.suite);
    for (const std::string& s : check_suite_names()) fmt::print(err, ", {}", s);
    err << '\n';
    return kExitUsage;
  }
  const CheckTolerances tol{.class_tol = a.tol.cls, .energy_tol = a.tol.energy, .quad_tol = a.tol.quad};
  bool ok = true;
  Json j = Json::array();
  for (const std::string& name : suites) {
    const SuiteReport r = run_check_suite(name, tol, a.seed);
    ok = ok && r.passed();
    if (a.json) {
      Json rows = Json::array();
      for (const CheckRow& row : r.rows) {
        rows.push_back({{"name", row.name}, {"passed", row.passed}, {"measured", row.measured}});
      }
      j.push_back({{"suite", name}, {"passed", r.passed()}, {"rows", rows}});
    } else {
      fmt::print(out, "{}: {}\n", name, r.passed() ? "PASS" : "FAIL");
      for (const CheckRow& row : r.rows) {
        fmt::print(out, "  [{}] {}\n         {}\n", row.passed ? "PASS" : "FAIL", row.name, row.measured);
      }
    }
  }
  if (a.json) out << j.dump(2) << '\n';
  return ok ? kExitOk : kExitCheckFailed;
}

struct SearchArgs {
  int n = 0;
  std::string target;
  bool strongly_connected = false, non_balanced = false;
  std::optional<bool> bipartite, symmetric;
  std::optional<int> max_arcs;
  std::optional<std::string> underlying;
  std::string mode = "auto";
  std::size_t budget = 2'000'000;
  std::uint64_t seed = 1;
  std::optional<std::size_t> limit;
  bool json = false;
};

int cmd_search(const SearchArgs& a, std::ostream& out) {
  SearchConstraints c;
  c.strongly_connected = a.strongly_connected;
  c.non_cycle_balanced = a.non_balanced;
  c.bipartite = a.bipartite;
  c.symmetric = a.symmetric;
  c.max_arcs = a.max_arcs;
  if (a.underlying) c.underlying_charpoly = parse_polynomial(*a.underlying);
  SearchOptions o;
  o.mode = a.mode == "exhaustive" ? SearchMode::kExhaustive
           : a.mode == "random"   ? SearchMode::kRandom
                                  : SearchMode::kAuto;
  o.budget = a.budget;
  o.seed = a.seed;
  if (a.limit) o.max_results = *a.limit;
  const IntPolynomial target = parse_polynomial(a.target);
  const std::vector<Sidigraph> found = search_by_charpoly(a.n, target, c, o);
  if (a.json) {
    Json results = Json::array();
    for (const Sidigraph& s : found) results.push_back(format_sidigraph(s));
    out << Json{{"n", a.n}, {"target", coeff_json(target)}, {"count", found.size()}, {"results", results}}.dump(2)
        << '\n';
  } else {
    fmt::print(out, "# {} result(s) for {}\n\n", found.size(), target.to_string());
    for (std::size_t i = 0; i < found.size(); ++i) out << format_sidigraph(found[i], fmt::format("result {}", i + 1)) << '\n';
  }
  return kExitOk;
}

int cmd_product(const std::string& a, const std::string& b, const std::optional<std::string>& output,
                std::ostream& out) {
  const Sidigraph p = cartesian_product(load_graph(a), load_graph(b));
  const std::string comment = fmt::format("product of {} and {}", a, b);
  if (output) {
    write_sidigraph_file(*output, p, comment);
    fmt::print(out, "wrote {} ({} vertices, {} arcs)\n", *output, p.order(), p.arc_count());
  } else {
    out << format_sidigraph(p, comment);
  }
  return kExitOk;
}

const char* relation_name(QuasiOrder q) {
  switch (q) {
    case QuasiOrder::kPrecedesStrictly: return "precedes_strictly";
    case QuasiOrder::kEqual: return "equal";
    case QuasiOrder::kSucceedsStrictly: return "succeeds_strictly";
    case QuasiOrder::kIncomparable: return "incomparable";
  }
  return "?";
}

int cmd_compare(const std::string& a, const std::string& b, bool json, const Tolerances& tol, std::ostream& out) {
  const Sidigraph s1 = load_graph(a), s2 = load_graph(b);
  if (s1.order() != s2.order()) throw OrderMismatch("inputs have different orders");
  const double e1 = energy(s1), e2 = energy(s2);
  const bool cosp = cospectral(s1, s2);
  const bool eq = equienergetic(s1, s2, tol.energy);
  std::optional<QuasiOrderResult> q;
  std::string why_not;
  try {
    q = quasi_order_compare(s1, s2);
  } catch (const NotInDelta1& e) {
    why_not = e.what();
  }
  if (json) {
    Json j{{"energy1", num(e1)}, {"energy2", num(e2)}, {"cospectral", cosp}, {"equienergetic", eq}};
    if (q) {
      j["relation"] = relation_name(q->relation);
      Json c1 = Json::array(), c2 = Json::array();
      for (const BigInt& v : q->c1) c1.push_back(v.str());
      for (const BigInt& v : q->c2) c2.push_back(v.str());
      j["c1"] = c1;
      j["c2"] = c2;
    } else {
      j["relation"] = nullptr;
    }
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  const char* cmp = e1 < e2 ? "<" : e1 > e2 ? ">" : "=";
  if (q) {
    fmt::print(out, "{}; E: {:.4f} {} {:.4f}\n", relation_name(q->relation), e1, cmp, e2);
    auto vec = [](const std::vector<BigInt>& v) {
      std::string s;
      for (const BigInt& x : v) s += (s.empty() ? "" : ", ") + x.str();
      return "(" + s + ")";
    };
    fmt::print(out, "c1 = {}  c2 = {}\n", vec(q->c1), vec(q->c2));
  } else {
    fmt::print(out, "quasi-order: n/a ({}); E: {:.4f} {} {:.4f}\n", why_not, e1, cmp, e2);
  }
  fmt::print(out, "cospectral {}  equienergetic {}\n", yes(cosp), yes(eq));
  return kExitOk;
}

int cmd_poly(const std::string& text, bool json, bool coulson, const Tolerances& tol, std::ostream& out) {
  const IntPolynomial p = parse_polynomial(text);
  if (p.degree() < 1) throw InvalidArgument("polynomial must have degree >= 1");
  const Spectrum sp = roots(p);
  const double e = energy_from_spectrum(sp);
  const SpectrumClass c = classify_spectrum(sp, tol.cls);
  std::optional<double> integral;
  if (coulson) integral = energy_coulson_general(p, {.abs_tol = tol.quad});
  const bool agree = !integral || std::fabs(*integral - e) <= tol.energy;
  if (json) {
    Json j{{"polynomial", coeff_json(p)},
           {"degree", p.degree()},
           {"spectrum", spectrum_json(sp)},
           {"energy", num(e)},
           {"max_residual", num(sp.max_residual())},
           {"spectrum_class", {{"integral", c.integral}, {"real", c.real}, {"gaussian", c.gaussian}}},
           {"alternating_even_form", has_alternating_even_form(p)},
           {"nonnegative_even_form", has_nonnegative_even_form(p)}};
    if (integral) j["energy_coulson"] = num(*integral);
    out << j.dump(2) << '\n';
  } else {
    fmt::print(out, "polynomial          {}\n", p.to_string());
    fmt::print(out, "roots               {}\n", spectrum_text(sp));
    fmt::print(out, "max residual        {:.3g}\n", sp.max_residual());
    fmt::print(out, "energy              {}\n", show(e));
    fmt::print(out, "spectrum class      {}\n", class_text(c));
    fmt::print(out, "alternating even    {}\n", yes(has_alternating_even_form(p)));
    fmt::print(out, "nonnegative even    {}\n", yes(has_nonnegative_even_form(p)));
    if (integral) fmt::print(out, "energy (integral)   {}  {}\n", show(*integral), agree ? "agrees" : "DISAGREES");
  }
  return agree ? kExitOk : kExitCheckFailed;
}

int cmd_fixtures(const std::optional<std::string>& out_dir, bool json, std::ostream& out) {
  const auto fx = builtin_fixtures();
  Json j = Json::array();
  for (const auto& [name, f] : fx) {
    if (out_dir) {
      fs::create_directories(*out_dir);
      std::ofstream file(fs::path(*out_dir) / (name + ".sdg"), std::ios::binary);
      file << fixture_text(name);
      if (!file) throw InvalidArgument("cannot write fixture " + name);
    }
    if (json) {
      j.push_back({{"name", name}, {"description", f.description}, {"charpoly", coeff_json(f.charpoly)},
                   {"arc_count", f.graph.arc_count()}});
    } else {
      fmt::print(out, "{:<10} {:<22} {:>2} arcs  {}\n", name, f.charpoly.to_string(), f.graph.arc_count(),
                 f.description);
    }
  }
  if (json) out << j.dump(2) << '\n';
  if (out_dir && !json) fmt::print(out, "wrote {} files to {}\n", fx.size(), *out_dir);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Signed digraph spectra, energy and constructions", "sdg"};
  app.require_subcommand(1);
  app.fallthrough();

  AnalyzeArgs analyze_args;
  auto* analyze = app.add_subcommand("analyze", "characteristic polynomial, spectrum, energy and class flags");
  analyze->add_option("input", analyze_args.input, "sidigraph file, or fixture:NAME")->required();
  analyze->add_flag("--json", analyze_args.json, "JSON output");
  analyze->add_flag("--coulson", analyze_args.coulson, "also compute the energy by the Coulson integral");
  add_tolerance_flags(analyze, analyze_args.tol);

  FamilyArgs family_args;
  auto* family = app.add_subcommand("family", "generate an equienergetic or cospectral family");
  family->add_option("kind", family_args.kind, "theorem41_even, theorem41_odd or power")->required();
  family->add_option("--n", family_args.n, "order (cycle families)");
  family->add_option("--j", family_args.j, "chord parameter (cycle families)");
  family->add_option("--k", family_args.k, "number of factors (power)");
  family->add_option("--s1", family_args.s1, "first factor (power): file or fixture:NAME");
  family->add_option("--s2", family_args.s2, "second factor (power): file or fixture:NAME");
  family->add_option("--out-dir", family_args.out_dir, "write members as .sdg files here");
  family->add_flag("--json", family_args.json, "JSON output");
  add_tolerance_flags(family, family_args.tol);

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "run a verification suite");
  check->add_option("suite", check_args.suite,
                    "oracle, delta-forms, coulson, theorem41, products, paper-values or all")
      ->required();
  check->add_flag("--json", check_args.json, "JSON output");
  check->add_option("--seed", check_args.seed, "seed for the random cases")->capture_default_str();
  add_tolerance_flags(check, check_args.tol);

  SearchArgs search_args;
  auto* search = app.add_subcommand("search", "find sidigraphs with a given characteristic polynomial");
  search->add_option("--n", search_args.n, "order")->required();
  search->add_option("--target", search_args.target, "polynomial, leading coefficient first")->required();
  search->add_flag("--strongly-connected", search_args.strongly_connected);
  search->add_flag("--non-balanced", search_args.non_balanced, "require a negative cycle");
  search->add_flag("--bipartite,!--non-bipartite", [&](std::int64_t v) { search_args.bipartite = v > 0; });
  search->add_flag("--symmetric,!--non-symmetric", [&](std::int64_t v) { search_args.symmetric = v > 0; });
  search->add_option("--max-arcs", search_args.max_arcs);
  search->add_option("--underlying", search_args.underlying, "charpoly required of the underlying digraph");
  search->add_option("--mode", search_args.mode)->check(CLI::IsMember({"auto", "exhaustive", "random"}))
      ->capture_default_str();
  search->add_option("--budget", search_args.budget, "graphs drawn in random mode")->capture_default_str();
  search->add_option("--seed", search_args.seed)->capture_default_str();
  search->add_option("--limit", search_args.limit, "stop after this many results");
  search->add_flag("--json", search_args.json, "JSON output");

  std::string prod_a, prod_b;
  std::optional<std::string> prod_out;
  auto* product = app.add_subcommand("product", "Cartesian product of two sidigraphs");
  product->add_option("first", prod_a, "file or fixture:NAME")->required();
  product->add_option("second", prod_b, "file or fixture:NAME")->required();
  product->add_option("-o,--output", prod_out, "write to this file instead of stdout");

  std::string cmp_a, cmp_b;
  bool cmp_json = false;
  Tolerances cmp_tol;
  auto* compare = app.add_subcommand("compare", "energies, cospectrality and quasi-order of two sidigraphs");
  compare->add_option("first", cmp_a)->required();
  compare->add_option("second", cmp_b)->required();
  compare->add_flag("--json", cmp_json, "JSON output");
  add_tolerance_flags(compare, cmp_tol);

  std::string poly_text;
  bool poly_json = false, poly_coulson = false;
  Tolerances poly_tol;
  auto* poly = app.add_subcommand("poly", "roots and energy of an integer polynomial");
  poly->add_option("coefficients", poly_text, "leading coefficient first, e.g. \"1 0 -3 2 0\"")->required();
  poly->add_flag("--json", poly_json, "JSON output");
  poly->add_flag("--coulson", poly_coulson, "also compute the Coulson integral");
  add_tolerance_flags(poly, poly_tol);

  std::optional<std::string> fx_out;
  bool fx_json = false;
  auto* fixtures = app.add_subcommand("fixtures", "list (and optionally write) the shipped 4-vertex fixtures");
  fixtures->add_option("--out-dir", fx_out, "write NAME.sdg files here");
  fixtures->add_flag("--json", fx_json, "JSON output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*analyze) return cmd_analyze(analyze_args, out);
    if (*family) return cmd_family(family_args, out);
    if (*check) return cmd_check(check_args, out, err);
    if (*search) return cmd_search(search_args, out);
    if (*product) return cmd_product(prod_a, prod_b, prod_out, out);
    if (*compare) return cmd_compare(cmp_a, cmp_b, cmp_json, cmp_tol, out);
    if (*poly) return cmd_poly(poly_text, poly_json, poly_coulson, poly_tol, out);
    if (*fixtures) return cmd_fixtures(fx_out, fx_json, out);
  } catch (const ParseError& e) {
    fmt::print(err, "parse error: {}\n", e.what());
    return kExitUsage;
  } catch (const InvalidFamilySpec& e) {
    fmt::print(err, "invalid family: {}\n", e.what());
    return kExitUsage;
  } catch (const InvalidArgument& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitUsage;
  } catch (const InvalidGraph& e) {
    fmt::print(err, "invalid graph: {}\n", e.what());
    return kExitUsage;
  } catch (const OrderMismatch& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitUsage;
  } catch (const Error& e) {
    fmt::print(err, "failed: {}\n", e.what());
    return kExitCheckFailed;
  }
  return kExitUsage;
}

}  // namespace sdg::cli
