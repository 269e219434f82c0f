// Runs every check suite and folds the rows into one line per acceptance
// criterion. Exit status is nonzero if any criterion fails.
#include <chrono>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "sdg/checks.hpp"

namespace {

const char* const kTitles[] = {
    "",
    "charpoly oracles agree (exhaustive n <= 3, random n = 4..8)",
    "cycle family polynomials exact",
    "cycle family pairs noncospectral and equienergetic",
    "reference energies and high-degree root residuals",
    "fixture polynomials, spectra and classes",
    "Coulson integral agrees with root sums",
    "even-coefficient forms on generated class members",
    "quasi-order monotonicity and arc deletion",
    "product structure and power family",
    "negation invariance equivalences",
};

}  // namespace

int main() {
  std::map<int, std::vector<sdg::CheckRow>> by_criterion;
  for (const std::string& suite : sdg::check_suite_names()) {
    const auto t0 = std::chrono::steady_clock::now();
    const sdg::SuiteReport r = sdg::run_check_suite(suite);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("suite %-13s %s (%.1fs)\n", suite.c_str(), r.passed() ? "ok" : "FAILED", secs);
    for (const sdg::CheckRow& row : r.rows) {
      if (!row.passed) std::printf("  failed row: %s -- %s\n", row.name.c_str(), row.measured.c_str());
      if (row.criterion > 0) by_criterion[row.criterion].push_back(row);
    }
  }

  int failures = 0;
  for (int c = 1; c <= 10; ++c) {
    const auto it = by_criterion.find(c);
    bool ok = it != by_criterion.end() && !it->second.empty();
    std::size_t rows = 0;
    if (it != by_criterion.end()) {
      for (const sdg::CheckRow& row : it->second) ok = ok && row.passed;
      rows = it->second.size();
    }
    failures += !ok;
    std::printf("AC%-2d %s  %s [%zu checks]\n", c, ok ? "PASS" : "FAIL", kTitles[c], rows);
  }
  return failures == 0 ? 0 : 1;
}
