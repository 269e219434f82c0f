#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sdg/spectra.hpp"

namespace sdg {

struct CheckTolerances {
  double class_tol = kDefaultClassTol;
  double energy_tol = 1e-4;  // integral vs root-sum agreement
  double quad_tol = 1e-6;    // abs_tol handed to the quadrature
};

struct CheckRow {
  std::string name;
  bool passed = false;
  std::string measured;
  int criterion = 0;  // acceptance criterion covered, 0 if none
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckRow> rows;

  bool passed() const;
};

/// oracle, delta-forms, coulson, theorem41, products, paper-values
const std::vector<std::string>& check_suite_names();

/// Runs one suite. Random inputs are drawn from `seed`, so reports are
/// reproducible. Throws InvalidArgument for an unknown suite name. A check
/// that throws is reported as a failed row, not propagated.
SuiteReport run_check_suite(const std::string& name, const CheckTolerances& tol = {}, std::uint64_t seed = 20240);

}  // namespace sdg
