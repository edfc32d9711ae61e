#pragma once

#include "enumerate.hpp"

#include <functional>
#include <string>

namespace kpoly {

struct VerifyOptions {
  int k_max = 12;
  int n_max = 6;
  uint64_t budget = 10'000'000;
  int workers = 1;
  /// Test hook: maps (k, n, closed-form value) to the value actually compared
  /// against enumeration. Identity when absent.
  std::function<int64_t(int, int, int64_t)> formula_hook;
};

struct VerifyReport {
  bool ok = true;
  std::string text;
};

/// Runs the cross-validation suites (chain predicates against exact geometry,
/// closed forms against enumeration, naive against glue generation, graph
/// splits, degree and edge bounds, full revalidation) and reports one
/// PASS/FAIL line per suite.
VerifyReport run_verify(const VerifyOptions& opt);

}  // namespace kpoly
