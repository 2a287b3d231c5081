#pragma once

#include <string>
#include <vector>

#include "etaforge/numeric.hpp"

namespace etaforge {

struct SuiteResult {
  SuiteResult() = default;
  explicit SuiteResult(std::string n) : name(std::move(n)) {}

  std::string name;
  int cases = 0;
  std::vector<std::string> failures;
  std::vector<std::string> warnings;
  bool ok() const { return failures.empty(); }
};

/// Tunables; -1 keeps a suite's published default.
struct VerifyOptions {
  int max_size = -1;
  int max_k = -1;
  int m = -1;
  int n = -1;
  int max_p = -1;
  int max_length = -1;
  unsigned long long seed = 0;
  Budget budget;
};

std::vector<std::string> verify_suite_names();

/// Run one named suite.  Throws DomainError for unknown names.
SuiteResult verify_suite(const std::string& name, const VerifyOptions& opts = {});

}  // namespace etaforge
