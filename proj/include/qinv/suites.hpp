#pragma once

#include <optional>
#include <string>
#include <vector>

namespace qinv {

/// Result of one identity check. residual is the canonical form of LHS - RHS
/// (empty on success); note carries extra detail such as an exact ratio.
struct IdentityResult {
  std::string id;
  std::string description;
  bool pass = false;
  std::string residual;
  std::string note;
  double seconds = 0;
};

struct SuiteResult {
  std::string name;
  std::vector<IdentityResult> identities;
  double seconds = 0;

  bool passed() const;
  std::size_t failures() const;
};

struct SuiteOptions {
  unsigned workers = 1;
  /// Compares both sides at a random rational point before the exact check.
  bool precheck = false;
  /// Restricts the run to identities whose id starts with one of these.
  std::vector<std::string> only;
  /// Suites run by `run-suite` when no name is given.
  std::vector<std::string> suites;
};

/// Named suites, `all` last.
std::vector<std::string> suite_names();
bool is_suite(const std::string& name);

/// Runs a suite; results are ordered by registration, independent of the
/// worker count. Throws std::invalid_argument on an unknown name.
SuiteResult run_suite(const std::string& name, const SuiteOptions& options = {});

/// key=value lines (workers, precheck, only, suites); '#' starts a comment.
SuiteOptions load_suite_config(const std::string& path, SuiteOptions base = {});

/// QINV_WORKERS overrides the worker count.
void apply_environment(SuiteOptions& options);

/// One line per identity, then a summary line. Timings are opt-in so that the
/// default output is reproducible.
std::string format_suite_text(const SuiteResult& result, bool timings = false, std::size_t residual_limit = 300);
std::string format_suite_json(const SuiteResult& result, bool timings = false);

}  // namespace qinv
