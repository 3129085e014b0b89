#pragma once
// Property suites over the whole library. Each check counts its cases and
// keeps the first counterexample.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace assoc {

struct CheckResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string counterexample;
  bool ok() const { return failures == 0; }
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool ok() const;
  const CheckResult* find(const std::string& name) const;
};

struct VerifyOptions {
  std::size_t n_max = 5;
  std::size_t cases = 200;
  std::uint64_t seed = 1;
};

// Accumulates outcomes for one named check.
class Check {
 public:
  explicit Check(std::string name) { r_.name = std::move(name); }
  void expect(bool ok, const std::function<std::string()>& describe);
  // Runs body; an exception counts as a failed case.
  void run(const std::function<bool()>& body, const std::function<std::string()>& describe);
  const CheckResult& result() const { return r_; }

 private:
  CheckResult r_;
};

const std::vector<std::string>& suite_names();  // without "all"

SuiteReport verify_boundary(const VerifyOptions& o);
SuiteReport verify_delta(const VerifyOptions& o);
SuiteReport verify_degeneracy(const VerifyOptions& o);
SuiteReport verify_omega(const VerifyOptions& o);
SuiteReport verify_operad(const VerifyOptions& o);
SuiteReport verify_bar(const VerifyOptions& o);
SuiteReport verify_trees(const VerifyOptions& o);

// The last xi statement at the first position k = 1, kept out of the
// degeneracy suite because it does not hold there.
CheckResult xi_block_statement_at_start(const VerifyOptions& o);

// "all" expands to every suite; throws DomainError for unknown names.
std::vector<SuiteReport> run_suites(const std::string& name, const VerifyOptions& o);

std::string format_report(const std::vector<SuiteReport>& reports, const VerifyOptions& o);

}  // namespace assoc
