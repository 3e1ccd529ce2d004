#pragma once

#include <functional>
#include <string>
#include <vector>

namespace compchains {

struct CheckResult {
  std::string name;
  bool pass = true;
  std::vector<std::string> notes;  // failures first, then diagnostics
  double seconds = 0;
  double budget_seconds = 0;  // 0: no limit

  void expect(bool ok, const std::string& what);
  void note(const std::string& what) { notes.push_back(what); }
};

struct NamedCheck {
  std::string name;
  double budget_seconds = 0;
  std::function<void(CheckResult&)> run;
};

/// The eleven acceptance criteria, in order.
std::vector<NamedCheck> acceptance_criteria();
/// Module invariants; quick uses the acceptance bounds, otherwise larger ones.
std::vector<NamedCheck> invariant_suites(bool quick);

/// Runs one check, timing it; exceptions and exceeded budgets count as failures.
CheckResult run_check(const NamedCheck& c);

}  // namespace compchains
