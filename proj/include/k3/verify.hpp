#pragma once

#include <string>
#include <vector>

#include "k3/report.hpp"

namespace k3 {

struct ScenarioResult {
  std::string name;
  bool pass = false;
  std::string expected;
  std::string actual;
  std::string anchor;
};

struct VerificationReport {
  std::vector<ScenarioResult> scenarios;
  bool all_pass() const;
};

/// Replay names in suite order.
const std::vector<std::string>& scenario_names();

/// "all" or one scenario name; DomainError on an unknown name. Each scenario
/// recomputes its result and compares the rendered string with a frozen
/// expectation, so the report is deterministic.
VerificationReport verify_paper(const std::string& selector);

Json verification_json(const VerificationReport& report);
std::string verification_text(const VerificationReport& report);

}  // namespace k3
