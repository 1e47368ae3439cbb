#pragma once

#include <algorithm>
#include <iterator>
#include <string>
#include <utility>
#include <vector>

namespace epsalg {

/// Outcome of one named check inside a verification suite.
struct Check {
  std::string case_id;
  bool passed = false;
  std::string payload;
};

/// Ordered list of checks produced by a verifier. Failed checks carry the counterexample
/// in their payload.
class Report {
 public:
  Report() = default;
  explicit Report(std::string suite) : suite_(std::move(suite)) {}

  const std::string& suite() const { return suite_; }
  const std::vector<Check>& checks() const { return checks_; }

  void add(std::string case_id, bool passed, std::string payload = {}) {
    checks_.push_back({std::move(case_id), passed, std::move(payload)});
  }

  void merge(const Report& other) {
    checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
  }

  bool passed() const {
    return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.passed; });
  }

  std::vector<Check> failures() const {
    std::vector<Check> out;
    std::copy_if(checks_.begin(), checks_.end(), std::back_inserter(out),
                 [](const Check& c) { return !c.passed; });
    return out;
  }

  double seconds = 0.0;

 private:
  std::string suite_;
  std::vector<Check> checks_;
};

}  // namespace epsalg
