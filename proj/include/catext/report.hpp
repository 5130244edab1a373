#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace catext {

enum class Severity { fail, info };

// One violated (or noteworthy) check. `check` names the axiom class with a
// dot-separated path, `witness` is a rendered tuple of the indices involved.
struct Finding {
  Severity severity = Severity::fail;
  std::string check;
  std::string witness;
  std::optional<double> value;
  std::optional<double> tolerance;
};

struct Report {
  std::vector<Finding> findings;

  bool passed() const {
    for (const auto& f : findings)
      if (f.severity == Severity::fail) return false;
    return true;
  }

  std::size_t failure_count() const {
    std::size_t n = 0;
    for (const auto& f : findings)
      if (f.severity == Severity::fail) ++n;
    return n;
  }

  void fail(std::string check, std::string witness) {
    findings.push_back({Severity::fail, std::move(check), std::move(witness), {}, {}});
  }

  void fail_num(std::string check, std::string witness, double value, double tol) {
    findings.push_back({Severity::fail, std::move(check), std::move(witness), value, tol});
  }

  void info(std::string check, std::string witness) {
    findings.push_back({Severity::info, std::move(check), std::move(witness), {}, {}});
  }

  void merge(const Report& other) {
    findings.insert(findings.end(), other.findings.begin(), other.findings.end());
  }

  // Deterministic order regardless of sweep order.
  void sort() {
    std::stable_sort(findings.begin(), findings.end(),
                     [](const Finding& a, const Finding& b) {
                       if (a.check != b.check) return a.check < b.check;
                       return a.witness < b.witness;
                     });
  }

  bool has(const std::string& check_prefix) const {
    for (const auto& f : findings)
      if (f.check.rfind(check_prefix, 0) == 0) return true;
    return false;
  }

  std::string summary(std::size_t max_lines = 12) const {
    std::string s;
    std::size_t n = 0;
    for (const auto& f : findings) {
      if (n++ == max_lines) {
        s += "  ...\n";
        break;
      }
      s += "  [";
      s += (f.severity == Severity::fail ? "fail" : "info");
      s += "] " + f.check + " at " + f.witness + "\n";
    }
    return s;
  }
};

// Thrown by constructors that refuse structurally invalid input. Carries the
// violation report so callers can surface witnesses.
struct Refusal : std::runtime_error {
  Report report;
  explicit Refusal(const std::string& msg, Report r = {})
      : std::runtime_error(msg), report(std::move(r)) {}
};

}  // namespace catext
