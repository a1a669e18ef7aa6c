#pragma once

#include <string>
#include <vector>

namespace permfact {

/// Outcome of an identity check: one line per case, plus the first failure.
struct VerificationReport {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::vector<std::string> lines;
  std::string first_failure;

  void record(bool ok, const std::string& line) {
    ++cases;
    lines.push_back((ok ? "PASS " : "FAIL ") + line);
    if (!ok && passed) {
      passed = false;
      first_failure = line;
    }
  }

  void merge(const VerificationReport& other) {
    for (const auto& line : other.lines) lines.push_back(line);
    cases += other.cases;
    if (!other.passed && passed) {
      passed = false;
      first_failure = other.first_failure;
    }
  }
};

}  // namespace permfact
