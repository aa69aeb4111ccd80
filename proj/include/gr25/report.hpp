#pragma once

// Suite reports: a list of named checks with observed and expected values,
// rendered as text (one line per check) or as a JSON document that parses
// back to the same report.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace gr25 {

enum class CheckStatus { Pass, Fail, Info };

std::string to_string(CheckStatus s);        // "pass" | "fail" | "info"
CheckStatus parse_check_status(std::string_view s);

struct Check {
  std::string id;
  std::string anchor;    // the mathematical statement being checked
  CheckStatus status = CheckStatus::Info;
  std::string observed;
  std::string expected;  // value or bound; empty for info checks
  double elapsed = 0.0;  // seconds

  friend bool operator==(const Check&, const Check&) = default;
};

/// Pass when cond holds, Fail otherwise.
Check make_check(std::string id, std::string anchor, bool cond, std::string observed, std::string expected);
Check make_info(std::string id, std::string anchor, std::string observed);

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<std::uint32_t> primes;
  std::vector<Check> checks;

  /// Every non-info check passed (true for an empty report).
  bool passed() const;
  std::size_t count(CheckStatus s) const;

  friend bool operator==(const SuiteReport&, const SuiteReport&) = default;
};

enum class ReportFormat { Text, Machine };

ReportFormat parse_report_format(std::string_view s);  // "text" | "machine"

/// Timings are left out unless requested, so repeated runs are byte-identical.
std::string emit_report(const SuiteReport& r, ReportFormat format, bool include_timings = false);

/// Inverse of the machine format. Throws std::invalid_argument on a malformed document.
SuiteReport parse_machine_report(std::string_view text);

}  // namespace gr25
