#pragma once

// Named verification suites. Each suite runs a battery of exact checks and
// returns a SuiteReport; "all" concatenates the others with prefixed ids.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "gr25/report.hpp"

namespace gr25 {

struct SuiteOptions {
  std::uint64_t seed = 42;
  std::uint32_t prime = 10007;  // field for identity checks
  int trials = 20;              // randomized trials per check
};

class UnknownSuite : public std::invalid_argument {
 public:
  explicit UnknownSuite(const std::string& name);
};

/// lemma43, lemma44, lemma45, lemma46, invariant, plethysm, bwb, section5, all.
const std::vector<std::string>& suite_names();

/// Throws UnknownSuite for an unlisted name and std::invalid_argument for
/// trials < 1 or a prime below 5.
SuiteReport run_suite(const std::string& name, const SuiteOptions& options = {});

}  // namespace gr25
