#include <gtest/gtest.h>

#include <set>

#include "gr25/suites.hpp"

using namespace gr25;

TEST(Suites, NamesAndErrors) {
  const auto& names = suite_names();
  EXPECT_EQ(names.size(), 9u);
  EXPECT_EQ(names.back(), "all");
  try {
    run_suite("lemma99");
    FAIL() << "expected UnknownSuite";
  } catch (const UnknownSuite& e) {
    EXPECT_NE(std::string(e.what()).find("lemma43"), std::string::npos);
  }
  EXPECT_THROW(run_suite("lemma43", {1, 10007, 0}), std::invalid_argument);
  EXPECT_THROW(run_suite("lemma43", {1, 9, 20}), std::invalid_argument);
}

TEST(Suites, Lemma43SeedOne) {
  const auto r = run_suite("lemma43", {1, 10007, 20});
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.checks.front().observed, "50/50");
  EXPECT_EQ(r.seed, 1u);
}

TEST(Suites, DeterministicMachineReports) {
  for (const std::string name : {"lemma44", "lemma46", "invariant"}) {
    const SuiteOptions o{7, 10007, 5};
    const auto a = emit_report(run_suite(name, o), ReportFormat::Machine);
    const auto b = emit_report(run_suite(name, o), ReportFormat::Machine);
    EXPECT_EQ(a, b) << name;
    EXPECT_EQ(parse_machine_report(a), parse_machine_report(b));
  }
}

TEST(Suites, IdsAreUniqueAndAnchored) {
  for (const std::string name : {"lemma43", "lemma45", "lemma46", "bwb"}) {
    const auto r = run_suite(name, {3, 10007, 3});
    std::set<std::string> ids;
    for (const auto& c : r.checks) {
      EXPECT_TRUE(ids.insert(c.id).second) << name << ": duplicate " << c.id;
      EXPECT_FALSE(c.anchor.empty()) << c.id;
    }
    EXPECT_TRUE(r.passed()) << name;
  }
}

TEST(Suites, PlethysmReportsMultiplicityTwo) {
  const auto r = run_suite("plethysm", {99, 10007, 20});
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.checks.front().observed, "2");
}
