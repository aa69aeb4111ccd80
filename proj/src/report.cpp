#include "gr25/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace gr25 {

using nlohmann::ordered_json;

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::Info:
      return "info";
  }
  return "info";
}

CheckStatus parse_check_status(std::string_view s) {
  if (s == "pass") return CheckStatus::Pass;
  if (s == "fail") return CheckStatus::Fail;
  if (s == "info") return CheckStatus::Info;
  throw std::invalid_argument("unknown check status '" + std::string(s) + "'");
}

Check make_check(std::string id, std::string anchor, bool cond, std::string observed, std::string expected) {
  return {std::move(id), std::move(anchor), cond ? CheckStatus::Pass : CheckStatus::Fail, std::move(observed),
          std::move(expected), 0.0};
}

Check make_info(std::string id, std::string anchor, std::string observed) {
  return {std::move(id), std::move(anchor), CheckStatus::Info, std::move(observed), "", 0.0};
}

bool SuiteReport::passed() const { return count(CheckStatus::Fail) == 0; }

std::size_t SuiteReport::count(CheckStatus s) const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [s](const Check& c) { return c.status == s; }));
}

ReportFormat parse_report_format(std::string_view s) {
  if (s == "text") return ReportFormat::Text;
  if (s == "machine") return ReportFormat::Machine;
  throw std::invalid_argument("unknown format '" + std::string(s) + "' (expected text or machine)");
}

namespace {

std::string emit_text(const SuiteReport& r, bool timings) {
  std::ostringstream os;
  os << "suite " << r.suite << "  seed " << r.seed << "  primes ";
  for (std::size_t i = 0; i < r.primes.size(); ++i) os << (i ? "," : "") << r.primes[i];
  if (r.primes.empty()) os << "-";
  os << '\n';
  for (const auto& c : r.checks) {
    std::string tag = to_string(c.status);
    std::transform(tag.begin(), tag.end(), tag.begin(), ::toupper);
    os << tag << "  " << c.id << "  observed " << c.observed;
    if (!c.expected.empty()) os << "  expected " << c.expected;
    if (timings) os << "  (" << std::fixed << std::setprecision(3) << c.elapsed << " s)";
    os << "  [" << c.anchor << "]\n";
  }
  os << "overall " << (r.passed() ? "PASS" : "FAIL") << "  (" << r.count(CheckStatus::Pass) << " pass, "
     << r.count(CheckStatus::Fail) << " fail, " << r.count(CheckStatus::Info) << " info)\n";
  return os.str();
}

std::string emit_machine(const SuiteReport& r, bool timings) {
  ordered_json doc;
  doc["suite"] = r.suite;
  doc["seed"] = r.seed;
  doc["primes"] = r.primes;
  doc["overall"] = r.passed() ? "pass" : "fail";
  doc["checks"] = ordered_json::array();
  for (const auto& c : r.checks) {
    ordered_json j;
    j["id"] = c.id;
    j["anchor"] = c.anchor;
    j["status"] = to_string(c.status);
    j["observed"] = c.observed;
    j["expected"] = c.expected;
    if (timings) j["elapsed"] = c.elapsed;
    doc["checks"].push_back(std::move(j));
  }
  return doc.dump(2) + "\n";
}

}  // namespace

std::string emit_report(const SuiteReport& r, ReportFormat format, bool include_timings) {
  return format == ReportFormat::Text ? emit_text(r, include_timings) : emit_machine(r, include_timings);
}

SuiteReport parse_machine_report(std::string_view text) {
  try {
    const ordered_json doc = ordered_json::parse(text);
    SuiteReport r;
    r.suite = doc.at("suite").get<std::string>();
    r.seed = doc.at("seed").get<std::uint64_t>();
    r.primes = doc.at("primes").get<std::vector<std::uint32_t>>();
    for (const auto& j : doc.at("checks")) {
      Check c;
      c.id = j.at("id").get<std::string>();
      c.anchor = j.at("anchor").get<std::string>();
      c.status = parse_check_status(j.at("status").get<std::string>());
      c.observed = j.at("observed").get<std::string>();
      c.expected = j.at("expected").get<std::string>();
      if (j.contains("elapsed")) c.elapsed = j.at("elapsed").get<double>();
      r.checks.push_back(std::move(c));
    }
    const std::string overall = doc.at("overall").get<std::string>();
    if (overall != (r.passed() ? "pass" : "fail")) throw std::invalid_argument("overall status disagrees with checks");
    return r;
  } catch (const ordered_json::exception& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
}

}  // namespace gr25
