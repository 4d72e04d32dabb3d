#include "workbench/report.hpp"

#include <algorithm>
#include <sstream>

namespace workbench {

void Report::add(std::string name, bool pass, nlohmann::json witness) {
  checks_.push_back({std::move(name), pass, std::move(witness)});
}

void Report::append(const Report& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
  for (const auto& [k, v] : other.results_.items()) results_[k] = v;
  lines_.insert(lines_.end(), other.lines_.begin(), other.lines_.end());
}

std::size_t Report::failures() const {
  return static_cast<std::size_t>(std::count_if(checks_.begin(), checks_.end(), [](const auto& c) { return !c.pass; }));
}

namespace {

std::vector<CheckRecord> sorted(std::vector<CheckRecord> checks) {
  std::stable_sort(checks.begin(), checks.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
  return checks;
}

}  // namespace

nlohmann::json Report::to_json() const {
  nlohmann::json doc;
  doc["version"] = kArtifactVersion;
  doc["command"] = command_;
  doc["parameters"] = parameters_;
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : sorted(checks_))
    checks.push_back({{"name", c.name}, {"status", c.pass ? "pass" : "fail"}, {"witness", c.witness}});
  doc["checks"] = std::move(checks);
  doc["summary"] = {{"checks", checks_.size()}, {"failed", failures()}, {"status", pass() ? "pass" : "fail"}};
  if (!results_.empty()) doc["results"] = results_;
  doc["timing"] = {{"elapsed_ms", elapsed_ms_}};
  return doc;
}

std::string Report::to_text() const {
  std::ostringstream out;
  for (const auto& l : lines_) out << l << '\n';
  if (checks_.empty()) return out.str();
  for (const auto& c : sorted(checks_)) {
    out << (c.pass ? "PASS " : "FAIL ") << c.name;
    if (!c.pass && !c.witness.empty()) out << "  " << c.witness.dump();
    out << '\n';
  }
  out << checks_.size() << " checks, " << failures() << " failed\n";
  return out.str();
}

nlohmann::json normalized(nlohmann::json report) {
  report.erase("timing");
  return report;
}

}  // namespace workbench
