#include "hhq8/report.hpp"

#include <algorithm>

#include "json.hpp"

namespace hhq8 {

void Report::add(std::string id, bool passed, std::string detail) {
  checks_.push_back({std::move(id), passed, std::move(detail)});
}

void Report::merge(const Report& other) {
  for (const auto& c : other.checks_) {
    checks_.push_back({other.suite_.empty() ? c.id : other.suite_ + "/" + c.id, c.passed, c.detail});
  }
}

bool Report::passed() const { return failures() == 0; }

std::size_t Report::failures() const {
  return static_cast<std::size_t>(std::count_if(checks_.begin(), checks_.end(), [](const Check& c) { return !c.passed; }));
}

std::string Report::to_text() const {
  std::string out;
  for (const auto& c : checks_) {
    out += c.passed ? "PASS " : "FAIL ";
    out += c.id;
    if (!c.detail.empty()) out += ": " + c.detail;
    out += '\n';
  }
  out += suite_ + ": " + std::to_string(checks_.size() - failures()) + "/" + std::to_string(checks_.size()) +
         " checks passed\n";
  return out;
}

std::string Report::to_json() const {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : checks_) {
    nlohmann::json j = {{"id", c.id}, {"status", c.passed ? "pass" : "fail"}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    checks.push_back(std::move(j));
  }
  const nlohmann::json doc = {{"suite", suite_}, {"status", passed() ? "pass" : "fail"}, {"checks", checks}};
  return doc.dump(2);
}

}  // namespace hhq8
