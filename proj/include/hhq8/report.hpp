#pragma once

#include <string>
#include <vector>

namespace hhq8 {

struct Check {
  std::string id;
  bool passed = false;
  std::string detail;  // counterexample or note; empty when nothing to say
};

/// Named list of pass/fail checks; passes iff every check passes.
class Report {
 public:
  explicit Report(std::string suite = {}) : suite_(std::move(suite)) {}

  const std::string& suite() const { return suite_; }
  const std::vector<Check>& checks() const { return checks_; }

  void add(std::string id, bool passed, std::string detail = {});
  /// Appends the checks of another report, prefixing ids with its suite name.
  void merge(const Report& other);

  bool passed() const;
  std::size_t failures() const;

  std::string to_text() const;
  std::string to_json() const;

 private:
  std::string suite_;
  std::vector<Check> checks_;
};

}  // namespace hhq8
