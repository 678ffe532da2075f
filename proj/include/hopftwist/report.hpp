#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hopftwist {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;  // witness for failures, summary for passes
};

// Named pass/fail checks plus recorded invariants (name, value as text).
class Report {
 public:
  Report() = default;
  explicit Report(std::string title) : title_(std::move(title)) {}

  const std::string& title() const { return title_; }
  void add(std::string name, bool passed, std::string detail = {}) {
    checks_.push_back({std::move(name), passed, std::move(detail)});
  }
  void record(std::string name, std::string value) { values_.emplace_back(std::move(name), std::move(value)); }
  void record(std::string name, long value) { record(std::move(name), std::to_string(value)); }
  void merge(const Report& other, const std::string& prefix = {}) {
    for (const auto& c : other.checks_) checks_.push_back({prefix + c.name, c.passed, c.detail});
    for (const auto& [k, v] : other.values_) values_.emplace_back(prefix + k, v);
  }

  bool passed() const {
    for (const auto& c : checks_)
      if (!c.passed) return false;
    return true;
  }
  const Check* first_failure() const {
    for (const auto& c : checks_)
      if (!c.passed) return &c;
    return nullptr;
  }
  const Check* find(const std::string& name) const {
    for (const auto& c : checks_)
      if (c.name == name) return &c;
    return nullptr;
  }
  const std::string* value(const std::string& name) const {
    for (const auto& [k, v] : values_)
      if (k == name) return &v;
    return nullptr;
  }
  const std::vector<Check>& checks() const { return checks_; }
  const std::vector<std::pair<std::string, std::string>>& values() const { return values_; }

 private:
  std::string title_;
  std::vector<Check> checks_;
  std::vector<std::pair<std::string, std::string>> values_;
};

// Raised when an operation that must produce a certified object cannot.
class CertificateFailure : public std::runtime_error {
 public:
  explicit CertificateFailure(Report r)
      : std::runtime_error(describe(r)), report_(std::move(r)) {}
  const Report& report() const { return report_; }

 private:
  static std::string describe(const Report& r) {
    const Check* c = r.first_failure();
    if (!c) return r.title() + ": failed";
    return r.title() + ": " + c->name + " failed" + (c->detail.empty() ? "" : " (" + c->detail + ")");
  }
  Report report_;
};

}  // namespace hopftwist
