#pragma once

#include <string>
#include <utility>
#include <vector>

namespace parthopf {

/// One named axiom or property, with the first violating witness on failure.
struct Check {
  std::string name;
  bool passed = true;
  std::string witness;
};

/// Ordered list of checks. Every verifier returns one; order is fixed by the
/// verifier so reports are reproducible byte for byte.
class Report {
 public:
  Report() = default;
  explicit Report(std::string title) : title_(std::move(title)) {}

  const std::string& title() const { return title_; }
  const std::vector<Check>& checks() const { return checks_; }

  void pass(std::string name) { checks_.push_back({std::move(name), true, {}}); }
  void fail(std::string name, std::string witness) {
    checks_.push_back({std::move(name), false, std::move(witness)});
  }
  void record(std::string name, bool ok, std::string witness = {}) {
    checks_.push_back({std::move(name), ok, ok ? std::string{} : std::move(witness)});
  }

  /// Append every check of other, prefixing names with "prefix/".
  void merge(const std::string& prefix, const Report& other) {
    for (const auto& c : other.checks_) {
      checks_.push_back({prefix.empty() ? c.name : prefix + "/" + c.name, c.passed, c.witness});
    }
  }

  bool ok() const {
    for (const auto& c : checks_) {
      if (!c.passed) return false;
    }
    return true;
  }

  bool passed(const std::string& name) const {
    for (const auto& c : checks_) {
      if (c.name == name) return c.passed;
    }
    return false;
  }

  const Check* first_failure() const {
    for (const auto& c : checks_) {
      if (!c.passed) return &c;
    }
    return nullptr;
  }

  std::string to_text() const {
    std::string out;
    if (!title_.empty()) out += "# " + title_ + "\n";
    for (const auto& c : checks_) {
      out += c.passed ? "PASS " : "FAIL ";
      out += c.name;
      if (!c.passed && !c.witness.empty()) out += ": " + c.witness;
      out += "\n";
    }
    return out;
  }

 private:
  std::string title_;
  std::vector<Check> checks_;
};

}  // namespace parthopf
