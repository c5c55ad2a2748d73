#ifndef PGX_REPORT_HPP
#define PGX_REPORT_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace pgx {

// Thrown when an enumeration would exceed the configured resource cap.
class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Thrown on malformed input documents.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct Finding {
  std::string check;
  bool passed = false;
  std::string witness;  // empty when passed, or informational note
};

// Accumulates per-axiom pass/fail findings with witnesses.
class ValidationReport {
 public:
  void require(const std::string& check, bool ok, const std::string& witness = "") {
    findings_.push_back({check, ok, ok ? std::string{} : witness});
  }
  void note(const std::string& check, const std::string& text) {
    findings_.push_back({check, true, text});
  }
  void merge(const ValidationReport& other, const std::string& prefix = "") {
    for (const auto& f : other.findings_)
      findings_.push_back({prefix.empty() ? f.check : prefix + ": " + f.check, f.passed, f.witness});
  }

  bool ok() const {
    for (const auto& f : findings_)
      if (!f.passed) return false;
    return true;
  }
  const std::vector<Finding>& findings() const { return findings_; }
  std::vector<Finding> failures() const {
    std::vector<Finding> out;
    for (const auto& f : findings_)
      if (!f.passed) out.push_back(f);
    return out;
  }
  std::string summary() const {
    if (ok()) return "ok (" + std::to_string(findings_.size()) + " checks)";
    std::string s = "FAILED:";
    for (const auto& f : failures()) {
      s += " [" + f.check;
      if (!f.witness.empty()) s += " @ " + f.witness;
      s += "]";
    }
    return s;
  }

 private:
  std::vector<Finding> findings_;
};

}  // namespace pgx

#endif
