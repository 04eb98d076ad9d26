#pragma once

// Named check results with exact witnesses, rendered as text or JSON.

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace modcurve {

enum class Status { pass, fail, value };

std::string_view to_string(Status s);

struct CheckResult {
  std::string check_id;
  Status status = Status::value;
  std::string witness;
  /// The claim being checked, in words.
  std::string paper_ref;
};

class VerificationReport {
 public:
  /// Throws Error if the id is already present.
  void add(std::string check_id, Status status, std::string witness, std::string claim);
  void check(std::string check_id, bool ok, std::string witness, std::string claim) {
    add(std::move(check_id), ok ? Status::pass : Status::fail, std::move(witness), std::move(claim));
  }
  void merge(const VerificationReport& other);

  const std::vector<CheckResult>& checks() const { return checks_; }
  const CheckResult* find(std::string_view check_id) const;
  std::size_t count(Status s) const;
  bool all_pass() const { return count(Status::fail) == 0; }

  /// {"checks": [{check_id, status, witness, paper_ref}, ...], "summary": {...}}
  std::string to_json(int indent = 2) const;
  /// One "PASS|FAIL|VALUE  id  witness" line per check.
  void write_text(std::ostream& out) const;

 private:
  std::vector<CheckResult> checks_;
};

}  // namespace modcurve
