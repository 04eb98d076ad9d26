#include "modcurve/report.hpp"

#include <algorithm>
#include <ostream>

#include <nlohmann/json.hpp>

#include "modcurve/errors.hpp"

namespace modcurve {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::value: return "value";
  }
  return "value";
}

void VerificationReport::add(std::string check_id, Status status, std::string witness,
                             std::string claim) {
  if (find(check_id)) throw Error("duplicate check id: " + check_id);
  checks_.push_back({std::move(check_id), status, std::move(witness), std::move(claim)});
}

void VerificationReport::merge(const VerificationReport& other) {
  for (const auto& c : other.checks_) add(c.check_id, c.status, c.witness, c.paper_ref);
}

const CheckResult* VerificationReport::find(std::string_view check_id) const {
  auto it = std::find_if(checks_.begin(), checks_.end(),
                         [&](const CheckResult& c) { return c.check_id == check_id; });
  return it == checks_.end() ? nullptr : &*it;
}

std::size_t VerificationReport::count(Status s) const {
  return static_cast<std::size_t>(
      std::count_if(checks_.begin(), checks_.end(), [&](const CheckResult& c) { return c.status == s; }));
}

std::string VerificationReport::to_json(int indent) const {
  nlohmann::ordered_json doc;
  doc["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks_) {
    nlohmann::ordered_json j;
    j["check_id"] = c.check_id;
    j["status"] = std::string(to_string(c.status));
    j["witness"] = c.witness;
    j["paper_ref"] = c.paper_ref;
    doc["checks"].push_back(std::move(j));
  }
  doc["summary"] = {{"total", checks_.size()},
                    {"pass", count(Status::pass)},
                    {"fail", count(Status::fail)},
                    {"value", count(Status::value)}};
  return doc.dump(indent);
}

void VerificationReport::write_text(std::ostream& out) const {
  std::size_t width = 0;
  for (const auto& c : checks_) width = std::max(width, c.check_id.size());
  for (const auto& c : checks_) {
    std::string tag(to_string(c.status));
    std::transform(tag.begin(), tag.end(), tag.begin(), ::toupper);
    out << tag << std::string(6 - tag.size(), ' ') << c.check_id
        << std::string(width - c.check_id.size() + 2, ' ') << c.witness << '\n';
  }
  out << checks_.size() << " checks: " << count(Status::pass) << " pass, " << count(Status::fail)
      << " fail, " << count(Status::value) << " reported\n";
}

}  // namespace modcurve
