#include "defv/report.hpp"

#include <sstream>

#include "json.hpp"

namespace defv {

void Report::add(const std::string& name, bool pass, const std::string& detail,
                 const std::string& anchor) {
  checks.push_back(CheckRecord{name, pass ? "pass" : "fail", detail, anchor});
}

void Report::add_skipped(const std::string& name, const std::string& detail,
                         const std::string& anchor) {
  checks.push_back(CheckRecord{name, "skipped", detail, anchor});
}

bool Report::all_pass() const {
  for (const auto& c : checks)
    if (c.status == "fail") return false;
  return true;
}

const CheckRecord* Report::first_failure() const {
  for (const auto& c : checks)
    if (c.status == "fail") return &c;
  return nullptr;
}

std::string emit_text(const std::vector<Report>& reports, bool include_timing) {
  std::ostringstream os;
  for (const auto& r : reports) {
    os << "== " << r.scenario << " p=" << r.p;
    for (const auto& kv : r.params) os << " " << kv;
    os << " ==\n";
    for (const auto& c : r.checks) {
      os << "  [" << c.status << "] " << c.name << " (" << c.anchor << ")";
      if (!c.detail.empty()) os << ": " << c.detail;
      os << "\n";
    }
    os << "  overall: " << (r.all_pass() ? "pass" : "FAIL");
    if (const CheckRecord* f = r.first_failure()) os << " (first failure: " << f->name << ")";
    if (include_timing) os << " (" << r.elapsed_ms << " ms)";
    os << "\n";
  }
  return os.str();
}

std::string emit_json(const std::vector<Report>& reports, bool include_timing) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json jr;
    jr["scenario"] = r.scenario;
    jr["p"] = r.p;
    nlohmann::ordered_json params = nlohmann::ordered_json::array();
    for (const auto& kv : r.params) params.push_back(kv);
    jr["params"] = params;
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& c : r.checks) {
      nlohmann::ordered_json jc;
      jc["name"] = c.name;
      jc["status"] = c.status;
      jc["detail"] = c.detail;
      jc["anchor"] = c.anchor;
      checks.push_back(jc);
    }
    jr["checks"] = checks;
    jr["status"] = r.all_pass() ? "pass" : "fail";
    if (include_timing) jr["elapsed_ms"] = r.elapsed_ms;
    out.push_back(jr);
  }
  return out.dump(2) + "\n";
}

}  // namespace defv
