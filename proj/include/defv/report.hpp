#ifndef DEFV_REPORT_HPP
#define DEFV_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace defv {

struct CheckRecord {
  std::string name;
  std::string status;  // pass | fail | skipped
  std::string detail;
  std::string anchor;  // stable topic identifier for the verified statement
};

struct Report {
  std::string scenario;
  int64_t p = 0;
  std::vector<std::string> params;  // "key=value" strings, fixed order
  std::vector<CheckRecord> checks;
  int64_t elapsed_ms = 0;

  void add(const std::string& name, bool pass, const std::string& detail,
           const std::string& anchor);
  void add_skipped(const std::string& name, const std::string& detail,
                   const std::string& anchor);
  bool all_pass() const;
  const CheckRecord* first_failure() const;
};

// Human-readable rendering with one line per check.
std::string emit_text(const std::vector<Report>& reports, bool include_timing);
// Canonical JSON with a stable field order. Timing fields are included only
// on request so that default reports are byte-identical across runs.
std::string emit_json(const std::vector<Report>& reports, bool include_timing);

}  // namespace defv

#endif
