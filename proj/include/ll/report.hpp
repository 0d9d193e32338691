#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace ll {

struct CheckResult {
  std::string name;
  std::string paper_anchor;
  std::string status;  // "pass" | "fail" | "error"
  std::string details;
};

CheckResult make_check(const std::string& name, const std::string& anchor, bool pass,
                       const std::string& details = "");

struct ReportDocument {
  std::string command;
  nlohmann::json params = nlohmann::json::object();
  std::vector<CheckResult> checks;

  int count(const std::string& status) const;
  bool all_pass() const { return count("fail") == 0 && count("error") == 0; }
  nlohmann::json to_json() const;
  std::string render_text() const;
};

/// UTF-8 JSON with sorted keys, newline-terminated, written atomically
/// (temp file + rename).  Identical documents produce identical bytes.
void emit_report(const ReportDocument& doc, const std::string& path);

}  // namespace ll
