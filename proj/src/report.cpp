#include "ll/report.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace ll {

CheckResult make_check(const std::string& name, const std::string& anchor, bool pass,
                       const std::string& details) {
  return {name, anchor, pass ? "pass" : "fail", details};
}

int ReportDocument::count(const std::string& status) const {
  int n = 0;
  for (const auto& c : checks)
    if (c.status == status) ++n;
  return n;
}

nlohmann::json ReportDocument::to_json() const {
  nlohmann::json j;
  j["command"] = command;
  j["params"] = params;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json e;
    e["name"] = c.name;
    e["paper_anchor"] = c.paper_anchor;
    e["status"] = c.status;
    e["details"] = c.details;
    arr.push_back(std::move(e));
  }
  j["checks"] = std::move(arr);
  j["summary"] = {{"pass", count("pass")}, {"fail", count("fail")}, {"error", count("error")}};
  return j;
}

std::string ReportDocument::render_text() const {
  std::ostringstream out;
  out << "== " << command << " ==\n";
  for (const auto& c : checks) {
    out << "[" << c.status << "] " << c.name;
    if (!c.details.empty()) out << " -- " << c.details;
    out << "\n";
  }
  out << "summary: " << count("pass") << " pass, " << count("fail") << " fail, "
      << count("error") << " error\n";
  return out.str();
}

void emit_report(const ReportDocument& doc, const std::string& path) {
  std::string payload = doc.to_json().dump(2) + "\n";
  std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out << payload;
    if (!out.flush()) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

}  // namespace ll
