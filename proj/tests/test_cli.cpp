#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ll/cli.hpp"
#include "ll/graded.hpp"
#include "ll/report.hpp"

using namespace ll;

namespace {

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("verify algebra exit codes") {
  CHECK(cli::run({"verify", "algebra", "--name", "D"}) == 0);
  CHECK(cli::run({"verify", "algebra", "--name", "Q"}) == 2);
  CHECK(cli::run({"verify", "algebra"}) == 2);
  CHECK(cli::run({"verify", "algebra", "--file", "/nonexistent/x.json"}) == 2);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(cli::run({"bogus"}) == 2);
  CHECK(cli::run({"verify"}) == 2);
  CHECK(cli::run({"verify", "clifford"}) == 2);  // --d required
  CHECK(cli::run({"solve", "free", "--k-wave", "abc"}) == 2);
}

TEST_CASE("failed checks exit with 1") {
  CHECK(cli::run({"verify", "clifford", "--d", "2"}) == 1);
}

TEST_CASE("reports are deterministic and well formed") {
  std::string p1 = temp_path("ll_report_a.json");
  std::string p2 = temp_path("ll_report_b.json");
  REQUIRE(cli::run({"--output", p1, "verify", "relations"}) == 0);
  REQUIRE(cli::run({"--output", p2, "verify", "relations"}) == 0);
  std::string bytes1 = slurp(p1), bytes2 = slurp(p2);
  CHECK(bytes1 == bytes2);
  CHECK(bytes1.back() == '\n');

  nlohmann::json j = nlohmann::json::parse(bytes1);
  CHECK(j.at("command") == "verify relations");
  CHECK(j.at("checks").size() >= 28);
  int pass = 0, fail = 0, error = 0;
  for (const auto& c : j.at("checks")) {
    CHECK_FALSE(c.at("name").get<std::string>().empty());
    CHECK_FALSE(c.at("paper_anchor").get<std::string>().empty());
    std::string s = c.at("status").get<std::string>();
    if (s == "pass") ++pass;
    if (s == "fail") ++fail;
    if (s == "error") ++error;
  }
  CHECK(j.at("summary").at("pass") == pass);
  CHECK(j.at("summary").at("fail") == fail);
  CHECK(j.at("summary").at("error") == error);
  CHECK(fail == 0);
  CHECK(error == 0);
  std::filesystem::remove(p1);
  std::filesystem::remove(p2);
}

TEST_CASE("exit code mirrors report contents") {
  std::string p = temp_path("ll_report_d2.json");
  CHECK(cli::run({"--output", p, "verify", "clifford", "--d", "2"}) == 1);
  nlohmann::json j = nlohmann::json::parse(slurp(p));
  CHECK(j.at("summary").at("fail").get<int>() > 0);
  std::filesystem::remove(p);
}

TEST_CASE("empty check list renders a zero summary") {
  ReportDocument doc;
  doc.command = "noop";
  std::string p = temp_path("ll_report_empty.json");
  emit_report(doc, p);
  nlohmann::json j = nlohmann::json::parse(slurp(p));
  CHECK(j.at("summary") == nlohmann::json({{"pass", 0}, {"fail", 0}, {"error", 0}}));
  CHECK(j.at("checks").empty());
  std::filesystem::remove(p);
}

TEST_CASE("algebra files round trip through the CLI") {
  std::string p = temp_path("ll_algebra_L.json");
  {
    std::ofstream out(p);
    out << save_algebra_json(builtin_algebra("L"));
  }
  CHECK(cli::run({"verify", "algebra", "--file", p}) == 0);
  std::filesystem::remove(p);
}

TEST_CASE("solver subcommands") {
  CHECK(cli::run({"solve", "free"}) == 0);
  CHECK(cli::run({"solve", "free", "--k-wave", "3/2"}) == 0);
  CHECK(cli::run({"solve", "free", "--k-wave", "-2"}) == 0);
  CHECK(cli::run({"solve", "free", "--k-wave", "0"}) == 0);
  CHECK(cli::run({"solve", "harmonic", "--n", "3", "--beta", "2", "--k", "1"}) == 0);
  CHECK(cli::run({"solve", "harmonic", "--n", "9", "--beta", "2", "--k", "1"}) == 2);
}

TEST_CASE("symbolic harmonic report names the eigenvalue") {
  std::string p = temp_path("ll_report_h3.json");
  REQUIRE(cli::run({"--output", p, "solve", "harmonic", "--n", "3", "--beta", "2", "--k", "1"}) ==
          0);
  std::string bytes = slurp(p);
  CHECK(bytes.find("7/2") != std::string::npos);
  std::filesystem::remove(p);
}
