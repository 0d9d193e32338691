#include "ll/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "ll/checks.hpp"
#include "ll/parser.hpp"

namespace ll::cli {

namespace {

// "p" or "p/q" -> exact rational
std::optional<Rational> parse_rational_arg(const std::string& text) {
  size_t slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      long v = std::stol(text);
      return Rational(v);
    }
    long num = std::stol(text.substr(0, slash));
    long den = std::stol(text.substr(slash + 1));
    if (den == 0) return std::nullopt;
    return frac(num, den);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

int finish(ReportDocument& doc, const std::string& output_path) {
  std::cout << doc.render_text();
  if (!output_path.empty()) {
    try {
      emit_report(doc, output_path);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 1;
    }
  }
  return doc.all_pass() ? 0 : 1;
}

void append(ReportDocument& doc, std::vector<CheckResult> checks) {
  for (auto& c : checks) doc.checks.push_back(std::move(c));
}

int run_verify_clifford(int d, const std::string& output) {
  ReportDocument doc;
  doc.command = "verify clifford";
  doc.params["d"] = d;
  append(doc, checks::clifford_construction(d));
  return finish(doc, output);
}

int run_verify_algebra(const std::string& name, const std::string& file,
                       const std::string& output) {
  ReportDocument doc;
  doc.command = "verify algebra";
  AlgebraSpec spec;
  try {
    if (!file.empty()) {
      std::ifstream in(file);
      if (!in) {
        std::cerr << "error: cannot read " << file << "\n";
        return 2;
      }
      std::stringstream buffer;
      buffer << in.rdbuf();
      spec = load_algebra_json(buffer.str());
      doc.params["file"] = file;
    } else {
      spec = builtin_algebra(name);
      doc.params["name"] = name;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  doc.params["n"] = spec.n;
  doc.params["factor"] = factor_name(spec.factor);
  doc.params["basis_size"] = spec.basis.size();
  append(doc, checks::algebra(spec));
  return finish(doc, output);
}

int run_verify_relations(const std::string& output) {
  ReportDocument doc;
  doc.command = "verify relations";
  append(doc, checks::gamma_relations());
  append(doc, checks::relation_tables());
  return finish(doc, output);
}

int run_verify_ode(const std::string& output) {
  ReportDocument doc;
  doc.command = "verify ode";
  append(doc, checks::coefficient_ode());
  return finish(doc, output);
}

int run_solve_free(const std::string& k_wave_text, const std::string& output) {
  ReportDocument doc;
  doc.command = "solve free";
  ScalarSum k_wave;
  if (k_wave_text.empty()) {
    k_wave = ScalarSum::symbol("kw");
    doc.params["k_wave"] = "kw (symbolic)";
  } else {
    auto q = parse_rational_arg(k_wave_text);
    if (!q) {
      std::cerr << "error: --k-wave expects a rational like 3/2\n";
      return 2;
    }
    k_wave = ScalarSum::rational(*q);
    doc.params["k_wave"] = rational_to_string(*q);
  }
  append(doc, checks::free_solutions(k_wave));
  return finish(doc, output);
}

int run_solve_harmonic(int n, bool numeric, int grid_n, double domain, double beta, double k,
                       const std::string& output) {
  if (n < 0 || n > 8) {
    std::cerr << "error: --n must lie in [0, 8]\n";
    return 2;
  }
  ReportDocument doc;
  doc.command = "solve harmonic";
  doc.params["n"] = n;
  doc.params["beta"] = beta;
  doc.params["k"] = k;
  doc.params["numeric"] = numeric;

  append(doc, checks::harmonic_solutions(n));
  {
    // echo the symbolic eigenvalue of the requested level
    ScalarSum energy = ops::omega() * ScalarSum::rational(frac(2 * n + 1, 2));
    std::ostringstream detail;
    detail << "gamma_+-eigenvalue " << (2 * n + 1) << "/2 * omega = " << energy.to_string();
    double numeric_energy = std::sqrt(2.0 * k / beta) * (n + 0.5);
    detail << " = " << numeric_energy << " at beta=" << beta << ", k=" << k;
    doc.checks.push_back({"requested level " + std::to_string(n), "is the angular frequency",
                          "pass", detail.str()});
  }
  if (numeric) {
    doc.params["grid"] = grid_n;
    doc.params["domain"] = domain;
    try {
      Grid g{domain, grid_n};
      append(doc, checks::numeric_spectrum(beta, k, g, std::min(n + 1, 8)));
    } catch (const std::exception& e) {
      doc.checks.push_back({"numeric spectrum", "is the angular frequency", "error", e.what()});
    }
  }
  return finish(doc, output);
}

}  // namespace

int run(const std::vector<std::string>& args) {
  CLI::App app{"Colour-algebra toolkit for the 1+1d Levy-Leblond equation"};
  app.require_subcommand(1);
  std::string output;
  app.add_option("--output", output, "write the JSON report to this path");

  auto* verify = app.add_subcommand("verify", "run a named verification suite");
  verify->fallthrough();
  verify->require_subcommand(1);
  int clifford_d = 1;
  auto* vc = verify->add_subcommand("clifford", "chirality construction in Cl(1,d)");
  vc->fallthrough();
  vc->add_option("--d", clifford_d, "spatial dimension")->required();

  std::string algebra_name, algebra_file;
  auto* va = verify->add_subcommand("algebra", "closure and Jacobi for a graded algebra");
  va->fallthrough();
  auto* name_opt = va->add_option("--name", algebra_name, "builtin algebra: A, Dplus, D1, D, L");
  auto* file_opt = va->add_option("--file", algebra_file, "algebra spec JSON file");
  name_opt->excludes(file_opt);

  auto* vr = verify->add_subcommand("relations", "gamma and operator relation tables");
  vr->fallthrough();
  auto* vo = verify->add_subcommand("ode", "coefficient ODE closed forms");
  vo->fallthrough();

  auto* solve = app.add_subcommand("solve", "construct and verify eigenstates");
  solve->fallthrough();
  solve->require_subcommand(1);
  std::string k_wave_text;
  auto* sf = solve->add_subcommand("free", "plane-wave eigenstates of the free equation");
  sf->fallthrough();
  sf->add_option("--k-wave", k_wave_text, "rational momentum parameter (default: symbolic)");

  int harmonic_n = 0, grid_n = 800;
  double domain = 12.0, beta = 2.0, spring = 1.0;
  bool numeric = false;
  auto* sh = solve->add_subcommand("harmonic", "harmonic ladder eigenstates");
  sh->fallthrough();
  sh->add_option("--n", harmonic_n, "level")->required();
  sh->add_flag("--numeric", numeric, "also run the finite-difference checks");
  sh->add_option("--grid", grid_n, "grid points for --numeric");
  sh->add_option("--domain", domain, "half-width L for --numeric");
  sh->add_option("--beta", beta, "beta parameter");
  sh->add_option("--k", spring, "spring constant");

  std::vector<const char*> argv;
  argv.push_back("llalg");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::cerr << (e.get_exit_code() == 0 ? "" : "error: ") << e.what() << "\n";
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (vc->parsed()) return run_verify_clifford(clifford_d, output);
    if (va->parsed()) {
      if (algebra_name.empty() && algebra_file.empty()) {
        std::cerr << "error: verify algebra needs --name or --file\n";
        return 2;
      }
      return run_verify_algebra(algebra_name, algebra_file, output);
    }
    if (vr->parsed()) return run_verify_relations(output);
    if (vo->parsed()) return run_verify_ode(output);
    if (sf->parsed()) return run_solve_free(k_wave_text, output);
    if (sh->parsed())
      return run_solve_harmonic(harmonic_n, numeric, grid_n, domain, beta, spring, output);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  std::cerr << "error: no subcommand\n";
  return 2;
}

int run(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args);
}

}  // namespace ll::cli
