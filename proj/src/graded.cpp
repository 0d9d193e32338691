#include "ll/graded.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>
#include <sstream>

#include "ll/parser.hpp"

namespace ll {

DegreeVector DegreeVector::operator+(const DegreeVector& o) const {
  if (bits.size() != o.bits.size()) throw graded_error("degree rank mismatch");
  DegreeVector out;
  out.bits.resize(bits.size());
  for (size_t i = 0; i < bits.size(); ++i) out.bits[i] = (bits[i] + o.bits[i]) & 1;
  return out;
}

std::string DegreeVector::to_string() const {
  std::string s;
  for (int b : bits) s += static_cast<char>('0' + b);
  return s;
}

std::string factor_name(CommutationFactorKind k) {
  return k == CommutationFactorKind::Super ? "super" : "colour2";
}

int commutation_factor_value(CommutationFactorKind kind, const DegreeVector& a,
                             const DegreeVector& b) {
  if (a.rank() != b.rank()) throw graded_error("degree rank mismatch");
  int e = 0;
  switch (kind) {
    case CommutationFactorKind::Super:
      for (size_t i = 0; i < a.rank(); ++i) e += a.bits[i] * b.bits[i];
      break;
    case CommutationFactorKind::Colour2:
      if (a.rank() != 2) throw graded_error("colour2 factor requires rank 2");
      e = a.bits[0] * b.bits[1] - a.bits[1] * b.bits[0];
      break;
  }
  return (e % 2) ? -1 : 1;
}

void AlgebraSpec::validate() const {
  if (n != 2 && n != 3) throw graded_error("grading rank must be 2 or 3");
  if (factor == CommutationFactorKind::Colour2 && n != 2)
    throw graded_error("colour2 factor requires n = 2");
  std::set<std::string> labels;
  for (const auto& e : basis) {
    if (e.degree.rank() != static_cast<size_t>(n))
      throw graded_error("degree rank mismatch for " + e.label);
    for (int b : e.degree.bits)
      if (b != 0 && b != 1) throw graded_error("degree bits must be 0 or 1");
    if (!labels.insert(e.label).second) throw graded_error("duplicate label " + e.label);
    if (e.op.is_zero()) throw graded_error("zero basis operator " + e.label);
  }
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j)
      if (basis[i].op == basis[j].op)
        throw graded_error("basis operators not pairwise distinct: " + basis[i].label + ", " +
                           basis[j].label);
}

bool StructureReport::all_decomposed() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const BracketEntry& e) { return e.decomposed; }) &&
         jacobi_failures.empty();
}

const BracketEntry* StructureReport::find(const std::string& left,
                                          const std::string& right) const {
  for (const auto& e : entries)
    if (e.left == left && e.right == right) return &e;
  return nullptr;
}

bool decompose_in_span(const OperatorPoly& target, const std::vector<const BasisElement*>& basis,
                       std::vector<std::pair<std::string, ScalarSum>>& coefficients,
                       std::string& failure) {
  coefficients.clear();
  failure.clear();

  std::map<OperatorKey, size_t> key_index;
  auto index_keys = [&key_index](const OperatorPoly& p) {
    for (const auto& [key, coeff] : p.terms()) key_index.try_emplace(key, key_index.size());
  };
  for (const auto* b : basis) index_keys(b->op);
  index_keys(target);

  const size_t rows = key_index.size(), cols = basis.size();
  std::vector<std::vector<ScalarSum>> m(rows, std::vector<ScalarSum>(cols));
  std::vector<ScalarSum> rhs(rows);
  for (size_t c = 0; c < cols; ++c)
    for (const auto& [key, coeff] : basis[c]->op.terms()) m[key_index.at(key)][c] = coeff;
  for (const auto& [key, coeff] : target.terms()) rhs[key_index.at(key)] = coeff;

  std::vector<int> pivot_of_col(cols, -1);
  std::vector<bool> row_used(rows, false);
  for (size_t c = 0; c < cols; ++c) {
    int found = -1;
    bool any_nonzero = false;
    for (size_t r = 0; r < rows; ++r) {
      if (row_used[r] || m[r][c].is_zero()) continue;
      any_nonzero = true;
      if (m[r][c].as_monomial()) {
        found = static_cast<int>(r);
        break;
      }
    }
    if (found < 0) {
      if (!any_nonzero) continue;  // free column
      failure = "no monomial-invertible pivot for basis element " + basis[c]->label;
      return false;
    }
    row_used[found] = true;
    pivot_of_col[c] = found;
    const ScalarMonomial pivot = *m[found][c].as_monomial();
    for (size_t r = 0; r < rows; ++r) {
      if (static_cast<int>(r) == found || m[r][c].is_zero()) continue;
      ScalarSum f = scalar_div(m[r][c], pivot);
      for (size_t c2 = 0; c2 < cols; ++c2)
        if (!m[found][c2].is_zero()) m[r][c2] -= f * m[found][c2];
      rhs[r] -= f * rhs[found];
    }
  }

  for (size_t r = 0; r < rows; ++r) {
    if (!row_used[r] && !rhs[r].is_zero()) {
      failure = "residual outside span: " + rhs[r].to_string();
      return false;
    }
  }

  OperatorPoly reconstruction;
  for (size_t c = 0; c < cols; ++c) {
    ScalarSum coeff;  // zero
    if (pivot_of_col[c] >= 0) {
      const size_t r = static_cast<size_t>(pivot_of_col[c]);
      coeff = scalar_div(rhs[r], *m[r][c].as_monomial());
    }
    if (!coeff.is_zero()) {
      coefficients.emplace_back(basis[c]->label, coeff);
      reconstruction += basis[c]->op.scaled(coeff);
    }
  }
  if (reconstruction != target) {
    coefficients.clear();
    failure = "reconstruction mismatch";
    return false;
  }
  return true;
}

namespace {

StructureReport table_impl(const AlgebraSpec& spec, bool restrict_to_sector) {
  spec.validate();
  StructureReport report;
  for (const auto& a : spec.basis) {
    for (const auto& b : spec.basis) {
      BracketEntry entry;
      entry.left = a.label;
      entry.right = b.label;
      entry.epsilon = commutation_factor_value(spec.factor, a.degree, b.degree);
      entry.bracket = op_bracket(a.op, b.op, entry.epsilon);
      std::vector<const BasisElement*> span;
      const DegreeVector target_degree = a.degree + b.degree;
      for (const auto& e : spec.basis)
        if (!restrict_to_sector || e.degree == target_degree) span.push_back(&e);
      entry.decomposed =
          decompose_in_span(entry.bracket, span, entry.coefficients, entry.failure);
      report.entries.push_back(std::move(entry));
    }
  }
  return report;
}

}  // namespace

StructureReport bracket_table(const AlgebraSpec& spec) { return table_impl(spec, false); }

StructureReport closure_check(const AlgebraSpec& spec) { return table_impl(spec, true); }

StructureReport jacobi_check(const AlgebraSpec& spec) {
  spec.validate();
  StructureReport report;
  auto eps = [&spec](const DegreeVector& a, const DegreeVector& b) {
    return commutation_factor_value(spec.factor, a, b);
  };
  auto cbrak = [&eps](const BasisElement& u, const DegreeVector& deg_v, const OperatorPoly& v,
                      int outer_sign) {
    OperatorPoly b = op_bracket(u.op, v, eps(u.degree, deg_v));
    return outer_sign == 1 ? b : -b;
  };
  for (const auto& x : spec.basis) {
    for (const auto& y : spec.basis) {
      for (const auto& z : spec.basis) {
        OperatorPoly yz = op_bracket(y.op, z.op, eps(y.degree, z.degree));
        OperatorPoly zx = op_bracket(z.op, x.op, eps(z.degree, x.degree));
        OperatorPoly xy = op_bracket(x.op, y.op, eps(x.degree, y.degree));
        OperatorPoly j = cbrak(x, y.degree + z.degree, yz, eps(z.degree, x.degree)) +
                         cbrak(y, z.degree + x.degree, zx, eps(x.degree, y.degree)) +
                         cbrak(z, x.degree + y.degree, xy, eps(y.degree, z.degree));
        if (!j.is_zero()) report.jacobi_failures.push_back({x.label, y.label, z.label, j});
      }
    }
  }
  return report;
}

AlgebraSpec builtin_algebra(const std::string& name) {
  using B = GammaBlade;
  OperatorPoly I = OperatorPoly::identity();
  OperatorPoly P = ops::momentum();
  OperatorPoly D = ops::d_plus();
  OperatorPoly P1 = ops::parity1();
  OperatorPoly Hs_free = ops::schrodinger_free();

  AlgebraSpec spec;
  spec.name = name;
  if (name == "A") {
    spec.n = 2;
    spec.factor = CommutationFactorKind::Colour2;
    spec.basis = {{"Phat", {0, 1}, P}, {"Dplus", {0, 1}, D}, {"P1", {1, 0}, P1}};
  } else if (name == "Dplus") {
    spec.n = 2;
    spec.factor = CommutationFactorKind::Super;
    spec.basis = {{"I", {0, 0}, I},
                  {"Hsch", {0, 0}, Hs_free},
                  {"Phat", {0, 1}, P},
                  {"Dplus", {1, 0}, D},
                  {"P1", {1, 1}, P1}};
  } else if (name == "D1") {
    spec.n = 2;
    spec.factor = CommutationFactorKind::Super;
    spec.basis = {{"I", {0, 0}, I},
                  {"P1", {0, 1}, P1},
                  {"Phat", {1, 1}, P},
                  {"Dplus", {1, 1}, D}};
  } else if (name == "D") {
    spec.n = 3;
    spec.factor = CommutationFactorKind::Super;
    spec.basis = {{"I", {0, 0, 0}, I},
                  {"Hsch", {0, 0, 0}, Hs_free},
                  {"Phat", {0, 0, 1}, P},
                  {"Dplus", {0, 1, 0}, D},
                  {"P1", {1, 1, 1}, P1}};
  } else if (name == "L") {
    OperatorPoly Hs = ops::hsch_harmonic();
    OperatorPoly Hll = ops::hll_harmonic();
    OperatorPoly b = ops::ladder_b();
    OperatorPoly bd = ops::ladder_b_dagger();
    OperatorPoly c = ops::charge_c();
    OperatorPoly gp = OperatorPoly::blade(B::GammaPlus);
    spec.n = 2;
    spec.factor = CommutationFactorKind::Super;
    spec.basis = {{"I", {0, 0}, I},
                  {"Hsch", {0, 0}, Hs},
                  {"b2", {0, 0}, b.pow(2)},
                  {"bd2", {0, 0}, bd.pow(2)},
                  {"b", {0, 1}, b},
                  {"bd", {0, 1}, bd},
                  {"Hll", {1, 0}, Hll},
                  {"c", {1, 0}, c},
                  {"gp", {1, 0}, gp},
                  {"gpHsch", {1, 0}, op_mul(gp, Hs)},
                  {"gpb2", {1, 0}, op_mul(gp, b.pow(2))},
                  {"gpbd2", {1, 0}, op_mul(gp, bd.pow(2))},
                  {"gpb", {1, 1}, op_mul(gp, b)},
                  {"gpbd", {1, 1}, op_mul(gp, bd)}};
  } else {
    throw graded_error("unknown algebra: " + name);
  }
  spec.validate();
  return spec;
}

AlgebraSpec load_algebra_json(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw graded_error(std::string("bad algebra file: ") + e.what());
  }
  AlgebraSpec spec;
  try {
    spec.name = j.at("name").get<std::string>();
    spec.n = j.at("n").get<int>();
    std::string f = j.at("factor").get<std::string>();
    if (f == "super")
      spec.factor = CommutationFactorKind::Super;
    else if (f == "colour2")
      spec.factor = CommutationFactorKind::Colour2;
    else
      throw graded_error("unknown commutation factor: " + f);
    for (const auto& e : j.at("basis")) {
      BasisElement be;
      be.label = e.at("label").get<std::string>();
      be.degree = DegreeVector(e.at("degree").get<std::vector<int>>());
      be.op = parse_operator(e.at("op").get<std::string>());
      spec.basis.push_back(std::move(be));
    }
  } catch (const nlohmann::json::exception& e) {
    throw graded_error(std::string("bad algebra file: ") + e.what());
  }
  spec.validate();
  return spec;
}

std::string save_algebra_json(const AlgebraSpec& spec) {
  nlohmann::json j;
  j["name"] = spec.name;
  j["n"] = spec.n;
  j["factor"] = factor_name(spec.factor);
  nlohmann::json basis = nlohmann::json::array();
  for (const auto& e : spec.basis) {
    nlohmann::json el;
    el["label"] = e.label;
    el["degree"] = e.degree.bits;
    el["op"] = render_operator(e.op);
    basis.push_back(std::move(el));
  }
  j["basis"] = std::move(basis);
  return j.dump(2) + "\n";
}

}  // namespace ll
